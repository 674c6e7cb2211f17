#include "mobility/movegen.hpp"

#include <algorithm>
#include <stdexcept>

namespace mobility {

namespace {

bool on_board(int n, int i, int j) { return i >= 0 && i < n && j >= 0 && j < n; }

// Visit every arrow (from, to) of one move set starting at `from`.
template <typename Fn>
void for_each_arrow_from(const MoveSet& ms, int n, Square from, Fn&& fn) {
  for (const Offset& o : ms.leaps) {
    int ti = from.i + o.di, tj = from.j + o.dj;
    if (on_board(n, ti, tj)) fn(Square{ti, tj});
  }
  for (const Offset& d : ms.rides) {
    int ti = from.i + d.di, tj = from.j + d.dj;
    while (on_board(n, ti, tj)) {
      fn(Square{ti, tj});
      ti += d.di;
      tj += d.dj;
    }
  }
}

int chi(Character c, Square s) {
  switch (c) {
    case Character::color: return (s.i + s.j) % 2 == 0 ? 1 : -1;
    case Character::row: return s.i % 2 == 0 ? 1 : -1;
    case Character::col: return s.j % 2 == 0 ? 1 : -1;
  }
  return 1;
}

std::int64_t halve_exact(std::int64_t raw, const char* what) {
  if (raw % 2 != 0) throw std::logic_error(std::string("odd raw count in halved ") + what);
  return raw / 2;
}

}  // namespace

std::vector<Square> legal_targets(const MoveSet& ms, int n, Square from) {
  if (n < 1) throw std::out_of_range("board size must be at least 1");
  if (!on_board(n, from.i, from.j)) throw std::out_of_range("square off the board");
  std::vector<Square> out;
  for_each_arrow_from(ms, n, from, [&](Square q) { out.push_back(q); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::int64_t total_moves_bruteforce(const PieceDef& piece, int n) {
  if (n < 1) throw std::out_of_range("board size must be at least 1");
  std::int64_t total = 0;
  for (const PieceComponent& comp : piece.components) {
    std::int64_t raw = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for_each_arrow_from(comp.moves, n, Square{i, j}, [&](Square) { ++raw; });
    total += comp.halve ? halve_exact(raw, "component total") : raw;
  }
  return total;
}

MobilityGrid mobility_grid(const PieceDef& piece, int n) {
  if (n < 1) throw std::out_of_range("board size must be at least 1");
  MobilityGrid grid;
  grid.n = n;
  grid.counts.assign(static_cast<std::size_t>(n) * n, 0);
  for (const PieceComponent& comp : piece.components)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for_each_arrow_from(comp.moves, n, Square{i, j}, [&](Square) { ++grid.at(i, j); });
  return grid;
}

ParitySplit parity_split_bruteforce(const PieceDef& piece, int n, Character character) {
  if (n < 1) throw std::out_of_range("board size must be at least 1");
  ParitySplit split;
  for (const PieceComponent& comp : piece.components) {
    std::int64_t plus = 0, minus = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Square p{i, j};
        int cp = chi(character, p);
        for_each_arrow_from(comp.moves, n, p, [&](Square q) {
          (cp * chi(character, q) > 0 ? plus : minus)++;
        });
      }
    if (comp.halve) {
      plus = halve_exact(plus, "parity plus");
      minus = halve_exact(minus, "parity minus");
    }
    split.plus += plus;
    split.minus += minus;
  }
  return split;
}

}  // namespace mobility
