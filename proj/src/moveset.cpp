#include "mobility/moveset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mobility {

namespace {

void sort_unique(std::vector<Offset>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Is `leap` equal to k * dir for some k >= 1?
bool on_ray(Offset leap, Offset dir) {
  for (int k = 1;; ++k) {
    int di = dir.di * k, dj = dir.dj * k;
    if (std::abs(di) > std::abs(leap.di) || std::abs(dj) > std::abs(leap.dj)) return false;
    if (di == leap.di && dj == leap.dj) return true;
  }
}

void validate(const MoveSet& ms) {
  for (const Offset& o : ms.leaps)
    if (o.di == 0 && o.dj == 0) throw std::invalid_argument("zero leap offset");
  for (const Offset& d : ms.rides) {
    if (d.di == 0 && d.dj == 0) throw std::invalid_argument("zero ride direction");
    if (std::gcd(std::abs(d.di), std::abs(d.dj)) != 1)
      throw std::invalid_argument("ride direction is not primitive");
  }
  for (const Offset& o : ms.leaps)
    for (const Offset& d : ms.rides)
      if (on_ray(o, d)) throw std::invalid_argument("leap offset lies on a ride ray");
}

}  // namespace

MoveSet MoveSet::leaper(std::vector<Offset> offsets) { return combined(std::move(offsets), {}); }

MoveSet MoveSet::rider(std::vector<Offset> directions) { return combined({}, std::move(directions)); }

MoveSet MoveSet::combined(std::vector<Offset> offsets, std::vector<Offset> directions) {
  MoveSet ms{std::move(offsets), std::move(directions)};
  sort_unique(ms.leaps);
  sort_unique(ms.rides);
  validate(ms);
  return ms;
}

MoveSet MoveSet::leaper_pair(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("leaper pair needs nonnegative entries");
  if (a > b) std::swap(a, b);
  if (b == 0) throw std::invalid_argument("leaper pair (0, 0) is empty");
  std::vector<Offset> offs;
  int signs[2] = {1, -1};
  for (int sa : signs)
    for (int sb : signs) {
      offs.push_back({sa * a, sb * b});
      offs.push_back({sa * b, sb * a});
    }
  return leaper(std::move(offs));
}

bool arrows_overlap(const MoveSet& a, const MoveSet& b) {
  auto leap_hits = [](const std::vector<Offset>& leaps, const MoveSet& other) {
    for (const Offset& o : leaps) {
      if (std::binary_search(other.leaps.begin(), other.leaps.end(), o)) return true;
      for (const Offset& d : other.rides)
        if (on_ray(o, d)) return true;
    }
    return false;
  };
  if (leap_hits(a.leaps, b) || leap_hits(b.leaps, a)) return true;
  for (const Offset& d : a.rides)
    if (std::binary_search(b.rides.begin(), b.rides.end(), d)) return true;
  return false;
}

MoveSet PieceDef::combined_moves() const {
  std::vector<Offset> leaps, rides;
  for (const auto& c : components) {
    leaps.insert(leaps.end(), c.moves.leaps.begin(), c.moves.leaps.end());
    rides.insert(rides.end(), c.moves.rides.begin(), c.moves.rides.end());
  }
  sort_unique(leaps);
  sort_unique(rides);
  // Deliberately not validated: a compound's king steps may lie on another
  // component's rays. The union is for geometry queries only.
  MoveSet ms;
  ms.leaps = std::move(leaps);
  ms.rides = std::move(rides);
  return ms;
}

Character parse_character(const std::string& s) {
  if (s == "color") return Character::color;
  if (s == "row") return Character::row;
  if (s == "col") return Character::col;
  throw std::invalid_argument("unknown character '" + s + "' (expected color, row or col)");
}

std::string character_name(Character c) {
  switch (c) {
    case Character::color: return "color";
    case Character::row: return "row";
    case Character::col: return "col";
  }
  return "?";
}

std::int64_t MobilityGrid::sum() const {
  std::int64_t s = 0;
  for (std::int64_t c : counts) s += c;
  return s;
}

}  // namespace mobility
