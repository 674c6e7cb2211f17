#include "mobility/alphabet.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mobility/movegen.hpp"

namespace mobility {

namespace {

constexpr std::int64_t kMaxBoard = 1'000'000;

void check_board_size(std::int64_t n, std::int64_t lo) {
  if (n < lo) throw std::domain_error("board size " + std::to_string(n) + " below " + std::to_string(lo));
  if (n > kMaxBoard) throw std::domain_error("board size above supported range 10^6");
}

MoveSet king_moves() {
  return MoveSet::leaper({{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
}
MoveSet knight_moves() { return MoveSet::leaper_pair(1, 2); }
MoveSet bishop_moves() { return MoveSet::rider({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}); }
MoveSet rook_moves() { return MoveSet::rider({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}); }

// Components of a canonical piece from its atomic vector. The bishop slot
// contributes halved diagonal-rider components (single-color convention).
PieceDef canonical_def(const std::string& id, const AtomicVec& a) {
  PieceDef def;
  def.id = id;
  for (std::int64_t k = 0; k < a[0]; ++k) def.components.push_back({king_moves(), false});
  for (std::int64_t k = 0; k < a[1]; ++k) def.components.push_back({knight_moves(), false});
  for (std::int64_t k = 0; k < a[2]; ++k) def.components.push_back({bishop_moves(), true});
  for (std::int64_t k = 0; k < a[3]; ++k) def.components.push_back({rook_moves(), false});
  return def;
}

Poly poly_from_factors(Rat scale, std::initializer_list<Poly> factors) {
  Poly p = Poly::constant(scale);
  for (const Poly& f : factors) p = p * f;
  return p;
}

// n + c
Poly lin(long long c1, long long c0) { return Poly({Rat(c0), Rat(c1)}); }
// a n^2 + b n + c
Poly quad(long long a, long long b, long long c) { return Poly({Rat(c), Rat(b), Rat(a)}); }

struct CanonicalSpec {
  const char* id;
  AtomicVec atomic;
  Poly total;
};

std::vector<CanonicalSpec> canonical_specs() {
  const Poly n = Poly::x();
  const Rat third(1, 3);
  const Rat two_thirds(2, 3);
  std::vector<CanonicalSpec> specs;
  specs.push_back({"K", {1, 0, 0, 0}, poly_from_factors(Rat(4), {lin(1, -1), lin(2, -1)})});
  specs.push_back({"N", {0, 1, 0, 0}, poly_from_factors(Rat(8), {lin(1, -1), lin(1, -2)})});
  specs.push_back({"B", {0, 0, 1, 0}, poly_from_factors(third, {n, lin(1, -1), lin(2, -1)})});
  specs.push_back({"R", {0, 0, 0, 1}, poly_from_factors(Rat(2), {lin(1, -1), n, n})});
  specs.push_back({"Q", {0, 0, 2, 1}, poly_from_factors(two_thirds, {n, lin(1, -1), lin(5, -1)})});
  specs.push_back({"AB", {0, 1, 2, 0}, poly_from_factors(two_thirds, {lin(1, -1), quad(2, 11, -24)})});
  specs.push_back({"Em", {0, 1, 0, 1}, poly_from_factors(Rat(2), {lin(1, -1), quad(1, 4, -8)})});
  specs.push_back({"C", {1, 1, 0, 0}, poly_from_factors(Rat(4), {lin(1, -1), lin(4, -5)})});
  specs.push_back({"Am", {0, 1, 2, 1}, poly_from_factors(two_thirds, {lin(1, -1), quad(5, 11, -24)})});
  specs.push_back({"Bee", {1, 0, 1, 0}, poly_from_factors(third, {lin(1, -1), lin(2, -1), lin(1, 12)})});
  specs.push_back({"AK", {1, 1, 1, 0}, poly_from_factors(third, {lin(1, -1), quad(2, 47, -60)})});
  specs.push_back({"Nork", {1, 1, 0, 1}, poly_from_factors(Rat(2), {lin(1, -1), quad(1, 8, -10)})});
  specs.push_back({"Kook", {1, 0, 0, 1}, poly_from_factors(Rat(2), {lin(1, -1), quad(1, 4, -2)})});
  return specs;
}

std::int64_t leap_arrow_count(Offset o, std::int64_t n) {
  std::int64_t a = n - std::abs(o.di);
  std::int64_t b = n - std::abs(o.dj);
  return a > 0 && b > 0 ? a * b : 0;
}

std::int64_t moveset_arrow_count(const MoveSet& ms, std::int64_t n) {
  std::int64_t total = 0;
  for (const Offset& o : ms.leaps) total += leap_arrow_count(o, n);
  for (const Offset& d : ms.rides) {
    for (std::int64_t k = 1;; ++k) {
      std::int64_t c = leap_arrow_count({static_cast<int>(k * d.di), static_cast<int>(k * d.dj)}, n);
      if (c == 0) break;
      total += c;
    }
  }
  return total;
}

void self_check_canonical(const std::vector<PieceInfo>& pieces) {
  for (const PieceInfo& p : pieces) {
    if (!p.total_poly) continue;
    for (int n = 4; n <= 8; ++n) {
      std::int64_t oracle = total_moves_bruteforce(p.def, n);
      std::int64_t closed = p.total_poly->eval(Int128(n)).to_integer().to_int64();
      if (oracle != closed)
        throw std::logic_error("catalog self-check failed for " + p.id + " at n=" + std::to_string(n));
    }
  }
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tok;
  std::string t;
  while (in >> t) tok.push_back(t);
  return tok;
}

int parse_small_int(const std::string& s) {
  std::size_t pos = 0;
  int v = std::stoi(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
  return v;
}

}  // namespace

const Alphabet& Alphabet::canonical() {
  static const Alphabet instance = [] {
    Alphabet a;
    for (auto& spec : canonical_specs()) {
      PieceInfo info;
      info.id = spec.id;
      info.atomic = spec.atomic;
      info.def = canonical_def(info.id, spec.atomic);
      info.total_poly = spec.total;
      info.basic = info.id == "K" || info.id == "N" || info.id == "B" || info.id == "R";
      a.pieces_.push_back(std::move(info));
    }
    self_check_canonical(a.pieces_);
    return a;
  }();
  return instance;
}

const PieceInfo& double_bishop() {
  static const PieceInfo instance = [] {
    PieceInfo info;
    info.id = "BB";
    info.def.id = "BB";
    info.def.components.push_back({MoveSet::rider({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}), false});
    const Poly& tb = *Alphabet::canonical().piece("B").total_poly;
    info.total_poly = tb * Rat(2);
    self_check_canonical({info});
    return info;
  }();
  return instance;
}

const PieceInfo* Alphabet::find(std::string_view id) const {
  for (const PieceInfo& p : pieces_)
    if (p.id == id) return &p;
  return nullptr;
}

const PieceInfo& Alphabet::piece(std::string_view id) const {
  const PieceInfo* p = find(id);
  if (!p) throw std::domain_error("unknown piece '" + std::string(id) + "'");
  return *p;
}

Alphabet Alphabet::with_extensions(std::string_view text) {
  Alphabet out = canonical();
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto fail = [&](const std::string& msg) {
      throw std::invalid_argument("alphabet file line " + std::to_string(lineno) + ": " + msg);
    };
    std::vector<std::string> tok = split_ws(line);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (tok.size() < 2) fail("expected 'name leaper|rider|compound ...'");
    const std::string& name = tok[0];
    if (out.find(name)) fail("duplicate piece name '" + name + "'");

    PieceInfo info;
    info.id = name;
    info.def.id = name;
    try {
      if (tok[1] == "leaper") {
        if (tok.size() != 4) fail("leaper needs exactly two integers");
        info.def.components.push_back({MoveSet::leaper_pair(parse_small_int(tok[2]), parse_small_int(tok[3])), false});
      } else if (tok[1] == "rider") {
        if (tok.size() < 4 || tok.size() % 2 != 0) fail("rider needs di dj pairs");
        std::vector<Offset> dirs;
        for (std::size_t i = 2; i + 1 < tok.size(); i += 2)
          dirs.push_back({parse_small_int(tok[i]), parse_small_int(tok[i + 1])});
        info.def.components.push_back({MoveSet::rider(std::move(dirs)), false});
      } else if (tok[1] == "compound") {
        if (tok.size() != 3) fail("compound needs 'name1+name2'");
        auto plus = tok[2].find('+');
        if (plus == std::string::npos) fail("compound needs 'name1+name2'");
        const PieceInfo& lhs = out.piece(tok[2].substr(0, plus));
        const PieceInfo& rhs = out.piece(tok[2].substr(plus + 1));
        for (const auto& c : lhs.def.components) info.def.components.push_back(c);
        for (const auto& c : rhs.def.components) info.def.components.push_back(c);
        for (std::size_t i = 0; i < info.def.components.size(); ++i)
          for (std::size_t j = i + 1; j < info.def.components.size(); ++j)
            if (arrows_overlap(info.def.components[i].moves, info.def.components[j].moves))
              fail("compound components have overlapping arrow sets");
      } else {
        fail("unknown piece kind '" + tok[1] + "'");
      }
    } catch (const std::invalid_argument& e) {
      if (std::string(e.what()).rfind("alphabet file", 0) == 0) throw;
      fail(e.what());
    } catch (const std::domain_error& e) {
      fail(e.what());
    }
    out.pieces_.push_back(std::move(info));
  }
  return out;
}

Alphabet Alphabet::with_extensions_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open alphabet file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return with_extensions(buf.str());
}

std::int64_t total_moves_closed(const PieceInfo& piece, std::int64_t n) {
  check_board_size(n, 1);
  if (piece.total_poly) return piece.total_poly->eval(Int128(n)).to_integer().to_int64();
  std::int64_t total = 0;
  for (const PieceComponent& comp : piece.def.components) {
    std::int64_t raw = moveset_arrow_count(comp.moves, n);
    if (comp.halve) {
      if (raw % 2 != 0) throw std::logic_error("odd raw count in halved component");
      raw /= 2;
    }
    total += raw;
  }
  return total;
}

Rat strength(const PieceInfo& piece, std::int64_t n) {
  check_board_size(n, 2);
  Int128 nn(n);
  Int128 pairs = nn * nn * (nn * nn - Int128(1));
  return Rat(Int128(total_moves_closed(piece, n)), pairs);
}

ParitySplit parity_split_closed(std::string_view basic_id, std::int64_t n) {
  check_board_size(n, 2);
  auto splits = [&]() -> ParitySplit {
    if (basic_id == "K") return {4 * (n - 1) * (n - 1), 4 * n * (n - 1)};
    if (basic_id == "N") return {0, 8 * (n - 1) * (n - 2)};
    if (basic_id == "BB") return {2 * n * (n - 1) * (2 * n - 1) / 3, 0};
    if (basic_id == "B") return {n * (n - 1) * (2 * n - 1) / 3, 0};
    if (basic_id == "R") {
      if (n % 2 == 0) return {n * n * (n - 2), n * n * n};
      return {n * (n - 1) * (n - 1), n * (n * n - 1)};
    }
    throw std::domain_error("no closed parity split for piece '" + std::string(basic_id) +
                            "' (basic pieces and BB only)");
  };
  return splits();
}

AsymptoticClass asymptotic_class(const PieceInfo& piece) {
  bool rider = false;
  for (const auto& comp : piece.def.components)
    if (!comp.moves.rides.empty()) rider = true;

  AsymptoticClass cls;
  cls.alpha = rider ? 1 : 2;
  Rat c(0);
  for (const auto& comp : piece.def.components) {
    Rat weight = comp.halve ? Rat(1, 2) : Rat(1);
    if (rider) {
      // Each ride direction (a, b), m = max(|a|, |b|), contributes ray
      // density 1/m - (|a|+|b|)/(2 m^2) + |a||b|/(3 m^3) to the coefficient
      // of n^3 in the arrow count; leap components are lower order.
      for (const Offset& d : comp.moves.rides) {
        std::int64_t a = std::abs(d.di), b = std::abs(d.dj);
        std::int64_t m = std::max(a, b);
        Rat density = Rat(1, m) - Rat(a + b, 2 * m * m) + Rat(a * b, 3 * m * m * m);
        c += weight * density;
      }
    } else {
      c += weight * Rat(static_cast<long long>(comp.moves.leaps.size()));
    }
  }
  cls.c = c;
  return cls;
}

Rat std_army_strength_closed(std::int64_t n) {
  check_board_size(n, 2);
  Int128 nn(n);
  Int128 num = Int128(2) * (Int128(13) * nn * nn + Int128(34) * nn - Int128(54));
  Int128 den = Int128(3) * nn * nn * (nn + Int128(1));
  return Rat(num, den);
}

}  // namespace mobility
