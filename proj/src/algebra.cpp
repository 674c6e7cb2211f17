#include "mobility/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace mobility {

namespace {

void require_valid(const Army& f) {
  if (!f.valid())
    throw std::domain_error("invalid army '" + f.str() + "' (need K >= 1 and at most 8 pieces)");
}

void require_nontrivial(std::int64_t n) {
  if (n < 4) throw std::domain_error("board size " + std::to_string(n) + " is trivial (need n >= 4)");
}

int piece_index(std::string_view id) {
  const Alphabet& a = Alphabet::canonical();
  for (int i = 0; i < piece::count; ++i)
    if (a.at(static_cast<std::size_t>(i)).id == id) return i;
  throw std::domain_error("unknown piece '" + std::string(id) + "'");
}

const std::string& piece_id(int index) { return Alphabet::canonical().at(static_cast<std::size_t>(index)).id; }

AtomicVec normalize_sign_primitive(AtomicVec v) {
  std::int64_t g = 0;
  for (std::int64_t c : v) g = std::gcd(g, std::abs(c));
  if (g > 1)
    for (std::int64_t& c : v) c /= g;
  for (std::int64_t c : v) {
    if (c > 0) break;
    if (c < 0) {
      for (std::int64_t& x : v) x = -x;
      break;
    }
  }
  return v;
}

}  // namespace

Army Army::parse(std::string_view text) {
  Army f;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    pos = comma == std::string_view::npos ? text.size() : comma + 1;
    std::size_t colon = item.find(':');
    if (colon == std::string_view::npos)
      throw std::invalid_argument("bad army item '" + std::string(item) + "' (expected ID:count)");
    int idx = piece_index(item.substr(0, colon));
    int count = 0;
    try {
      count = std::stoi(std::string(item.substr(colon + 1)));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad multiplicity in '" + std::string(item) + "'");
    }
    if (count < 1) throw std::invalid_argument("multiplicity must be positive in '" + std::string(item) + "'");
    if (f.counts[static_cast<std::size_t>(idx)] != 0)
      throw std::invalid_argument("piece listed twice in army literal");
    f.counts[static_cast<std::size_t>(idx)] = count;
  }
  require_valid(f);
  return f;
}

Army Army::standard() {
  Army f;
  f.counts[piece::K] = 1;
  f.counts[piece::Q] = 1;
  f.counts[piece::R] = 2;
  f.counts[piece::B] = 2;
  f.counts[piece::N] = 2;
  return f;
}

int Army::total_pieces() const {
  int t = 0;
  for (int c : counts) t += c;
  return t;
}

bool Army::valid() const {
  if (counts[piece::K] < 1) return false;
  for (int c : counts)
    if (c < 0) return false;
  return total_pieces() <= 8;
}

std::string Army::str() const {
  std::string out;
  for (int i = 0; i < piece::count; ++i) {
    if (counts[static_cast<std::size_t>(i)] == 0) continue;
    if (!out.empty()) out += ",";
    out += piece_id(i) + ":" + std::to_string(counts[static_cast<std::size_t>(i)]);
  }
  return out;
}

AtomicVec atomic_vector(int index) {
  const auto& atomic = Alphabet::canonical().at(static_cast<std::size_t>(index)).atomic;
  return *atomic;
}

AtomicVec atomic_vector(std::string_view id) { return atomic_vector(piece_index(id)); }

AtomicVec army_atomic_vector(const Army& f) {
  require_valid(f);
  AtomicVec a{};
  for (int i = 0; i < piece::count; ++i) {
    AtomicVec p = atomic_vector(i);
    for (int k = 0; k < 4; ++k) a[static_cast<std::size_t>(k)] += f.counts[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(k)];
  }
  return a;
}

std::array<std::int64_t, 4> t_vector(std::int64_t n) {
  const Alphabet& a = Alphabet::canonical();
  return {total_moves_closed(a.at(piece::K), n), total_moves_closed(a.at(piece::N), n),
          total_moves_closed(a.at(piece::B), n), total_moves_closed(a.at(piece::R), n)};
}

Rat army_strength(const Army& f, std::int64_t n) {
  require_valid(f);
  AtomicVec a = army_atomic_vector(f);
  std::array<std::int64_t, 4> t = t_vector(n);
  Int128 dot(0);
  for (int k = 0; k < 4; ++k) dot += Int128(a[static_cast<std::size_t>(k)]) * Int128(t[static_cast<std::size_t>(k)]);
  Int128 nn(n);
  return Rat(dot, nn * nn * (nn * nn - Int128(1)));
}

bool in_kernel(const AtomicVec& v, std::int64_t n) {
  std::array<std::int64_t, 4> t = t_vector(n);
  Int128 dot(0);
  for (int k = 0; k < 4; ++k) dot += Int128(v[static_cast<std::size_t>(k)]) * Int128(t[static_cast<std::size_t>(k)]);
  return dot.is_zero();
}

std::vector<AtomicVec> single_piece_kernel_directions(std::int64_t n) {
  require_nontrivial(n);
  std::vector<AtomicVec> out;
  for (int p = 0; p < piece::count; ++p)
    for (int q = p + 1; q < piece::count; ++q) {
      AtomicVec d{};
      AtomicVec ap = atomic_vector(p), aq = atomic_vector(q);
      bool zero = true;
      for (int k = 0; k < 4; ++k) {
        d[static_cast<std::size_t>(k)] = ap[static_cast<std::size_t>(k)] - aq[static_cast<std::size_t>(k)];
        zero = zero && d[static_cast<std::size_t>(k)] == 0;
      }
      if (zero || !in_kernel(d, n)) continue;
      AtomicVec canon = normalize_sign_primitive(d);
      bool seen = false;
      for (const AtomicVec& v : out) seen = seen || v == canon;
      if (!seen) out.push_back(canon);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::string SubstitutionRule::str() const {
  std::string out = lhs + " <-> " + rhs[0];
  for (std::size_t i = 1; i < rhs.size(); ++i) out += "+" + rhs[i];
  return out;
}

std::vector<SubstitutionRule> substitution_rules(std::int64_t n, int max_rhs) {
  require_nontrivial(n);
  if (max_rhs < 1 || max_rhs > 2) throw std::domain_error("max_rhs must be 1 or 2");
  std::vector<std::int64_t> totals(piece::count);
  for (int i = 0; i < piece::count; ++i)
    totals[static_cast<std::size_t>(i)] = total_moves_closed(Alphabet::canonical().at(static_cast<std::size_t>(i)), n);

  auto delta_of = [](int lhs, const std::vector<int>& rhs) {
    AtomicVec d = atomic_vector(lhs);
    for (int r : rhs) {
      AtomicVec a = atomic_vector(r);
      for (int k = 0; k < 4; ++k) d[static_cast<std::size_t>(k)] -= a[static_cast<std::size_t>(k)];
    }
    return d;
  };
  auto nonzero = [](const AtomicVec& d) {
    for (std::int64_t c : d)
      if (c != 0) return true;
    return false;
  };

  std::vector<SubstitutionRule> out;
  auto emit = [&](int lhs, const std::vector<int>& rhs) {
    AtomicVec d = delta_of(lhs, rhs);
    if (!nonzero(d)) return;
    SubstitutionRule rule;
    rule.lhs = piece_id(lhs);
    for (int r : rhs) rule.rhs.push_back(piece_id(r));
    rule.delta = d;
    rule.n = n;
    rule.piece_count_delta = static_cast<int>(rhs.size()) - 1;
    out.push_back(std::move(rule));
  };

  // 1 <-> 1, each unordered pair once, the canonically earlier piece on the left.
  for (int p = 0; p < piece::count; ++p)
    for (int q = p + 1; q < piece::count; ++q)
      if (totals[static_cast<std::size_t>(p)] == totals[static_cast<std::size_t>(q)]) emit(p, {q});

  if (max_rhs >= 2)
    for (int p = 0; p < piece::count; ++p)
      for (int q1 = 0; q1 < piece::count; ++q1)
        for (int q2 = q1; q2 < piece::count; ++q2)
          if (totals[static_cast<std::size_t>(p)] ==
              totals[static_cast<std::size_t>(q1)] + totals[static_cast<std::size_t>(q2)])
            emit(p, {q1, q2});

  return out;
}

SubstitutionRule find_rule(std::int64_t n, std::string_view lhs, const std::vector<std::string>& rhs) {
  std::vector<std::string> want = rhs;
  std::sort(want.begin(), want.end(), [](const std::string& a, const std::string& b) {
    return piece_index(a) < piece_index(b);
  });
  for (SubstitutionRule& rule : substitution_rules(n, 2)) {
    if (rule.lhs == lhs && rule.rhs == want) return rule;
    if (want.size() == 1 && rule.rhs.size() == 1 && rule.lhs == want[0] && rule.rhs[0] == lhs) {
      std::swap(rule.lhs, rule.rhs[0]);
      for (std::int64_t& c : rule.delta) c = -c;
      return rule;
    }
  }
  throw std::domain_error("'" + std::string(lhs) + "' trade is not a substitution rule at n=" +
                          std::to_string(n));
}

std::set<Army> orbit_under_rule(const Army& f, const SubstitutionRule& rule) {
  require_valid(f);
  int lhs = piece_index(rule.lhs);
  std::vector<int> rhs;
  for (const std::string& id : rule.rhs) rhs.push_back(piece_index(id));

  std::set<Army> orbit{f};
  std::vector<Army> frontier{f};
  while (!frontier.empty()) {
    Army g = frontier.back();
    frontier.pop_back();
    auto try_add = [&](Army h) {
      if (h.valid() && orbit.insert(h).second) frontier.push_back(h);
    };
    // forward: one lhs piece becomes the rhs pieces
    if (g.counts[static_cast<std::size_t>(lhs)] >= 1) {
      Army h = g;
      h.counts[static_cast<std::size_t>(lhs)]--;
      for (int r : rhs) h.counts[static_cast<std::size_t>(r)]++;
      try_add(h);
    }
    // backward: the rhs pieces become one lhs piece
    Army h = g;
    bool can = true;
    for (int r : rhs) {
      if (h.counts[static_cast<std::size_t>(r)] < 1) can = false;
      if (can) h.counts[static_cast<std::size_t>(r)]--;
    }
    if (can) {
      h.counts[static_cast<std::size_t>(lhs)]++;
      try_add(h);
    }
  }
  return orbit;
}

void enumerate_armies(const std::function<void(const Army&)>& visit) {
  Army f;
  auto recurse = [&](auto&& self, int index, int remaining) -> void {
    if (index == piece::count) {
      visit(f);
      return;
    }
    int min = index == piece::K ? 1 : 0;
    for (int c = min; c <= remaining; ++c) {
      f.counts[static_cast<std::size_t>(index)] = c;
      self(self, index + 1, remaining - c);
    }
    f.counts[static_cast<std::size_t>(index)] = 0;
  };
  recurse(recurse, 0, 8);
}

std::int64_t army_count() {
  std::int64_t count = 0;
  enumerate_armies([&](const Army&) { ++count; });
  return count;
}

AppropriateArmies appropriate_armies(std::int64_t n, const Rat& target, const Rat& eps, bool collect) {
  require_nontrivial(n);
  if (eps.sign() < 0) throw std::domain_error("tolerance must be nonnegative");
  std::array<std::int64_t, 4> t = t_vector(n);
  Int128 nn(n);
  Rat pairs(nn * nn * (nn * nn - Int128(1)));

  AppropriateArmies result;
  enumerate_armies([&](const Army& f) {
    AtomicVec a{};
    for (int i = 0; i < piece::count; ++i) {
      AtomicVec p = atomic_vector(i);
      for (int k = 0; k < 4; ++k)
        a[static_cast<std::size_t>(k)] += f.counts[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(k)];
    }
    Int128 dot(0);
    for (int k = 0; k < 4; ++k) dot += Int128(a[static_cast<std::size_t>(k)]) * Int128(t[static_cast<std::size_t>(k)]);
    Rat diff = Rat(dot) / pairs - target;
    if (diff.abs() <= eps) {
      ++result.count;
      if (collect) result.matches.push_back(f);
    }
  });
  return result;
}

std::vector<AtomicVec> kernel_lattice_search(std::int64_t n, int bound) {
  require_nontrivial(n);
  if (bound < 1 || bound > 20) throw std::domain_error("bound must be in [1, 20]");
  std::array<std::int64_t, 4> t = t_vector(n);
  std::vector<AtomicVec> out;
  AtomicVec v{};
  // First nonzero component positive: one representative per +-v pair.
  for (v[0] = 0; v[0] <= bound; ++v[0]) {
    std::int64_t lo1 = v[0] > 0 ? -bound : 0;
    for (v[1] = lo1; v[1] <= bound; ++v[1]) {
      std::int64_t lo2 = (v[0] > 0 || v[1] > 0) ? -bound : 0;
      for (v[2] = lo2; v[2] <= bound; ++v[2]) {
        std::int64_t lo3 = (v[0] > 0 || v[1] > 0 || v[2] > 0) ? -bound : 0;
        for (v[3] = lo3; v[3] <= bound; ++v[3]) {
          if (v[0] == 0 && v[1] == 0 && v[2] == 0 && v[3] == 0) continue;
          std::int64_t g = std::gcd(std::gcd(std::abs(v[0]), std::abs(v[1])),
                                    std::gcd(std::abs(v[2]), std::abs(v[3])));
          if (g != 1) continue;
          // Magnitudes stay far below 2^127; plain wide arithmetic suffices.
          __int128 dot = 0;
          for (int k = 0; k < 4; ++k)
            dot += static_cast<__int128>(v[static_cast<std::size_t>(k)]) * t[static_cast<std::size_t>(k)];
          if (dot == 0) out.push_back(v);
        }
      }
    }
  }
  return out;
}

std::vector<RatioEntry> polynomial_ratio_scan() {
  const Alphabet& alphabet = Alphabet::canonical();
  std::vector<RatioEntry> out;
  for (int p = 0; p < piece::count; ++p) {
    if (!alphabet.at(static_cast<std::size_t>(p)).basic) continue;
    for (int q = 0; q < piece::count; ++q) {
      if (p == q || !alphabet.at(static_cast<std::size_t>(q)).basic) continue;
      auto quotient = poly_div_exact(*alphabet.at(static_cast<std::size_t>(p)).total_poly,
                                     *alphabet.at(static_cast<std::size_t>(q)).total_poly);
      if (quotient) out.push_back({piece_id(p), piece_id(q), *quotient});
    }
  }
  return out;
}

}  // namespace mobility
