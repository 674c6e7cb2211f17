#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "mobility/alphabet.hpp"

namespace mobility {

// A multiset of canonical pieces: at least one K and at most eight pieces in
// total. Construction does not enforce validity (searches build candidates
// and filter); operations on armies do.
struct Army {
  std::array<int, piece::count> counts{};

  // Parses the compact form "K:1,Q:1,R:2,B:2,N:2" and validates.
  static Army parse(std::string_view text);
  static Army standard();  // {K:1, Q:1, R:2, B:2, N:2}

  int total_pieces() const;
  bool valid() const;
  std::string str() const;  // canonical piece order, zero entries omitted

  friend bool operator==(const Army& a, const Army& b) { return a.counts == b.counts; }
  friend bool operator<(const Army& a, const Army& b) { return a.counts < b.counts; }
};

// Atomic vector of one canonical piece, by index or id.
AtomicVec atomic_vector(int piece_index);
AtomicVec atomic_vector(std::string_view piece_id);

// Multiplicity-weighted sum of the piece atomic vectors.
AtomicVec army_atomic_vector(const Army& f);

// (T_K(n), T_N(n), T_B(n), T_R(n)): the board-indexed linear functional all
// army strengths factor through.
std::array<std::int64_t, 4> t_vector(std::int64_t n);

// Exact army strength (a(f) . T(n)) / (n^2 (n^2 - 1)); equals the
// multiplicity-weighted sum of the piece strengths. Requires a valid army
// and n >= 2.
Rat army_strength(const Army& f, std::int64_t n);

// v . T(n) == 0 over exact integers.
bool in_kernel(const AtomicVec& v, std::int64_t n);

// Primitive generators of {a(P) - a(Q) : P != Q canonical} intersected with
// ker T(n), sign-normalized so the first nonzero component is positive.
// Empty except on the three magic boards. Requires n >= 4.
std::vector<AtomicVec> single_piece_kernel_directions(std::int64_t n);

// A strength-preserving rewriting rule at board size n: one piece traded for
// one or two pieces with equal move totals and a nonzero atomic delta
// (zero-delta trades are trivial compound expansions valid on every board,
// not board-specific rules).
struct SubstitutionRule {
  std::string lhs;
  std::vector<std::string> rhs;  // one or two piece ids, canonical order
  AtomicVec delta{};             // a(lhs) - sum a(rhs)
  std::int64_t n = 0;
  int piece_count_delta = 0;  // applying lhs -> rhs changes the army size by this

  std::string str() const;  // "Q <-> Kook", "K <-> B+B"
};

// All such rules at n with right side of at most max_rhs pieces (1 or 2).
// Requires n >= 4.
std::vector<SubstitutionRule> substitution_rules(std::int64_t n, int max_rhs = 2);

// The rule lhs <-> rhs if it is a valid substitution rule at n.
SubstitutionRule find_rule(std::int64_t n, std::string_view lhs,
                           const std::vector<std::string>& rhs);

// Closure of f under applying the rule in both directions; armies that
// violate the validity constraints are not entered.
std::set<Army> orbit_under_rule(const Army& f, const SubstitutionRule& rule);

// Streams every valid army in ascending lexicographic order of the
// multiplicity vector (K first). The first army is {K:1}.
void enumerate_armies(const std::function<void(const Army&)>& visit);
std::int64_t army_count();

struct AppropriateArmies {
  std::int64_t count = 0;
  std::vector<Army> matches;  // populated only when collected
};

// Armies whose strength at n differs from target by at most eps, compared
// exactly. Requires n >= 4 and eps >= 0.
AppropriateArmies appropriate_armies(std::int64_t n, const Rat& target, const Rat& eps,
                                     bool collect = false);

// All primitive nonzero v with components in [-bound, bound] and
// v . T(n) = 0, one representative per sign pair (first nonzero component
// positive), in lexicographic order. Requires n >= 4 and 1 <= bound <= 20.
std::vector<AtomicVec> kernel_lattice_search(std::int64_t n, int bound);

struct RatioEntry {
  std::string p, q;
  Poly quotient;  // T_p = quotient * T_q
};

// Ordered pairs of distinct basic pieces whose total-ratio T_P / T_Q is a
// polynomial. Exactly one exists: T_B / T_K = n/12.
std::vector<RatioEntry> polynomial_ratio_scan();

}  // namespace mobility
