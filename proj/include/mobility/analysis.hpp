#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mobility/alphabet.hpp"

namespace mobility {

// The tie-partition of an alphabet by strength at board size n, blocks in
// strictly decreasing strength order. Strengths at fixed n share the
// denominator n^2(n^2 - 1), so the partition is computed on integer totals.
struct Signature {
  std::int64_t n = 0;
  std::vector<std::vector<std::string>> blocks;

  friend bool operator==(const Signature& a, const Signature& b) { return a.blocks == b.blocks; }
  friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }
  std::string str() const;  // "Am > Q > ... > {R, AB} > ..."
};

// Requires n >= 4 (trivial boards rejected: below that, some basic piece has
// a square with no legal move).
Signature signature(std::int64_t n, const Alphabet& alphabet = Alphabet::canonical());

// A board size where the strength preorder differs from the one at n - 1.
// changed_pairs lists every unordered pair whose relation (<, =, >) changed;
// coincidences_at_n lists the pairs tied exactly at n.
struct Transition {
  std::int64_t n = 0;
  std::vector<std::pair<std::string, std::string>> changed_pairs;
  std::vector<std::pair<std::string, std::string>> coincidences_at_n;
};

// All transitions with lo <= n <= hi; requires 5 <= lo <= hi.
std::vector<Transition> scan_transitions(std::int64_t lo, std::int64_t hi,
                                         const Alphabet& alphabet = Alphabet::canonical());

struct Coincidence {
  std::int64_t n = 0;
  std::string p, q;
  std::int64_t total = 0;  // the shared move total
};

// Every (n, {P, Q}) with equal move totals, lo <= n <= hi, 4 <= lo.
std::vector<Coincidence> scan_coincidences(std::int64_t lo, std::int64_t hi,
                                           const Alphabet& alphabet = Alphabet::canonical());

// Per adjacent pair of the stable strength order: the difference polynomial,
// its sign-stabilization bound and the exhaustive sign table on [4, N0].
struct PairCertificate {
  std::string stronger, weaker;
  Poly difference;            // T_stronger - T_weaker
  std::int64_t cauchy_bound;  // N0: sign fixed for all real n >= N0
  std::vector<int> signs;     // sign at each integer n in [4, N0]
  std::int64_t positive_from; // least m with sign > 0 on every integer in [m, N0]
};

struct StabilityCertificate {
  std::vector<PairCertificate> pairs;  // the 12 adjacent pairs, strongest first
  std::int64_t counterexample_n = 23;  // sharpness: the B/C order still differs here
  std::int64_t counterexample_bishop_total = 0;
  std::int64_t counterexample_centaur_total = 0;
  bool verified = false;
};

// Certifies the fixed strength order of the thirteen pieces for every
// integer n >= 24: each adjacent difference has positive leading coefficient
// and is positive on every integer in [24, N0], which together cover all
// n >= 24. Throws std::logic_error if any check fails.
StabilityCertificate stable_ordering_certificate();

struct NearCoincidence {
  std::int64_t n = 0;
  Rat gap;  // |str(P) - str(Q)| at n
};

// The integer in [lo, hi] minimizing the exact strength gap between two
// distinct pieces, ties broken toward smaller n. Requires 4 <= lo <= hi.
NearCoincidence near_coincidence(std::string_view p, std::string_view q, std::int64_t lo,
                                 std::int64_t hi, const Alphabet& alphabet = Alphabet::canonical());

struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::string details;
};

struct IdentityReport {
  std::int64_t lo = 0, hi = 0;
  std::vector<IdentityCheck> checks;
  bool all_pass() const;
};

// Exact verification, for every n in [lo, hi] (4 <= lo <= hi), of the
// closed-form identities the catalog satisfies: the constant king-knight and
// kook-empress strength gaps, the bishop-king proportionality and its
// divisor table, irrationality of the knight-bishop crossing, the failure of
// the magic-board identities at parity-component level, the small-board
// parity coincidences, knight/double-bishop Fourier orthogonality, and the
// unique knight-bishop near-coincidence.
IdentityReport verify_identity_suite(std::int64_t lo, std::int64_t hi);

struct SignatureCensus {
  struct Entry {
    Signature sig;
    std::vector<std::pair<std::int64_t, std::int64_t>> intervals;  // inclusive
  };
  std::vector<Entry> entries;  // ordered by first occurrence
};

// Distinct signatures over [lo, hi] with the integer intervals realizing
// each. Requires 4 <= lo <= hi.
SignatureCensus signature_census(std::int64_t lo, std::int64_t hi,
                                 const Alphabet& alphabet = Alphabet::canonical());

}  // namespace mobility
