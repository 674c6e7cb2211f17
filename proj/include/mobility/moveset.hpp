#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mobility {

struct Square {
  int i = 0;
  int j = 0;
  friend bool operator==(Square a, Square b) { return a.i == b.i && a.j == b.j; }
  friend bool operator<(Square a, Square b) { return a.i != b.i ? a.i < b.i : a.j < b.j; }
};

struct Offset {
  int di = 0;
  int dj = 0;
  friend bool operator==(Offset a, Offset b) { return a.di == b.di && a.dj == b.dj; }
  friend bool operator<(Offset a, Offset b) { return a.di != b.di ? a.di < b.di : a.dj < b.dj; }
};

// A piece's movement geometry: finitely many leap offsets plus rider
// directions followed to the board edge. Construction deduplicates and
// validates that the leap arrows are disjoint from every ride's generated
// arrows, so each arrow of a well-formed move set has a unique generator.
struct MoveSet {
  std::vector<Offset> leaps;  // nonzero, deduplicated
  std::vector<Offset> rides;  // primitive (gcd of |di|,|dj| is 1), deduplicated

  static MoveSet leaper(std::vector<Offset> offsets);
  static MoveSet rider(std::vector<Offset> directions);
  static MoveSet combined(std::vector<Offset> offsets, std::vector<Offset> directions);

  // All signed coordinate permutations of the pair {a, b} (argument order
  // irrelevant, both nonnegative, not both zero): four offsets when the pair
  // contains 0 or has equal entries, eight otherwise.
  static MoveSet leaper_pair(int a, int b);

  bool empty() const { return leaps.empty() && rides.empty(); }
};

// True when the two move sets generate at least one common arrow offset.
bool arrows_overlap(const MoveSet& a, const MoveSet& b);

// One weighted component of a piece. A halved component counts each of its
// arrows at weight 1/2; this encodes the single-color-bishop convention,
// where the diagonal rider's raw arrow count (the double bishop's total) is
// halved. Raw per-component counts are provably even for any move set that
// is symmetric under negation, so halved totals are exact integers.
struct PieceComponent {
  MoveSet moves;
  bool halve = false;
};

// A piece is a weighted sum of components. Basic pieces have one component;
// compound pieces carry one component per basic constituent (so a Queen has
// two halved diagonal-rider components and one orthogonal-rider component).
// Totals, parity splits and grids are component sums: constituents whose
// arrows geometrically overlap (a King's one-step slides are also Rook
// slides) still count separately, matching the additive totals the compound
// pieces are defined by.
struct PieceDef {
  std::string id;
  std::vector<PieceComponent> components;

  bool halve_total() const {
    for (const auto& c : components)
      if (c.halve) return true;
    return false;
  }
  // Deduplicated union of all component move sets; geometry queries only.
  MoveSet combined_moves() const;
};

enum class Character { color, row, col };

Character parse_character(const std::string& s);
std::string character_name(Character c);

struct ParitySplit {
  std::int64_t plus = 0;
  std::int64_t minus = 0;
  std::int64_t total() const { return plus + minus; }
};

struct MobilityGrid {
  int n = 0;
  std::vector<std::int64_t> counts;  // row-major, n*n entries

  std::int64_t at(int i, int j) const { return counts[static_cast<std::size_t>(i) * n + j]; }
  std::int64_t& at(int i, int j) { return counts[static_cast<std::size_t>(i) * n + j]; }
  std::int64_t sum() const;
};

}  // namespace mobility
