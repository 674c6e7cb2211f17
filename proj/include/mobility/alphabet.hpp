#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mobility/moveset.hpp"
#include "mobility/poly.hpp"

namespace mobility {

// Canonical indices of the thirteen alphabet pieces, in the fixed order used
// everywhere (tables, army literals, enumeration).
namespace piece {
inline constexpr int K = 0;
inline constexpr int N = 1;
inline constexpr int B = 2;
inline constexpr int R = 3;
inline constexpr int Q = 4;
inline constexpr int AB = 5;
inline constexpr int Em = 6;
inline constexpr int C = 7;
inline constexpr int Am = 8;
inline constexpr int Bee = 9;
inline constexpr int AK = 10;
inline constexpr int Nork = 11;
inline constexpr int Kook = 12;
inline constexpr int count = 13;
}  // namespace piece

// (a_K, a_N, a_B, a_R): how many copies of each basic piece a piece or army
// is built from, with a double bishop counted as two single-color bishops.
using AtomicVec = std::array<std::int64_t, 4>;

struct PieceInfo {
  std::string id;
  PieceDef def;
  // Move-total polynomial in the board size; present for the thirteen
  // canonical pieces and the double-bishop pseudo piece. Extension pieces
  // have none and are totaled arithmetically from their move sets.
  std::optional<Poly> total_poly;
  std::optional<AtomicVec> atomic;  // canonical pieces only
  bool basic = false;
};

// alpha in {1, 2} and the leading constant c of the strength decay
// str = c / n^alpha + O(1/n^(alpha+1)): riders decay like 1/n, leapers
// like 1/n^2.
struct AsymptoticClass {
  int alpha = 2;
  Rat c;
};

// The piece catalog: the thirteen canonical pieces, optionally extended with
// user-declared leapers, riders and compounds. Read-only after construction.
class Alphabet {
 public:
  // The canonical thirteen-piece alphabet. Constructed once; construction
  // cross-checks every total polynomial against the brute-force oracle on
  // boards 4..8 and refuses to proceed on any mismatch.
  static const Alphabet& canonical();

  // Extends the canonical alphabet with pieces declared one per line:
  //   name leaper a b
  //   name rider di dj [di dj ...]
  //   name compound name1+name2
  // Blank lines and lines starting with '#' are skipped. Compound components
  // must have disjoint arrow sets.
  static Alphabet with_extensions(std::string_view text);
  static Alphabet with_extensions_from_file(const std::string& path);

  const std::vector<PieceInfo>& pieces() const { return pieces_; }
  std::size_t size() const { return pieces_.size(); }
  const PieceInfo& at(std::size_t index) const { return pieces_[index]; }

  const PieceInfo* find(std::string_view id) const;
  const PieceInfo& piece(std::string_view id) const;  // throws on unknown id

 private:
  std::vector<PieceInfo> pieces_;
};

// The double bishop: bishops on both color complexes. Queryable for totals,
// grids and parity splits but not a member of the alphabet.
const PieceInfo& double_bishop();

// Exact move total at board size n (n >= 1; n = 1 gives 0 for every
// canonical piece). Polynomial evaluation for cataloged pieces, arithmetic
// offset counting for extensions. Supported range n <= 10^6.
std::int64_t total_moves_closed(const PieceInfo& piece, std::int64_t n);

// T_P(n) / (n^2 (n^2 - 1)), the probability that a uniformly random ordered
// pair of distinct squares is a legal move. Requires n >= 2.
Rat strength(const PieceInfo& piece, std::int64_t n);

// Closed-form color-character split for a basic piece id ("K", "N", "B",
// "BB" or "R"), n >= 2. The rook's split depends on the parity of n; the
// single bishop returns half the double-bishop values.
ParitySplit parity_split_closed(std::string_view basic_id, std::int64_t n);

// Decay class from the move-set geometry: alpha = 1 iff some component
// rides. For riders c sums per-direction ray densities; for leapers c is the
// (weighted) offset count.
AsymptoticClass asymptotic_class(const PieceInfo& piece);

// Strength of the standard eight-piece army {K, Q, 2R, 2B, 2N} as a closed
// rational function of n: 2(13n^2 + 34n - 54) / (3n^2 (n + 1)). n >= 2.
Rat std_army_strength_closed(std::int64_t n);

}  // namespace mobility
