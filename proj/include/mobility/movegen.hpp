#pragma once

#include "mobility/moveset.hpp"

namespace mobility {

// The brute-force oracle. Everything here enumerates squares and walks rides
// step by step to the board edge; no arithmetic shortcuts, so results are
// independent of the closed-form catalog they are tested against.

// Distinct squares reachable from `from` in one leap or one unobstructed ride
// on the empty n x n board. Throws std::out_of_range for a bad square.
std::vector<Square> legal_targets(const MoveSet& ms, int n, Square from);

// Sum over all squares of the number of legal moves, component-weighted
// (halved components contribute half their raw arrow count).
std::int64_t total_moves_bruteforce(const PieceDef& piece, int n);

// Per-square raw move counts, summed over components with no halving.
MobilityGrid mobility_grid(const PieceDef& piece, int n);

// Split of the piece's moves by the chosen character chi: an arrow p -> q
// counts into `plus` when chi(p) * chi(q) = +1, else into `minus`.
// chi is (-1)^(i+j), (-1)^i or (-1)^j. Halving applies as in totals.
ParitySplit parity_split_bruteforce(const PieceDef& piece, int n, Character character);

}  // namespace mobility
