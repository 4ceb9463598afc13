#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ndq/board.hpp"
#include "ndq/solver.hpp"

namespace ndq {

/// A linear placement rule: for each (x_1, ..., x_{d-1}) in [1,n]^{d-1},
/// put one queen at last coordinate
///   1 + ((sum_j coeffs[j] * (x_j - 1) + offset) mod n).
/// Always yields n^{d-1} queens, one per axis-d line; validity is not
/// guaranteed and must be checked with verify().
struct ModularScheme {
  int n;
  int d;
  std::vector<int> coeffs;  // d-1 values in [1, n-1]
  int offset = 0;           // in [0, n-1]
};

/// The placement the scheme defines. Throws std::invalid_argument for
/// malformed schemes (wrong arity, coefficients or offset out of range).
Placement modular_construct(const ModularScheme& scheme);

/// Lexicographic scan over coefficient tuples (offset fixed at 0), trying
/// at most `budget` candidates, returning the first scheme whose placement
/// verifies conflict-free. nullopt when the scan finds none.
std::optional<ModularScheme> search_scheme(int n, int d, std::uint64_t budget);

/// Best of `restarts` randomized greedy placements (max size, then
/// lexicographically smallest). Always verifies Ok.
Placement greedy_random(const BoardSpec& spec, std::uint64_t seed, int restarts);

}  // namespace ndq
