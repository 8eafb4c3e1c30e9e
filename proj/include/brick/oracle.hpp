#pragma once

// Brute-force references used by the test suites and by `--oracle` runs.
// Nothing here shares code paths with the flip search or the brick sums.

#include <cstdint>
#include <vector>

#include "brick/coxeter.hpp"
#include "brick/subword.hpp"

namespace brick::oracle {

/// All position sets F of size |Q| - l(w) whose complement multiplies to w,
/// scanned over every mask. |Q| must be below 25.
std::vector<Subword> exhaustive_facets(const Word& q, const GroupElement& w);

/// Every face (subset of a facet), the empty face included, sorted.
std::vector<Subword> all_faces(const std::vector<Subword>& facets, std::size_t word_size);

/// sum over faces including the empty one of (-1)^(|F| - 1).
std::int64_t reduced_euler_characteristic(const std::vector<Subword>& facets, std::size_t word_size);

/// Brick vector in R^n (type A) as the sum of the permutation images of the
/// 0/1 vectors (1,..,1,0,..,0), computed with explicit permutations.
IntVector ambient_brick_vector_by_permutations(const Word& q, const Subword& face);

}  // namespace brick::oracle
