#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace multiform {

// Strictly increasing tuple of basis indices.
using IndexTuple = std::vector<int>;

// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Number of r-dimensional subspaces of F_p^d, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(std::uint64_t d, std::uint64_t r, std::uint64_t p);

// Saturating integer power.
std::uint64_t ipow(std::uint64_t base, std::uint64_t exp);

// All r-subsets of {0..d-1} as increasing tuples, in lexicographic order.
std::vector<IndexTuple> combinations(int d, int r);

// Advances `c` to the lexicographically next r-subset of {0..d-1}.
// Returns false (leaving `c` unspecified) when `c` was the last one.
bool next_combination(IndexTuple& c, int d);

// Position of the increasing tuple `c` among all |c|-subsets of {0..d-1} in
// lexicographic order.
std::size_t combination_rank(const IndexTuple& c, int d);

bool is_strictly_increasing(const IndexTuple& t);

// Parity of the permutation that sorts `t` (entries assumed distinct):
// +1 for even, -1 for odd.
int sort_sign(const IndexTuple& t);

}  // namespace multiform
