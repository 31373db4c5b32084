#pragma once

// Brute-force reference computations. They share no algorithm with the
// library paths they check: no elimination, no determinants, no invariants.

#include <cstddef>
#include <span>
#include <vector>

#include "multiform/boxvc.hpp"
#include "multiform/ffla.hpp"
#include "multiform/form.hpp"
#include "multiform/typecount.hpp"

namespace multiform::lab {

// Full multilinear expansion: sum over index tuples (i_1..i_n) with every
// v_j[i_j] nonzero of prod v_j[i_j] * form(e_{i_1}, ..., e_{i_n}).
Residue naive_eval(const AlternatingForm& form, std::span<const FVector> vs);

// Every vector of F_p^d, in base-p counting order.
std::vector<FVector> all_vectors(std::uint32_t p, std::size_t d);

// All F_p-combinations of `gens`, sorted and without repeats.
std::vector<FVector> span_closure(std::span<const FVector> gens, std::uint32_t p, std::size_t d);

// Search for an additive bijection span(A) -> span(B) sending A_i to B_i and
// preserving the form on every n-tuple of span elements.
bool form_preserving_bijection_exists(const AlternatingForm& fa, std::span<const FVector> a,
                                      const AlternatingForm& fb, std::span<const FVector> b);

// {v : form(a_1, ..., a_{n-1}, v) = 0 for every ordered tuple from A, with
// repetition}, by testing every vector; sorted.
std::vector<FVector> brute_perp_set(const AlternatingForm& form, std::span<const FVector> A);

// Distinct traces of `fam` on `box`, counted with plain boolean vectors.
std::size_t brute_trace_count(const BoxFamily& fam, const Box& box);

// Distinct traces of c -> relation(b, a_1, ..., a_{k-1}, c), a_i over seqs.
std::size_t brute_type_count(const RelationOracle& oracle, std::size_t b,
                             std::span<const std::vector<std::size_t>> seqs,
                             std::span<const std::size_t> window);

// Array-family cardinality by recursive enumeration of the zeta arrays,
// most significant entry first.
std::size_t brute_array_family(const RelationOracle& phi, std::size_t n, std::span<const std::size_t> delta);

}  // namespace multiform::lab
