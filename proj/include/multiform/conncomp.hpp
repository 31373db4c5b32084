#pragma once

// Subspaces V_a = {v : <a_1, ..., a_{n-1}, v> = 0} and their intersections
// over all (n-1)-tuples from a finite set A.

#include <cstddef>
#include <span>
#include <vector>

#include "multiform/ffla.hpp"
#include "multiform/form.hpp"

namespace multiform {

// Subspace of F_p^d held as its reduced row-echelon basis, so equal subspaces
// have identical representations.
class Subspace {
 public:
  Subspace() = default;
  // Span of `generators` (any, possibly dependent).
  Subspace(std::uint32_t p, std::size_t d, std::span<const FVector> generators);
  static Subspace full(std::uint32_t p, std::size_t d);
  // Common kernel of the given functionals (dual standard coordinates).
  static Subspace kernel_of(std::uint32_t p, std::size_t d, std::span<const FVector> functionals);

  std::uint32_t modulus() const { return p_; }
  std::size_t ambient_dim() const { return d_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t codim() const { return d_ - basis_.size(); }
  const std::vector<FVector>& basis() const { return basis_; }

  bool contains(const FVector& v) const;
  bool is_subspace_of(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;

  bool operator==(const Subspace&) const = default;

 private:
  std::uint32_t p_ = 2;
  std::size_t d_ = 0;
  std::vector<FVector> basis_;
};

// Kernel of v -> eval(form, a_tuple ++ [v]); |a_tuple| must be n-1.
Subspace v_perp(const AlternatingForm& form, std::span<const FVector> a_tuple);

// Intersection of v_perp over (n-1)-tuples from A. Tuples with a repeated
// entry give the full space, and permuting a tuple only rescales its
// functional, so increasing tuples of distinct positions suffice.
Subspace g_infty(const AlternatingForm& form, std::span<const FVector> A);

// The same intersection over every ordered tuple with repetition; the
// reference path for g_infty.
Subspace g_infty_all_tuples(const AlternatingForm& form, std::span<const FVector> A);

// g_infty(A_1 u ... u A_n) == intersection over i of g_infty(union of A_j, j != i).
bool intersection_identity_check(const AlternatingForm& form,
                                 std::span<const std::vector<FVector>> parts);

}  // namespace multiform
