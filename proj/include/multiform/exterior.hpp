#pragma once

// Coordinates on the (n-1)-th exterior power of F_p^d, the bilinear pairing
// between wedges and vectors induced by an alternating n-linear form, and the
// matrices of the maps wedge -> dual vector (psi) and vector -> dual wedge
// (phi).
//
// Wedge basis elements are the increasing (n-1)-tuples of standard indices,
// ordered lexicographically; dense wedge coordinates always use that order.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>

#include "multiform/combinatorics.hpp"
#include "multiform/ffla.hpp"
#include "multiform/form.hpp"

namespace multiform {

using WedgeIndex = IndexTuple;

class WedgeVector {
 public:
  WedgeVector() = default;
  // Zero wedge of degree k in the exterior power of F_p^d.
  WedgeVector(std::uint32_t p, int k, int d);

  static WedgeVector basis(std::uint32_t p, int k, int d, const WedgeIndex& index);
  // From dense coordinates over the lexicographic wedge basis.
  static WedgeVector from_coordinates(std::uint32_t p, int k, int d, const FVector& coords);

  std::uint32_t modulus() const { return p_; }
  int degree() const { return k_; }
  int dim() const { return d_; }
  const std::map<WedgeIndex, Residue>& terms() const { return terms_; }
  Residue coeff(const WedgeIndex& index) const;
  void set_coeff(const WedgeIndex& index, std::int64_t value);
  bool is_zero() const { return terms_.empty(); }

  // Dense coordinates over the lexicographic basis; length C(d, k).
  FVector coordinates() const;

  WedgeVector& operator+=(const WedgeVector& o);
  WedgeVector scaled(Residue c) const;
  // Same wedge read in a larger ambient dimension.
  WedgeVector embedded(int new_dim) const;
  friend WedgeVector operator+(WedgeVector a, const WedgeVector& b) { return a += b; }

  bool operator==(const WedgeVector&) const = default;

 private:
  std::uint32_t p_ = 2;
  int k_ = 1;
  int d_ = 0;
  std::map<WedgeIndex, Residue> terms_;
};

// v_1 ^ ... ^ v_k: the coefficient at I is the k x k minor on columns I of the
// matrix with rows v_i. Throws DimensionMismatch on an empty list or mixed
// shapes.
WedgeVector wedge_of_vectors(std::span<const FVector> vs);

// Pairing of a degree-(n-1) wedge with a vector under `form`.
Scalar pairing2(const AlternatingForm& form, const WedgeVector& t, const FVector& w);

// d x C(d, n-1); column I holds the functional v -> pairing2(e_I, v).
FMatrix psi_matrix(const AlternatingForm& form);

// Rows indexed by the (n-1)-subsets of `w_basis` (lexicographic), columns by
// the ambient standard basis. Throws DomainError when `w_basis` is dependent.
FMatrix phi_matrix(const AlternatingForm& form, std::span<const FVector> w_basis);

// Wedges of all (n-1)-subtuples of `w_basis`, in the row order of phi_matrix.
std::vector<WedgeVector> wedge_basis_of(std::span<const FVector> w_basis, int degree);

// Functional v -> pairing2(t, v) in the dual standard basis.
FVector pairing_functional(const AlternatingForm& form, const WedgeVector& t);

}  // namespace multiform
