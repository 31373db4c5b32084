#pragma once

#include <cstddef>
#include <cstdint>
#include <map>

#include "multiform/combinatorics.hpp"
#include "multiform/ffla.hpp"

namespace multiform {

// Alternating n-linear form on F_p^d, stored by its values on increasing
// n-tuples of standard basis vectors. Absent tuples are 0; zeros are never
// stored, so two equal forms have identical coefficient maps.
class AlternatingForm {
 public:
  AlternatingForm() = default;
  // Zero form. Requires p prime below 2^16 and n >= 2.
  AlternatingForm(std::uint32_t p, int n, int d);

  std::uint32_t modulus() const { return p_; }
  int arity() const { return n_; }
  int dim() const { return d_; }

  // Value on the increasing tuple `t` (0 if absent).
  Residue coeff(const IndexTuple& t) const;
  // Sets the value on an increasing tuple; throws DomainError on malformed keys.
  void set_coeff(const IndexTuple& t, std::int64_t value);
  const std::map<IndexTuple, Residue>& coeffs() const { return coeffs_; }

  // Value on e_{t_0}, ..., e_{t_{n-1}} for an arbitrary index tuple: 0 on a
  // repeated index, otherwise the sign of the sorting permutation times the
  // stored value.
  Residue basis_value(const IndexTuple& t) const;

  // Value on (e_I, e_j) for an increasing (n-1)-tuple I, i.e. the pairing of
  // the wedge basis element e_I with e_j.
  Residue wedge_basis_value(const IndexTuple& increasing, int j) const;

  // Same form viewed in dimension `new_dim` >= dim().
  AlternatingForm embedded(int new_dim) const;

  bool operator==(const AlternatingForm&) const = default;

 private:
  std::uint32_t p_ = 2;
  int n_ = 2;
  int d_ = 0;
  std::map<IndexTuple, Residue> coeffs_;
};

}  // namespace multiform
