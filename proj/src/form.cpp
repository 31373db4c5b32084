#include "multiform/form.hpp"

#include <algorithm>

#include "multiform/error.hpp"

namespace multiform {

AlternatingForm::AlternatingForm(std::uint32_t p, int n, int d) : p_(p), n_(n), d_(d) {
  require_modulus(p);
  if (n < 2) throw DomainError("form arity must be at least 2");
  if (d < 0) throw DomainError("negative dimension");
}

Residue AlternatingForm::coeff(const IndexTuple& t) const {
  const auto it = coeffs_.find(t);
  return it == coeffs_.end() ? 0 : it->second;
}

void AlternatingForm::set_coeff(const IndexTuple& t, std::int64_t value) {
  if (static_cast<int>(t.size()) != n_ || !is_strictly_increasing(t) || t.front() < 0 ||
      t.back() >= d_) {
    throw DomainError("coefficient key is not an increasing tuple of basis indices");
  }
  const Residue v = zp::reduce(value, p_);
  if (v == 0) {
    coeffs_.erase(t);
  } else {
    coeffs_[t] = v;
  }
}

Residue AlternatingForm::basis_value(const IndexTuple& t) const {
  IndexTuple sorted = t;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return 0;
  const Residue c = coeff(sorted);
  return sort_sign(t) > 0 ? c : zp::neg(c, p_);
}

Residue AlternatingForm::wedge_basis_value(const IndexTuple& increasing, int j) const {
  // Moving e_j from the last slot to its sorted position passes every entry
  // of I that is larger than j.
  int larger = 0;
  IndexTuple full;
  full.reserve(increasing.size() + 1);
  bool placed = false;
  for (int i : increasing) {
    if (i == j) return 0;
    if (!placed && j < i) {
      full.push_back(j);
      placed = true;
    }
    if (i > j) ++larger;
    full.push_back(i);
  }
  if (!placed) full.push_back(j);
  const Residue c = coeff(full);
  return larger % 2 == 0 ? c : zp::neg(c, p_);
}

AlternatingForm AlternatingForm::embedded(int new_dim) const {
  if (new_dim < d_) throw DomainError("cannot embed a form into a smaller dimension");
  AlternatingForm out(*this);
  out.d_ = new_dim;
  return out;
}

}  // namespace multiform
