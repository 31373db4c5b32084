#include "multiform/exterior.hpp"

#include <string>

#include "multiform/error.hpp"

namespace multiform {

WedgeVector::WedgeVector(std::uint32_t p, int k, int d) : p_(p), k_(k), d_(d) {
  require_modulus(p);
  if (k < 1) throw DomainError("wedge degree must be at least 1");
  if (d < 0) throw DomainError("negative dimension");
}

WedgeVector WedgeVector::basis(std::uint32_t p, int k, int d, const WedgeIndex& index) {
  WedgeVector t(p, k, d);
  t.set_coeff(index, 1);
  return t;
}

WedgeVector WedgeVector::from_coordinates(std::uint32_t p, int k, int d, const FVector& coords) {
  WedgeVector t(p, k, d);
  if (coords.modulus() != p ||
      coords.dim() != static_cast<std::size_t>(binomial(static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(k)))) {
    throw DimensionMismatch("wedge coordinate vector has the wrong length");
  }
  std::size_t pos = 0;
  for (const WedgeIndex& idx : combinations(d, k)) {
    if (coords[pos] != 0) t.terms_.emplace(idx, coords[pos]);
    ++pos;
  }
  return t;
}

Residue WedgeVector::coeff(const WedgeIndex& index) const {
  const auto it = terms_.find(index);
  return it == terms_.end() ? 0 : it->second;
}

void WedgeVector::set_coeff(const WedgeIndex& index, std::int64_t value) {
  if (static_cast<int>(index.size()) != k_ || !is_strictly_increasing(index) ||
      index.front() < 0 || index.back() >= d_) {
    throw DomainError("wedge index is not an increasing tuple of basis indices");
  }
  const Residue v = zp::reduce(value, p_);
  if (v == 0) {
    terms_.erase(index);
  } else {
    terms_[index] = v;
  }
}

FVector WedgeVector::coordinates() const {
  FVector out(p_, static_cast<std::size_t>(binomial(static_cast<std::uint64_t>(d_),
                                                    static_cast<std::uint64_t>(k_))));
  for (const auto& [idx, c] : terms_) out.set(combination_rank(idx, d_), c);
  return out;
}

WedgeVector& WedgeVector::operator+=(const WedgeVector& o) {
  if (p_ != o.p_ || k_ != o.k_ || d_ != o.d_) throw DimensionMismatch("wedge shapes differ");
  for (const auto& [idx, c] : o.terms_) {
    const Residue sum = zp::add(coeff(idx), c, p_);
    if (sum == 0) {
      terms_.erase(idx);
    } else {
      terms_[idx] = sum;
    }
  }
  return *this;
}

WedgeVector WedgeVector::scaled(Residue c) const {
  WedgeVector out(p_, k_, d_);
  c %= p_;
  if (c == 0) return out;
  for (const auto& [idx, v] : terms_) out.terms_.emplace(idx, zp::mul(v, c, p_));
  return out;
}

WedgeVector WedgeVector::embedded(int new_dim) const {
  if (new_dim < d_) throw DomainError("cannot embed a wedge into a smaller dimension");
  WedgeVector out(*this);
  out.d_ = new_dim;
  return out;
}

WedgeVector wedge_of_vectors(std::span<const FVector> vs) {
  if (vs.empty()) throw DimensionMismatch("wedge of an empty tuple");
  const std::uint32_t p = vs[0].modulus();
  const int d = static_cast<int>(vs[0].dim());
  require_shape(vs, p, vs[0].dim());
  const int k = static_cast<int>(vs.size());
  WedgeVector t(p, k, d);
  if (k > d) return t;
  const FMatrix rows = FMatrix::from_rows(vs, p, vs[0].dim());
  std::vector<std::size_t> cols(static_cast<std::size_t>(k));
  for (const WedgeIndex& idx : combinations(d, k)) {
    for (int i = 0; i < k; ++i) cols[static_cast<std::size_t>(i)] = static_cast<std::size_t>(idx[static_cast<std::size_t>(i)]);
    const Residue minor = determinant(rows.select_columns(cols));
    if (minor != 0) t.set_coeff(idx, minor);
  }
  return t;
}

namespace {

void require_compatible(const AlternatingForm& form, const WedgeVector& t) {
  if (t.modulus() != form.modulus() || t.degree() != form.arity() - 1 || t.dim() != form.dim()) {
    throw DimensionMismatch("wedge does not match the form's field, arity or dimension");
  }
}

}  // namespace

FVector pairing_functional(const AlternatingForm& form, const WedgeVector& t) {
  require_compatible(form, t);
  const std::uint32_t p = form.modulus();
  FVector f(p, static_cast<std::size_t>(form.dim()));
  for (const auto& [idx, c] : t.terms()) {
    for (int j = 0; j < form.dim(); ++j) {
      const Residue v = form.wedge_basis_value(idx, j);
      if (v != 0) f.set(static_cast<std::size_t>(j), zp::add(f[static_cast<std::size_t>(j)], zp::mul(c, v, p), p));
    }
  }
  return f;
}

Scalar pairing2(const AlternatingForm& form, const WedgeVector& t, const FVector& w) {
  require_compatible(form, t);
  if (w.modulus() != form.modulus() || w.dim() != static_cast<std::size_t>(form.dim())) {
    throw DimensionMismatch("vector does not match the form's field or dimension");
  }
  const FVector f = pairing_functional(form, t);
  const std::uint32_t p = form.modulus();
  Residue acc = 0;
  for (std::size_t j = 0; j < w.dim(); ++j) acc = zp::add(acc, zp::mul(f[j], w[j], p), p);
  return Scalar(acc, p);
}

FMatrix psi_matrix(const AlternatingForm& form) {
  const int d = form.dim();
  const auto wedges = combinations(d, form.arity() - 1);
  FMatrix m(form.modulus(), static_cast<std::size_t>(d), wedges.size());
  for (std::size_t col = 0; col < wedges.size(); ++col) {
    for (int j = 0; j < d; ++j) m.set(static_cast<std::size_t>(j), col, form.wedge_basis_value(wedges[col], j));
  }
  return m;
}

std::vector<WedgeVector> wedge_basis_of(std::span<const FVector> w_basis, int degree) {
  std::vector<WedgeVector> out;
  for (const IndexTuple& sub : combinations(static_cast<int>(w_basis.size()), degree)) {
    std::vector<FVector> vs;
    vs.reserve(sub.size());
    for (int i : sub) vs.push_back(w_basis[static_cast<std::size_t>(i)]);
    out.push_back(wedge_of_vectors(vs));
  }
  return out;
}

FMatrix phi_matrix(const AlternatingForm& form, std::span<const FVector> w_basis) {
  const std::uint32_t p = form.modulus();
  const auto d = static_cast<std::size_t>(form.dim());
  require_shape(w_basis, p, d);
  if (!theta(w_basis)) throw DomainError("phi_matrix needs an independent basis");
  const auto wedges = wedge_basis_of(w_basis, form.arity() - 1);
  FMatrix m(p, wedges.size(), d);
  for (std::size_t r = 0; r < wedges.size(); ++r) {
    const FVector f = pairing_functional(form, wedges[r]);
    for (std::size_t j = 0; j < d; ++j) m.set(r, j, f[j]);
  }
  return m;
}

}  // namespace multiform
