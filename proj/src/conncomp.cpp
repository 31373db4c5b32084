#include "multiform/conncomp.hpp"

#include "multiform/combinatorics.hpp"
#include "multiform/error.hpp"
#include "multiform/exterior.hpp"
#include "multiform/mform.hpp"

namespace multiform {

Subspace::Subspace(std::uint32_t p, std::size_t d, std::span<const FVector> generators) : p_(p), d_(d) {
  require_modulus(p);
  require_shape(generators, p, d);
  const RowEchelon e = rref(FMatrix::from_rows(generators, p, d));
  for (std::size_t r = 0; r < e.rank(); ++r) basis_.push_back(e.reduced.row(r));
}

Subspace Subspace::full(std::uint32_t p, std::size_t d) {
  std::vector<FVector> units;
  for (std::size_t i = 0; i < d; ++i) units.push_back(FVector::unit(p, d, i));
  return Subspace(p, d, units);
}

Subspace Subspace::kernel_of(std::uint32_t p, std::size_t d, std::span<const FVector> functionals) {
  require_shape(functionals, p, d);
  const auto k = kernel_basis(FMatrix::from_rows(functionals, p, d));
  return Subspace(p, d, k);
}

bool Subspace::contains(const FVector& v) const {
  if (v.modulus() != p_ || v.dim() != d_) throw DimensionMismatch("vector outside the ambient space");
  if (basis_.empty()) return v.is_zero();
  return coordinates(v, basis_).has_value();
}

bool Subspace::is_subspace_of(const Subspace& o) const {
  for (const FVector& b : basis_) {
    if (!o.contains(b)) return false;
  }
  return true;
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (p_ != o.p_ || d_ != o.d_) throw DimensionMismatch("subspaces of different ambient spaces");
  // Intersection = common kernel of both annihilators.
  auto annihilator = [&](const Subspace& s) { return kernel_basis(FMatrix::from_rows(s.basis_, p_, d_)); };
  std::vector<FVector> fs = annihilator(*this);
  const auto more = annihilator(o);
  fs.insert(fs.end(), more.begin(), more.end());
  return kernel_of(p_, d_, fs);
}

namespace {

FVector perp_functional(const AlternatingForm& form, std::span<const FVector> a_tuple) {
  const auto d = static_cast<std::size_t>(form.dim());
  if (static_cast<int>(a_tuple.size()) + 1 != form.arity()) {
    throw DimensionMismatch("v_perp needs exactly n-1 vectors");
  }
  require_shape(a_tuple, form.modulus(), d);
  return pairing_functional(form, wedge_of_vectors(a_tuple));
}

}  // namespace

Subspace v_perp(const AlternatingForm& form, std::span<const FVector> a_tuple) {
  const FVector f = perp_functional(form, a_tuple);
  return Subspace::kernel_of(form.modulus(), static_cast<std::size_t>(form.dim()), std::span(&f, 1));
}

Subspace g_infty(const AlternatingForm& form, std::span<const FVector> A) {
  const std::uint32_t p = form.modulus();
  const auto d = static_cast<std::size_t>(form.dim());
  require_shape(A, p, d);
  const int k = form.arity() - 1;
  std::vector<FVector> functionals;
  std::vector<FVector> tuple(static_cast<std::size_t>(k));
  for (const IndexTuple& idx : combinations(static_cast<int>(A.size()), k)) {
    for (int i = 0; i < k; ++i) tuple[static_cast<std::size_t>(i)] = A[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    FVector f = perp_functional(form, tuple);
    if (!f.is_zero()) functionals.push_back(std::move(f));
  }
  return Subspace::kernel_of(p, d, functionals);
}

Subspace g_infty_all_tuples(const AlternatingForm& form, std::span<const FVector> A) {
  const std::uint32_t p = form.modulus();
  const auto d = static_cast<std::size_t>(form.dim());
  require_shape(A, p, d);
  Subspace acc = Subspace::full(p, d);
  if (A.empty()) return acc;
  const auto k = static_cast<std::size_t>(form.arity() - 1);
  std::vector<std::size_t> pos(k, 0);
  std::vector<FVector> tuple(k);
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) tuple[i] = A[pos[i]];
    acc = acc.intersect(v_perp(form, tuple));
    std::size_t i = 0;
    while (i < k && ++pos[i] == A.size()) pos[i++] = 0;
    if (i == k) break;
  }
  return acc;
}

bool intersection_identity_check(const AlternatingForm& form,
                                 std::span<const std::vector<FVector>> parts) {
  if (static_cast<int>(parts.size()) != form.arity()) throw DimensionMismatch("need exactly n parts");
  std::vector<FVector> all;
  for (const auto& part : parts) all.insert(all.end(), part.begin(), part.end());
  const Subspace lhs = g_infty(form, all);
  Subspace rhs = Subspace::full(form.modulus(), static_cast<std::size_t>(form.dim()));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<FVector> rest;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (j != i) rest.insert(rest.end(), parts[j].begin(), parts[j].end());
    }
    rhs = rhs.intersect(g_infty(form, rest));
  }
  return lhs == rhs;
}

}  // namespace multiform
