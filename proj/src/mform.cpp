#include "multiform/mform.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "multiform/combinatorics.hpp"
#include "multiform/error.hpp"
#include "multiform/random.hpp"

namespace multiform {

namespace {

std::size_t wedge_count(const AlternatingForm& form) {
  return static_cast<std::size_t>(
      binomial(static_cast<std::uint64_t>(form.dim()), static_cast<std::uint64_t>(form.arity() - 1)));
}

bool independent_wedges(std::span<const WedgeVector> ts, std::uint32_t p, std::size_t len) {
  std::vector<FVector> cs;
  cs.reserve(ts.size());
  for (const WedgeVector& t : ts) cs.push_back(t.coordinates());
  if (cs.empty()) return true;
  require_shape(cs, p, len);
  return theta(cs);
}

}  // namespace

Scalar eval(const AlternatingForm& form, std::span<const FVector> vs) {
  const std::uint32_t p = form.modulus();
  if (static_cast<int>(vs.size()) != form.arity()) {
    throw DimensionMismatch("eval needs exactly n vectors");
  }
  const auto d = static_cast<std::size_t>(form.dim());
  require_shape(vs, p, d);
  const FMatrix rows = FMatrix::from_rows(vs, p, d);
  std::vector<std::size_t> cols(vs.size());
  Residue acc = 0;
  for (const auto& [idx, c] : form.coeffs()) {
    for (std::size_t i = 0; i < idx.size(); ++i) cols[i] = static_cast<std::size_t>(idx[i]);
    acc = zp::add(acc, zp::mul(c, determinant(rows.select_columns(cols)), p), p);
  }
  return Scalar(acc, p);
}

std::vector<WedgeVector> radical(const AlternatingForm& form) {
  std::vector<WedgeVector> out;
  for (const FVector& k : kernel_basis(psi_matrix(form))) {
    out.push_back(WedgeVector::from_coordinates(form.modulus(), form.arity() - 1, form.dim(), k));
  }
  return out;
}

bool is_nondegenerate(const AlternatingForm& form) {
  return rank(psi_matrix(form)) == wedge_count(form);
}

bool is_generic(const AlternatingForm& form) {
  std::vector<FVector> std_basis;
  for (int i = 0; i < form.dim(); ++i) {
    std_basis.push_back(FVector::unit(form.modulus(), static_cast<std::size_t>(form.dim()), static_cast<std::size_t>(i)));
  }
  return rank(phi_matrix(form, std_basis)) == wedge_count(form);
}

DualTuples dual_tuples(const AlternatingForm& form, std::span<const FVector> w_basis) {
  const FMatrix phi = phi_matrix(form, w_basis);
  DualTuples out;
  out.ts = wedge_basis_of(w_basis, form.arity() - 1);
  for (std::size_t j = 0; j < phi.rows(); ++j) {
    const auto u = solve(phi, FVector::unit(form.modulus(), phi.rows(), j));
    if (!u) {
      throw NotGenericHere("no vector pairs to 1 with wedge " + std::to_string(j) +
                           " and to 0 with the others");
    }
    out.us.push_back(*u);
  }
  return out;
}

FVector find_w(const AlternatingForm& form, std::span<const WedgeVector> ts,
               std::span<const Scalar> ks, std::span<const FVector> U) {
  const std::uint32_t p = form.modulus();
  const auto d = static_cast<std::size_t>(form.dim());
  if (ts.size() != ks.size()) throw DimensionMismatch("one target value per wedge is required");
  require_shape(U, p, d);
  if (!independent_wedges(ts, p, wedge_count(form))) throw DomainError("wedges are linearly dependent");
  if (!theta(U)) throw DomainError("excluded vectors are linearly dependent");

  FMatrix system(p, ts.size(), d);
  FVector rhs(p, ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ks[i].modulus() != p) throw DimensionMismatch("target value over a different field");
    const FVector f = pairing_functional(form, ts[i]);
    for (std::size_t j = 0; j < d; ++j) system.set(i, j, f[j]);
    rhs.set(i, ks[i].value());
  }
  const auto x0 = solve(system, rhs);
  if (!x0) throw NoSolution("pairing system is inconsistent");

  std::vector<FVector> probe(U.begin(), U.end());
  probe.push_back(*x0);
  if (theta(probe)) return *x0;
  for (const FVector& k : kernel_basis(system)) {
    probe.back() = *x0 + k;
    if (theta(probe)) return probe.back();
  }
  throw NoSolution("every solution lies in the span of the excluded vectors");
}

AlternatingForm extend_step(const AlternatingForm& form) {
  const std::uint32_t p = form.modulus();
  const int n = form.arity();
  const int d = form.dim();
  const std::vector<FVector> rad = kernel_basis(psi_matrix(form));
  if (rad.empty()) return form;
  const int r = static_cast<int>(rad.size());
  if (d + r > kMaxTowerDim) {
    throw SizeGuard("extension to dimension " + std::to_string(d + r) + " exceeds " +
                    std::to_string(kMaxTowerDim));
  }

  // Complete the radical basis to a basis of the wedge space.
  const std::size_t m = wedge_count(form);
  std::vector<FVector> basis = rad;
  for (std::size_t i = 0; i < m && basis.size() < m; ++i) {
    basis.push_back(FVector::unit(p, m, i));
    if (!theta(basis)) basis.pop_back();
  }
  // Fresh vector w_i has coefficient f_i(I) on I + {d+i}; pairing with basis
  // wedge t_j is <t_j, f_i>, so f_i solves T^T f_i = e_i.
  const FMatrix tt = FMatrix::from_rows(basis, p, m);
  const auto wedges = combinations(d, n - 1);
  AlternatingForm out = form.embedded(d + r);
  for (int i = 0; i < r; ++i) {
    const auto f = solve(tt, FVector::unit(p, m, static_cast<std::size_t>(i)));
    if (!f) throw DomainError("completed wedge basis is singular");
    for (std::size_t w = 0; w < m; ++w) {
      if ((*f)[w] == 0) continue;
      IndexTuple key = wedges[w];
      key.push_back(d + i);
      out.set_coeff(key, (*f)[w]);
    }
  }
  return out;
}

TowerCertificate certify_step(const AlternatingForm& from, const AlternatingForm& to) {
  TowerCertificate cert;
  cert.from_dim = from.dim();
  cert.to_dim = to.dim();
  cert.radical_size = static_cast<std::size_t>(to.dim() - from.dim());
  const int k = from.arity() - 1;
  std::vector<std::size_t> old_cols;
  std::size_t col = 0;
  for (const IndexTuple& idx : combinations(to.dim(), k)) {
    if (idx.back() < from.dim()) old_cols.push_back(col);
    ++col;
  }
  cert.required_rank = wedge_count(from);
  cert.restricted_rank = rank(psi_matrix(to).select_columns(old_cols));
  return cert;
}

Tower certify_tower(const AlternatingForm& form0, int steps) {
  if (steps < 0) throw DomainError("negative step count");
  Tower tower;
  tower.levels.push_back(form0);
  for (int s = 0; s < steps; ++s) {
    AlternatingForm next = extend_step(tower.top());
    TowerCertificate cert = certify_step(tower.top(), next);
    if (!cert.passed()) throw DomainError("injectivity certificate failed at step " + std::to_string(s));
    tower.certificates.push_back(cert);
    tower.levels.push_back(std::move(next));
  }
  return tower;
}

bool nondeg_pure_tensors_bruteforce(const AlternatingForm& form) {
  const std::uint32_t p = form.modulus();
  const int d = form.dim();
  const int r = form.arity() - 1;
  if (r > d) return true;
  const std::uint64_t budget = enumeration_budget(1'000'000);
  const std::uint64_t count = gaussian_binomial(static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(r), p);
  if (count > budget) {
    throw TooLarge(std::to_string(count) + " subspaces exceed the enumeration budget " +
                   std::to_string(budget));
  }
  for (const IndexTuple& pivots : combinations(d, r)) {
    // Free entries: row i, columns after its pivot that are not pivots.
    std::vector<std::pair<int, int>> free;
    for (int i = 0; i < r; ++i) {
      for (int c = pivots[static_cast<std::size_t>(i)] + 1; c < d; ++c) {
        if (!std::binary_search(pivots.begin(), pivots.end(), c)) free.emplace_back(i, c);
      }
    }
    std::vector<Residue> digits(free.size(), 0);
    for (;;) {
      std::vector<FVector> rows(static_cast<std::size_t>(r), FVector(p, static_cast<std::size_t>(d)));
      for (int i = 0; i < r; ++i) rows[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)]), 1);
      for (std::size_t f = 0; f < free.size(); ++f) {
        rows[static_cast<std::size_t>(free[f].first)].set(static_cast<std::size_t>(free[f].second), digits[f]);
      }
      if (pairing_functional(form, wedge_of_vectors(rows)).is_zero()) return false;
      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }
  }
  return true;
}

AlternatingForm random_form(std::uint32_t p, int n, int d, std::uint64_t seed) {
  AlternatingForm form(p, n, d);
  Rng rng(seed);
  for (const IndexTuple& idx : combinations(d, n)) {
    form.set_coeff(idx, static_cast<std::int64_t>(uniform_below(rng, p)));
  }
  return form;
}

AlternatingForm volume_form(std::uint32_t p, int n, std::int64_t c) {
  AlternatingForm form(p, n, n);
  IndexTuple all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  form.set_coeff(all, c);
  return form;
}

AlternatingForm standard_symplectic(std::uint32_t p, int d) {
  AlternatingForm form(p, 2, d);
  for (int i = 0; i + 1 < d; i += 2) form.set_coeff({i, i + 1}, 1);
  return form;
}

}  // namespace multiform
