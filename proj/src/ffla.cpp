#include "multiform/ffla.hpp"

#include <string>
#include <utility>

#include "multiform/error.hpp"

namespace multiform {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

void require_modulus(std::uint32_t p) {
  if (p >= kMaxModulus || !is_prime(p)) {
    throw DomainError("modulus " + std::to_string(p) + " is not a prime below 65536");
  }
}

namespace zp {

Residue inv(Residue a, std::uint32_t p) {
  if (a % p == 0) throw DomainError("inverse of zero");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return reduce(t, p);
}

}  // namespace zp

namespace {

void require_same_modulus(std::uint32_t a, std::uint32_t b) {
  if (a != b) throw DimensionMismatch("scalars over different prime fields");
}

}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_modulus(p_, o.p_);
  return Scalar(zp::add(value_, o.value_, p_), p_);
}
Scalar Scalar::operator-(const Scalar& o) const {
  require_same_modulus(p_, o.p_);
  return Scalar(zp::sub(value_, o.value_, p_), p_);
}
Scalar Scalar::operator*(const Scalar& o) const {
  require_same_modulus(p_, o.p_);
  return Scalar(zp::mul(value_, o.value_, p_), p_);
}
Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }
Scalar Scalar::inverse() const { return Scalar(zp::inv(value_, p_), p_); }

// --- FVector ---

FVector::FVector(std::uint32_t p, const std::vector<std::int64_t>& coords)
    : p_(p), coords_(coords.size()) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords_[i] = zp::reduce(coords[i], p);
}

FVector FVector::unit(std::uint32_t p, std::size_t dim, std::size_t i) {
  FVector v(p, dim);
  v.coords_.at(i) = 1 % p;
  return v;
}

bool FVector::is_zero() const {
  for (Residue c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

FVector& FVector::operator+=(const FVector& o) {
  if (p_ != o.p_ || dim() != o.dim()) throw DimensionMismatch("vector shapes differ");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = zp::add(coords_[i], o.coords_[i], p_);
  return *this;
}

FVector& FVector::operator-=(const FVector& o) {
  if (p_ != o.p_ || dim() != o.dim()) throw DimensionMismatch("vector shapes differ");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = zp::sub(coords_[i], o.coords_[i], p_);
  return *this;
}

FVector FVector::scaled(Residue c) const {
  FVector out(*this);
  for (Residue& x : out.coords_) x = zp::mul(x, c % p_, p_);
  return out;
}

void FVector::add_scaled(const FVector& o, Residue c) {
  if (p_ != o.p_ || dim() != o.dim()) throw DimensionMismatch("vector shapes differ");
  c %= p_;
  if (c == 0) return;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] = zp::add(coords_[i], zp::mul(o.coords_[i], c, p_), p_);
  }
}

// --- FMatrix ---

FMatrix FMatrix::from_rows(std::span<const FVector> rows, std::uint32_t p, std::size_t cols) {
  require_shape(rows, p, cols);
  FMatrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.data_[r * cols + c] = rows[r][c];
  }
  return m;
}

FMatrix FMatrix::from_columns(std::span<const FVector> columns, std::uint32_t p,
                              std::size_t rows) {
  require_shape(columns, p, rows);
  FMatrix m(p, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t r = 0; r < rows; ++r) m.data_[r * m.cols_ + c] = columns[c][r];
  }
  return m;
}

FMatrix FMatrix::identity(std::uint32_t p, std::size_t n) {
  FMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1 % p;
  return m;
}

FVector FMatrix::row(std::size_t r) const {
  FVector v(p_, cols_);
  for (std::size_t c = 0; c < cols_; ++c) v.set(c, at(r, c));
  return v;
}

FVector FMatrix::column(std::size_t c) const {
  FVector v(p_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.set(r, at(r, c));
  return v;
}

FMatrix FMatrix::transposed() const {
  FMatrix t(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = at(r, c);
  }
  return t;
}

FVector FMatrix::operator*(const FVector& x) const {
  if (x.modulus() != p_ || x.dim() != cols_) throw DimensionMismatch("matrix-vector shape");
  FVector y(p_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      acc = (acc + static_cast<std::uint64_t>(at(r, c)) * x[c]) % p_;
    }
    y.set(r, static_cast<Residue>(acc));
  }
  return y;
}

FMatrix FMatrix::select_columns(std::span<const std::size_t> cols) const {
  FMatrix s(p_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < cols.size(); ++j) s.data_[r * cols.size() + j] = at(r, cols[j]);
  }
  return s;
}

// --- elimination ---

RowEchelon rref(const FMatrix& m) {
  RowEchelon out{m, {}};
  FMatrix& a = out.reduced;
  const std::uint32_t p = a.modulus();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < a.rows() && a.at(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != pivot_row) {
      auto x = a.row_span(sel);
      auto y = a.row_span(pivot_row);
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(x[c], y[c]);
    }
    auto prow = a.row_span(pivot_row);
    const Residue scale = zp::inv(prow[col], p);
    for (std::size_t c = col; c < a.cols(); ++c) prow[c] = zp::mul(prow[c], scale, p);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row) continue;
      auto row = a.row_span(r);
      const Residue f = row[col];
      if (f == 0) continue;
      for (std::size_t c = col; c < a.cols(); ++c) {
        row[c] = zp::sub(row[c], zp::mul(f, prow[c], p), p);
      }
    }
    out.pivots.push_back(col);
    ++pivot_row;
  }
  return out;
}

std::size_t rank(const FMatrix& m) { return rref(m).rank(); }

Residue determinant(const FMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::uint32_t p = m.modulus();
  FMatrix a = m;
  const std::size_t n = a.rows();
  Residue det = 1 % p;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a.at(sel, col) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      auto x = a.row_span(sel);
      auto y = a.row_span(col);
      for (std::size_t c = 0; c < n; ++c) std::swap(x[c], y[c]);
      det = zp::neg(det, p);
    }
    const Residue piv = a.at(col, col);
    det = zp::mul(det, piv, p);
    const Residue piv_inv = zp::inv(piv, p);
    auto prow = a.row_span(col);
    for (std::size_t r = col + 1; r < n; ++r) {
      auto row = a.row_span(r);
      const Residue f = zp::mul(row[col], piv_inv, p);
      if (f == 0) continue;
      for (std::size_t c = col; c < n; ++c) row[c] = zp::sub(row[c], zp::mul(f, prow[c], p), p);
    }
  }
  return det;
}

std::vector<FVector> kernel_basis(const FMatrix& m) {
  const RowEchelon e = rref(m);
  const std::uint32_t p = m.modulus();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<FVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    FVector x(p, m.cols());
    x.set(f, 1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      x.set(e.pivots[i], zp::neg(e.reduced.at(i, f), p));
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<FVector> solve(const FMatrix& m, const FVector& b) {
  if (b.modulus() != m.modulus() || b.dim() != m.rows()) {
    throw DimensionMismatch("right-hand side length differs from row count");
  }
  const std::uint32_t p = m.modulus();
  FMatrix aug(p, m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.set(r, c, m.at(r, c));
    aug.set(r, m.cols(), b[r]);
  }
  const RowEchelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  FVector x(p, m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x.set(e.pivots[i], e.reduced.at(i, m.cols()));
  return x;
}

void require_shape(std::span<const FVector> vs, std::uint32_t p, std::size_t d) {
  for (const FVector& v : vs) {
    if (v.modulus() != p) throw DimensionMismatch("vectors over different prime fields");
    if (v.dim() != d) throw DimensionMismatch("vectors of different dimensions");
  }
}

bool theta(std::span<const FVector> vs) {
  if (vs.empty()) return true;
  require_shape(vs, vs[0].modulus(), vs[0].dim());
  if (vs.size() > vs[0].dim()) return false;
  return rank(FMatrix::from_rows(vs, vs[0].modulus(), vs[0].dim())) == vs.size();
}

std::optional<std::vector<Residue>> coordinates(const FVector& v,
                                                std::span<const FVector> basis) {
  if (basis.empty()) {
    if (v.is_zero()) return std::vector<Residue>{};
    return std::nullopt;
  }
  require_shape(basis, v.modulus(), v.dim());
  if (!theta(basis)) return std::nullopt;
  const auto x = solve(FMatrix::from_columns(basis, v.modulus(), v.dim()), v);
  if (!x) return std::nullopt;
  return std::vector<Residue>(x->coords().begin(), x->coords().end());
}

Scalar coord(const FVector& v, std::span<const FVector> basis, std::size_t i) {
  if (i >= basis.size()) throw DomainError("coordinate index out of range");
  const auto c = coordinates(v, basis);
  return Scalar(c ? (*c)[i] : 0, v.modulus());
}

}  // namespace multiform
