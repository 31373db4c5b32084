#pragma once

// Exact linear algebra over prime fields F_p (p prime, p < 2^16), plus the two
// vector-space primitives of the quantifier-elimination language: the
// independence predicate theta and the total coordinate function.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace multiform {

using Residue = std::uint32_t;

constexpr std::uint32_t kMaxModulus = 1u << 16;

bool is_prime(std::uint32_t p);

// Throws DomainError unless p is a prime below 2^16.
void require_modulus(std::uint32_t p);

namespace zp {

inline Residue add(Residue a, Residue b, std::uint32_t p) {
  const Residue s = a + b;
  return s >= p ? s - p : s;
}
inline Residue sub(Residue a, Residue b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}
inline Residue neg(Residue a, std::uint32_t p) { return a == 0 ? 0 : p - a; }
inline Residue mul(Residue a, Residue b, std::uint32_t p) {
  return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p);
}
inline Residue reduce(std::int64_t x, std::uint32_t p) {
  const std::int64_t r = x % static_cast<std::int64_t>(p);
  return static_cast<Residue>(r < 0 ? r + p : r);
}
// Multiplicative inverse; `a` must be nonzero mod p.
Residue inv(Residue a, std::uint32_t p);

}  // namespace zp

// A residue class together with its modulus.
class Scalar {
 public:
  Scalar(std::int64_t value, std::uint32_t p) : value_(zp::reduce(value, p)), p_(p) {}

  Residue value() const { return value_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return value_ == 0; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const { return Scalar(zp::neg(value_, p_), p_); }
  Scalar inverse() const;

  bool operator==(const Scalar&) const = default;

 private:
  Residue value_;
  std::uint32_t p_;
};

// Element of F_p^d.
class FVector {
 public:
  FVector() = default;
  FVector(std::uint32_t p, std::size_t dim) : p_(p), coords_(dim, 0) {}
  // Entries are reduced mod p.
  FVector(std::uint32_t p, const std::vector<std::int64_t>& coords);

  static FVector unit(std::uint32_t p, std::size_t dim, std::size_t i);

  std::uint32_t modulus() const { return p_; }
  std::size_t dim() const { return coords_.size(); }
  Residue operator[](std::size_t i) const { return coords_[i]; }
  void set(std::size_t i, Residue v) { coords_[i] = v % p_; }
  std::span<const Residue> coords() const { return coords_; }
  bool is_zero() const;

  FVector& operator+=(const FVector& o);
  FVector& operator-=(const FVector& o);
  FVector scaled(Residue c) const;
  // this += c * o
  void add_scaled(const FVector& o, Residue c);

  friend FVector operator+(FVector a, const FVector& b) { return a += b; }
  friend FVector operator-(FVector a, const FVector& b) { return a -= b; }

  bool operator==(const FVector&) const = default;
  auto operator<=>(const FVector&) const = default;

 private:
  std::uint32_t p_ = 2;
  std::vector<Residue> coords_;
};

// Dense row-major matrix over F_p.
class FMatrix {
 public:
  FMatrix() = default;
  FMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
      : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  // Matrix whose rows are `rows`; `cols` is needed when `rows` is empty.
  static FMatrix from_rows(std::span<const FVector> rows, std::uint32_t p, std::size_t cols);
  static FMatrix from_columns(std::span<const FVector> columns, std::uint32_t p,
                              std::size_t rows);
  static FMatrix identity(std::uint32_t p, std::size_t n);

  std::uint32_t modulus() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Residue v) { data_[r * cols_ + c] = v % p_; }
  std::span<Residue> row_span(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Residue> row_span(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  FVector row(std::size_t r) const;
  FVector column(std::size_t c) const;
  FMatrix transposed() const;
  FVector operator*(const FVector& x) const;
  // Submatrix keeping the listed columns, in the given order.
  FMatrix select_columns(std::span<const std::size_t> cols) const;

  bool operator==(const FMatrix&) const = default;

 private:
  std::uint32_t p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> data_;
};

struct RowEchelon {
  FMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

// Unique reduced row-echelon form.
RowEchelon rref(const FMatrix& m);
std::size_t rank(const FMatrix& m);
Residue determinant(const FMatrix& m);

// Basis of the right null space, one vector per free column in increasing
// column order (free coordinate set to 1, other free coordinates 0).
std::vector<FVector> kernel_basis(const FMatrix& m);

// Some x with m * x = b, free variables set to 0; nullopt when inconsistent.
std::optional<FVector> solve(const FMatrix& m, const FVector& b);

// Linear independence over F_p. The empty list is independent.
// Throws DimensionMismatch on mixed moduli or dimensions.
bool theta(std::span<const FVector> vs);

// Coordinates of v with respect to `basis` when `basis` is independent and v
// lies in its span; nullopt otherwise.
std::optional<std::vector<Residue>> coordinates(const FVector& v,
                                                std::span<const FVector> basis);

// Language coordinate function, 0-based index i < |basis|: the i-th
// coefficient of v in `basis` when theta(basis) holds and v is in the span,
// and 0 otherwise.
Scalar coord(const FVector& v, std::span<const FVector> basis, std::size_t i);

// Throws DimensionMismatch unless all vectors have modulus p and dimension d.
void require_shape(std::span<const FVector> vs, std::uint32_t p, std::size_t d);

}  // namespace multiform
