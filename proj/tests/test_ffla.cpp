#include <doctest.h>

#include "multiform/error.hpp"
#include "multiform/ffla.hpp"
#include "multiform/random.hpp"
#include "support.hpp"

using namespace multiform;
using testing::vec;
using testing::vecs;

TEST_CASE("rref of the identity and of zero") {
  const auto id = FMatrix::identity(2, 3);
  const auto r = rref(id);
  CHECK(r.reduced == id);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
  CHECK(r.rank() == 3);

  const FMatrix zero(2, 2, 3);
  const auto z = rref(zero);
  CHECK(z.reduced == zero);
  CHECK(z.pivots.empty());
}

TEST_CASE("rref eliminates a dependent row") {
  const auto m = FMatrix::from_rows(vecs(5, {{1, 2}, {2, 4}}), 5, 2);
  const auto r = rref(m);
  CHECK(r.reduced == FMatrix::from_rows(vecs(5, {{1, 2}, {0, 0}}), 5, 2));
  CHECK(r.rank() == 1);
}

TEST_CASE("rref is reduced and unique") {
  const auto m = FMatrix::from_rows(vecs(7, {{0, 3, 1, 4}, {2, 1, 0, 5}, {2, 4, 1, 2}}), 7, 4);
  const auto r = rref(m);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  CHECK(r.reduced.at(0, 0) == 1);
  CHECK(r.reduced.at(1, 0) == 0);
  CHECK(r.reduced.at(0, 1) == 0);
  CHECK(r.reduced.at(1, 1) == 1);
  CHECK(rref(r.reduced).reduced == r.reduced);
}

TEST_CASE("kernel bases") {
  CHECK(kernel_basis(FMatrix::identity(3, 4)).empty());
  const auto k0 = kernel_basis(FMatrix(5, 3, 3));
  REQUIRE(k0.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(k0[i] == FVector::unit(5, 3, i));
  const auto k1 = kernel_basis(FMatrix::from_rows(vecs(2, {{1, 1}}), 2, 2));
  REQUIRE(k1.size() == 1);
  CHECK(k1[0] == vec(2, {1, 1}));
}

TEST_CASE("solve") {
  const auto b = vec(3, {2, 0, 1});
  CHECK(solve(FMatrix::identity(3, 3), b) == b);
  CHECK_FALSE(solve(FMatrix(2, 1, 1), vec(2, {1})).has_value());
  const auto m = FMatrix::from_rows(vecs(3, {{1, 1}, {0, 1}}), 3, 2);
  CHECK(solve(m, vec(3, {2, 1})) == vec(3, {1, 1}));
}

TEST_CASE("solve sets free variables to zero") {
  const auto m = FMatrix::from_rows(vecs(5, {{1, 0, 2}, {0, 1, 3}}), 5, 3);
  CHECK(solve(m, vec(5, {4, 1})) == vec(5, {4, 1, 0}));
}

TEST_CASE("theta") {
  CHECK(theta(std::vector<FVector>{}));
  CHECK(theta(vecs(2, {{1, 0, 0}, {0, 1, 0}})));
  const auto v = vec(3, {1, 2, 0});
  CHECK_FALSE(theta(std::vector<FVector>{v, v}));
  CHECK_FALSE(theta(vecs(2, {{0, 0, 0}})));
  CHECK_THROWS_AS(theta(vecs(2, {{1, 0}, {0, 1, 0}})), DimensionMismatch);
}

TEST_CASE("coord is total and 0-based") {
  const auto basis = vecs(5, {{1, 0, 1}, {0, 1, 1}});
  const auto v = basis[0].scaled(2) + basis[1].scaled(3);
  CHECK(coord(v, basis, 0).value() == 2);
  CHECK(coord(v, basis, 1).value() == 3);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) CHECK(coord(basis[j], basis, i).value() == (i == j ? 1u : 0u));
  }
  const auto dependent = vecs(5, {{1, 0, 0}, {2, 0, 0}});
  CHECK(coord(vec(5, {1, 0, 0}), dependent, 0).value() == 0);
  CHECK(coord(vec(5, {0, 0, 1}), basis, 0).value() == 0);
  CHECK_THROWS_AS(coord(v, basis, 7), DomainError);
}

TEST_CASE("random linear algebra properties") {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5, 7, 65521}[trial % 5];
    const std::size_t rows = 1 + uniform_below(rng, 5), cols = 1 + uniform_below(rng, 5);
    FMatrix m(p, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, static_cast<Residue>(uniform_below(rng, p)));
    }
    FVector x0(p, cols);
    for (std::size_t c = 0; c < cols; ++c) x0.set(c, static_cast<Residue>(uniform_below(rng, p)));
    const auto x = solve(m, m * x0);
    REQUIRE(x.has_value());
    CHECK(m * *x == m * x0);

    std::vector<FVector> row_list;
    for (std::size_t r = 0; r < rows; ++r) row_list.push_back(m.row(r));
    CHECK(theta(row_list) == (rank(m) == rows));

    const auto ker = kernel_basis(m);
    CHECK(ker.size() == cols - rank(m));
    for (const auto& k : ker) CHECK((m * k).is_zero());
    CHECK(theta(ker));

    if (theta(row_list)) {
      FVector v(p, cols);
      for (std::size_t r = 0; r < rows; ++r) v.add_scaled(row_list[r], static_cast<Residue>(uniform_below(rng, p)));
      FVector back(p, cols);
      for (std::size_t r = 0; r < rows; ++r) back.add_scaled(row_list[r], coord(v, row_list, r).value());
      CHECK(back == v);
    }
  }
}

TEST_CASE("scalar arithmetic") {
  const Scalar a(3, 7), b(5, 7);
  CHECK((a + b).value() == 1);
  CHECK((a - b).value() == 5);
  CHECK((a * b).value() == 1);
  CHECK((a / b).value() == 2);
  CHECK((a * a.inverse()).value() == 1);
  CHECK(Scalar(-1, 7).value() == 6);
  CHECK_THROWS_AS(require_modulus(4), DomainError);
  CHECK_THROWS_AS(require_modulus(65537), DomainError);
}
