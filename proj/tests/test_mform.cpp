#include <doctest.h>

#include <fstream>
#include <sstream>

#include "multiform/combinatorics.hpp"
#include "multiform/error.hpp"
#include "multiform/io.hpp"
#include "multiform/mform.hpp"
#include "multiform/random.hpp"
#include "support.hpp"

using namespace multiform;
using testing::e;
using testing::vec;

namespace {

FVector random_vec(Rng& rng, std::uint32_t p, int d) {
  FVector v(p, static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) v.set(static_cast<std::size_t>(i), static_cast<Residue>(uniform_below(rng, p)));
  return v;
}

}  // namespace

TEST_CASE("eval on basis tuples, repeats and transpositions") {
  const auto form = random_form(5, 3, 5, 99);
  for (const auto& t : combinations(5, 3)) {
    std::vector<FVector> vs;
    for (int i : t) vs.push_back(e(5, 5, static_cast<std::size_t>(i)));
    CHECK(eval(form, vs).value() == form.coeff(t));
  }
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<FVector> vs{random_vec(rng, 5, 5), random_vec(rng, 5, 5), random_vec(rng, 5, 5)};
    auto rep = vs;
    rep[2] = rep[0];
    CHECK(eval(form, rep).value() == 0);
    auto swapped = vs;
    std::swap(swapped[1], swapped[2]);
    CHECK(eval(form, swapped) == -eval(form, vs));
  }
}

TEST_CASE("eval is multilinear in every slot") {
  Rng rng(8);
  const auto form = random_form(7, 3, 4, 1234);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<FVector> vs{random_vec(rng, 7, 4), random_vec(rng, 7, 4), random_vec(rng, 7, 4)};
    const auto u = random_vec(rng, 7, 4);
    const Residue a = static_cast<Residue>(uniform_below(rng, 7)), b = static_cast<Residue>(uniform_below(rng, 7));
    const std::size_t slot = static_cast<std::size_t>(trial % 3);
    auto mixed = vs, with_u = vs;
    mixed[slot] = vs[slot].scaled(a) + u.scaled(b);
    with_u[slot] = u;
    CHECK(eval(form, mixed) == Scalar(a, 7) * eval(form, vs) + Scalar(b, 7) * eval(form, with_u));
  }
}

TEST_CASE("radical") {
  CHECK(radical(AlternatingForm(2, 3, 4)).size() == 6);
  CHECK(radical(volume_form(3, 3)).empty());
  CHECK(radical(standard_symplectic(2, 4)).empty());
  CHECK(radical(standard_symplectic(2, 5)).size() == 1);
}

TEST_CASE("non-degeneracy and genericity") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int n : {2, 3, 4}) {
      CHECK(is_nondegenerate(volume_form(p, n)));
      CHECK(is_generic(volume_form(p, n)));
    }
  }
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto f = random_form(2, 3, 4, s);
    CHECK_FALSE(is_nondegenerate(f));
    CHECK_FALSE(is_generic(f));
  }
  CHECK(is_nondegenerate(AlternatingForm(2, 4, 2)));
  CHECK_FALSE(is_generic(AlternatingForm(2, 3, 3)));
  CHECK_FALSE(is_nondegenerate(AlternatingForm(2, 3, 3)));
}

TEST_CASE("non-degenerate iff psi has full column rank") {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const int n = 2 + static_cast<int>(s % 2);
    const int d = n + static_cast<int>(s % 3);
    const auto f = random_form(3, n, d, s);
    const bool full = rank(psi_matrix(f)) == binomial(static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(n - 1));
    CHECK(is_nondegenerate(f) == full);
    CHECK(is_nondegenerate(f) == radical(f).empty());
    CHECK(is_generic(f) == is_nondegenerate(f));
  }
}

TEST_CASE("dual tuples") {
  const auto vol = volume_form(5, 3, 2);
  auto none = dual_tuples(vol, std::vector<FVector>{});
  CHECK(none.ts.empty());
  CHECK(none.us.empty());

  const auto dt = dual_tuples(vol, std::vector<FVector>{e(5, 3, 0), e(5, 3, 1)});
  REQUIRE(dt.ts.size() == 1);
  CHECK(dt.ts[0] == WedgeVector::basis(5, 2, 3, {0, 1}));
  CHECK(dt.us[0] == vec(5, {0, 0, 3}));

  CHECK_THROWS_AS(dual_tuples(AlternatingForm(5, 3, 4), std::vector<FVector>{e(5, 4, 0), e(5, 4, 1)}), NotGenericHere);

  const auto symp = standard_symplectic(3, 6);
  const std::vector<FVector> w{vec(3, {1, 0, 1, 0, 0, 0}), vec(3, {0, 0, 0, 1, 2, 0})};
  const auto d2 = dual_tuples(symp, w);
  for (std::size_t i = 0; i < d2.ts.size(); ++i) {
    for (std::size_t j = 0; j < d2.us.size(); ++j) CHECK(pairing2(symp, d2.ts[i], d2.us[j]).value() == (i == j ? 1u : 0u));
  }
}

TEST_CASE("find_w") {
  const auto symp = standard_symplectic(2, 4);
  CHECK(find_w(symp, {}, {}, {}) == e(2, 4, 0));

  const std::vector<WedgeVector> ts{WedgeVector::basis(2, 1, 4, {0})};
  const std::vector<Scalar> one{Scalar(1, 2)};
  const std::vector<FVector> U{e(2, 4, 0)};
  const auto w = find_w(symp, ts, one, U);
  CHECK(w == e(2, 4, 1));
  CHECK(pairing2(symp, ts[0], w).value() == 1);

  CHECK_THROWS_AS(find_w(AlternatingForm(2, 2, 4), ts, one, {}), NoSolution);
}

TEST_CASE("find_w output satisfies every constraint") {
  Rng rng(21);
  const auto tower = certify_tower(AlternatingForm(3, 3, 3), 1);
  const auto& top = tower.top();
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<FVector> U{random_vec(rng, 3, top.dim())};
    std::vector<WedgeVector> ts{WedgeVector::basis(3, 2, top.dim(), {0, 1}), WedgeVector::basis(3, 2, top.dim(), {0, 2})};
    std::vector<Scalar> ks{Scalar(static_cast<std::int64_t>(uniform_below(rng, 3)), 3),
                           Scalar(static_cast<std::int64_t>(uniform_below(rng, 3)), 3)};
    if (!theta(U)) continue;
    const auto w = find_w(top, ts, ks, U);
    for (std::size_t i = 0; i < ts.size(); ++i) CHECK(pairing2(top, ts[i], w) == ks[i]);
    U.push_back(w);
    CHECK(theta(U));
  }
}

TEST_CASE("extend_step") {
  const auto vol = volume_form(3, 3);
  CHECK(extend_step(vol) == vol);

  const auto from_zero = extend_step(AlternatingForm(2, 3, 2));
  CHECK(from_zero == volume_form(2, 3));

  const auto plane = extend_step(AlternatingForm(5, 2, 1));
  CHECK(plane == standard_symplectic(5, 2));

  AlternatingForm big(2, 2, 64);
  big.set_coeff({0, 1}, 1);
  CHECK_THROWS_AS(extend_step(big), SizeGuard);
}

TEST_CASE("certify_tower") {
  const AlternatingForm zero(2, 2, 2);
  const auto t0 = certify_tower(zero, 0);
  CHECK(t0.levels.size() == 1);
  CHECK(t0.certificates.empty());

  const auto t1 = certify_tower(zero, 1);
  REQUIRE(t1.levels.size() == 2);
  CHECK(t1.top().dim() == 4);
  CHECK(t1.certificates[0].radical_size == 2);
  CHECK(t1.certificates[0].passed());

  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto t = certify_tower(random_form(3, 3, 3 + static_cast<int>(s % 2), s), 1);
    for (const auto& c : t.certificates) {
      CHECK(c.passed());
      CHECK(c.to_dim == c.from_dim + static_cast<int>(c.radical_size));
    }
    // The new level restricts to the old one.
    for (const auto& [idx, c] : t.levels[0].coeffs()) CHECK(t.levels[1].coeff(idx) == c);
  }
}

TEST_CASE("tower levels pair nontrivially with every old wedge") {
  Rng rng(44);
  const auto tower = certify_tower(random_form(2, 3, 4, 5), 1);
  const auto& low = tower.levels[0];
  const auto& high = tower.levels[1];
  const auto width = binomial(static_cast<std::uint64_t>(low.dim()), 2);
  for (int trial = 0; trial < 50; ++trial) {
    FVector c(2, width);
    while (c.is_zero()) c = random_vec(rng, 2, static_cast<int>(width));
    const auto t = WedgeVector::from_coordinates(2, 2, low.dim(), c).embedded(high.dim());
    const std::vector<WedgeVector> ts{t};
    const std::vector<Scalar> ks{Scalar(1, 2)};
    CHECK(pairing2(high, t, find_w(high, ts, ks, {})).value() == 1);
  }
}

TEST_CASE("pure-tensor criterion") {
  CHECK(nondeg_pure_tensors_bruteforce(volume_form(2, 3)));
  CHECK_FALSE(nondeg_pure_tensors_bruteforce(AlternatingForm(2, 3, 4)));
  for (std::uint64_t s = 0; s < 40; ++s) {
    const auto f = random_form(2, 2 + static_cast<int>(s % 2), 3 + static_cast<int>(s % 3), s);
    if (is_nondegenerate(f)) CHECK(nondeg_pure_tensors_bruteforce(f));
  }
  // Exhaustive at p = 2, n = 3, d = 3.
  for (int c : {0, 1}) {
    AlternatingForm f(2, 3, 3);
    f.set_coeff({0, 1, 2}, c);
    CHECK(is_nondegenerate(f) == nondeg_pure_tensors_bruteforce(f));
  }
}

TEST_CASE("random_form") {
  CHECK(random_form(3, 3, 5, 7) == random_form(3, 3, 5, 7));
  CHECK(random_form(3, 4, 3, 7) == AlternatingForm(3, 4, 3));
  std::ifstream in(testing::source_path("tests/golden/form_random.golden"));
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "exit 0\n" + to_json(random_form(3, 3, 5, 7)).dump(2) + "\n");
}
