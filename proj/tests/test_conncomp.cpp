#include <doctest.h>

#include "multiform/conncomp.hpp"
#include "multiform/lab/oracles.hpp"
#include "multiform/mform.hpp"
#include "multiform/random.hpp"
#include "support.hpp"

using namespace multiform;
using testing::e;
using testing::vec;

namespace {

Subspace span(std::uint32_t p, std::size_t d, std::vector<FVector> gens) { return Subspace(p, d, gens); }

FVector random_vec(Rng& rng, std::uint32_t p, std::size_t d) {
  FVector v(p, d);
  for (std::size_t i = 0; i < d; ++i) v.set(i, static_cast<Residue>(uniform_below(rng, p)));
  return v;
}

}  // namespace

TEST_CASE("subspaces are canonical") {
  const auto a = span(3, 3, {vec(3, {1, 1, 0}), vec(3, {0, 1, 1})});
  const auto b = span(3, 3, {vec(3, {1, 2, 1}), vec(3, {1, 0, 2}), vec(3, {2, 2, 0})});
  CHECK(a == b);
  CHECK(a.dim() == 2);
  CHECK(a.codim() == 1);
  CHECK(a.contains(vec(3, {1, 2, 1})));
  CHECK_FALSE(a.contains(e(3, 3, 0)));
  CHECK(span(3, 3, {e(3, 3, 0)}).intersect(a).dim() == 0);
  CHECK(a.is_subspace_of(Subspace::full(3, 3)));
}

TEST_CASE("v_perp") {
  const auto symp = standard_symplectic(2, 4);
  CHECK(v_perp(symp, std::vector<FVector>{FVector(2, 4)}) == Subspace::full(2, 4));
  CHECK(v_perp(symp, std::vector<FVector>{e(2, 4, 0)}) == span(2, 4, {e(2, 4, 0), e(2, 4, 2), e(2, 4, 3)}));

  const auto vol = volume_form(5, 3, 4);
  CHECK(v_perp(vol, std::vector<FVector>{e(5, 3, 0), e(5, 3, 1)}) == span(5, 3, {e(5, 3, 0), e(5, 3, 1)}));
  const auto v = vec(5, {1, 2, 3});
  CHECK(v_perp(vol, std::vector<FVector>{v, v.scaled(2)}) == Subspace::full(5, 3));
}

TEST_CASE("g_infty") {
  const auto symp = standard_symplectic(2, 4);
  CHECK(g_infty(symp, std::vector<FVector>{}) == Subspace::full(2, 4));
  CHECK(g_infty(symp, std::vector<FVector>{e(2, 4, 0)}) == span(2, 4, {e(2, 4, 0), e(2, 4, 2), e(2, 4, 3)}));
  CHECK(g_infty(symp, std::vector<FVector>{e(2, 4, 0), e(2, 4, 2)}) == span(2, 4, {e(2, 4, 0), e(2, 4, 2)}));
}

TEST_CASE("intersection identity examples") {
  const auto symp = standard_symplectic(2, 4);
  const std::vector<std::vector<FVector>> empty(2);
  CHECK(intersection_identity_check(symp, empty));
  const std::vector<std::vector<FVector>> parts{{e(2, 4, 0)}, {e(2, 4, 2)}};
  CHECK(intersection_identity_check(symp, parts));
}

TEST_CASE("g_infty properties on random instances") {
  Rng rng(606);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + trial % 2;
    const auto form = random_form(2, n, 5, rng());
    std::vector<FVector> a, b;
    for (std::size_t i = 0, m = uniform_below(rng, 3); i < m; ++i) a.push_back(random_vec(rng, 2, 5));
    b = a;
    for (std::size_t i = 0, m = 1 + uniform_below(rng, 2); i < m; ++i) b.push_back(random_vec(rng, 2, 5));
    const auto ga = g_infty(form, a), gb = g_infty(form, b);
    CHECK(gb.is_subspace_of(ga));
    CHECK(ga == g_infty_all_tuples(form, a));
    CHECK(lab::span_closure(ga.basis(), 2, 5) == lab::brute_perp_set(form, a));

    std::vector<std::vector<FVector>> parts(static_cast<std::size_t>(n));
    for (auto& part : parts) {
      for (std::size_t i = 0, m = uniform_below(rng, 3); i < m; ++i) part.push_back(random_vec(rng, 2, 5));
    }
    CHECK(intersection_identity_check(form, parts));

    if (!a.empty()) {
      std::vector<FVector> rotated(a.rbegin(), a.rend());
      if (static_cast<int>(a.size()) == n - 1) CHECK(v_perp(form, a) == v_perp(form, rotated));
    }
  }
}

TEST_CASE("codimension is bounded by the number of tuples") {
  const auto form = random_form(3, 2, 6, 11);
  Rng rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<FVector> a;
    for (std::size_t i = 0, m = uniform_below(rng, 4); i < m; ++i) a.push_back(random_vec(rng, 3, 6));
    CHECK(g_infty(form, a).codim() <= a.size());
  }
}
