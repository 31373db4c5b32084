#include <doctest.h>

#include <bit>
#include <cmath>
#include <set>
#include <sstream>

#include "multiform/boxvc.hpp"
#include "multiform/combinatorics.hpp"
#include "multiform/error.hpp"
#include "multiform/lab/oracles.hpp"
#include "multiform/mform.hpp"
#include "multiform/random.hpp"
#include "multiform/typecount.hpp"

using namespace multiform;

namespace {

Bitset bits(std::size_t size, std::initializer_list<std::size_t> members) {
  Bitset s(size);
  for (std::size_t m : members) s.set(m);
  return s;
}

BoxFamily powerset(std::vector<std::size_t> sizes) {
  BoxFamily fam(sizes);
  const std::size_t cells = product_size(sizes);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    Bitset s(cells);
    for (std::size_t i = 0; i < cells; ++i) s.set(i, (mask >> i) & 1u);
    fam.add(s);
  }
  return fam;
}

BoxFamily subsets_up_to(std::size_t n, int r) {
  BoxFamily fam({n});
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) > r) continue;
    Bitset s(n);
    for (std::size_t i = 0; i < n; ++i) s.set(i, (mask >> i) & 1u);
    fam.add(s);
  }
  return fam;
}

}  // namespace

TEST_CASE("shatters") {
  CHECK(shatters(powerset({2, 2}), Box{{{0, 1}, {0, 1}}}));
  BoxFamily empty_only({3});
  empty_only.add(Bitset(3));
  CHECK_FALSE(shatters(empty_only, Box{{{1}}}));
  BoxFamily k1({3});
  for (auto s : {bits(3, {}), bits(3, {1}), bits(3, {2}), bits(3, {1, 2})}) k1.add(s);
  CHECK(shatters(k1, Box{{{1, 2}}}));
  CHECK_THROWS_AS(shatters(k1, Box{{{1, 3}}}), DomainError);
}

TEST_CASE("vc_k") {
  CHECK(vc_k(powerset({2, 2})) == 2);
  BoxFamily empty_only({2, 2});
  empty_only.add(Bitset(4));
  CHECK(vc_k(empty_only) == 0);
  CHECK(vc_k(BoxFamily({3})) == 0);

  // Zero sets of <b, .> for the standard symplectic form on F_2^4.
  const auto symp = standard_symplectic(2, 4);
  BoxFamily hyper({16});
  for (std::uint64_t b = 0; b < 16; ++b) {
    Bitset s(16);
    for (std::uint64_t v = 0; v < 16; ++v) {
      const std::vector<FVector> args{decode_vector(b, 2, 4), decode_vector(v, 2, 4)};
      s.set(v, eval(symp, args).is_zero());
    }
    hyper.add(s);
  }
  CHECK(vc_k(hyper) == 4);
}

TEST_CASE("sauer_shelah_search") {
  const auto full = sauer_shelah_search(powerset({3}), 3);
  REQUIRE(full.has_value());
  CHECK(full->parts == std::vector<std::vector<std::size_t>>{{0, 1, 2}});

  const auto extremal = subsets_up_to(10, 3);
  CHECK(extremal.size() == 176);
  CHECK_FALSE(sauer_shelah_search(extremal, 4).has_value());

  Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    std::set<std::uint32_t> masks;
    while (masks.size() < 177) masks.insert(static_cast<std::uint32_t>(uniform_below(rng, 1024)));
    BoxFamily fam({10});
    for (auto m : masks) {
      Bitset s(10);
      for (std::size_t i = 0; i < 10; ++i) s.set(i, (m >> i) & 1u);
      fam.add(s);
    }
    const auto box = sauer_shelah_search(fam, 4);
    REQUIRE(box.has_value());
    CHECK(lab::brute_trace_count(fam, *box) == 16);
  }
}

TEST_CASE("search, dimension and trace count agree") {
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + uniform_below(rng, 2);
    const std::vector<std::size_t> sizes{n, n};
    BoxFamily fam(sizes);
    const std::size_t count = 1 + uniform_below(rng, 40);
    for (std::size_t i = 0; i < count; ++i) {
      Bitset s(n * n);
      for (std::size_t c = 0; c < n * n; ++c) s.set(c, coin(rng));
      fam.add(s);
    }
    fam.deduplicate();
    const std::size_t vc = vc_k(fam);
    for (std::size_t d = 1; d <= n; ++d) CHECK(sauer_shelah_search(fam, d).has_value() == (vc >= d));

    Box box;
    for (std::size_t i = 0; i < 2; ++i) box.parts.push_back({0, n - 1});
    const std::size_t traces = trace_count(fam, box);
    CHECK(traces == lab::brute_trace_count(fam, box));
    CHECK(shatters(fam, box) == (traces == 16));

    BoxFamily bigger = fam;
    Bitset extra(n * n);
    for (std::size_t c = 0; c < n * n; ++c) extra.set(c, coin(rng));
    bigger.add(extra);
    CHECK(vc_k(fam) <= vc_k(bigger));
  }
}

TEST_CASE("classical Sauer-Shelah on every size up to n = 8") {
  Rng rng(31);
  for (std::size_t n = 3; n <= 8; ++n) {
    for (std::size_t d = 1; d + 1 <= n; ++d) {
      std::uint64_t bound = 0;
      for (std::size_t i = 0; i <= d; ++i) bound += binomial(n, i);
      CHECK_FALSE(sauer_shelah_search(subsets_up_to(n, static_cast<int>(d)), d + 1).has_value());
      for (int trial = 0; trial < 20; ++trial) {
        std::set<std::uint32_t> masks;
        while (masks.size() < bound + 1) masks.insert(static_cast<std::uint32_t>(uniform_below(rng, 1u << n)));
        BoxFamily fam({n});
        for (auto m : masks) {
          Bitset s(n);
          for (std::size_t i = 0; i < n; ++i) s.set(i, (m >> i) & 1u);
          fam.add(s);
        }
        CHECK(sauer_shelah_search(fam, d + 1).has_value());
      }
    }
  }
}

TEST_CASE("binary format round trip") {
  BoxFamily fam({3, 5});
  fam.add(bits(15, {0, 14}));
  fam.add(bits(15, {3}));
  fam.add(bits(15, {0, 14}));
  std::stringstream buf;
  fam.write_binary(buf);
  const auto back = BoxFamily::read_binary(buf);
  CHECK(back.sizes() == fam.sizes());
  CHECK(back.size() == 2);
  std::stringstream junk("MFBX");
  CHECK_THROWS_AS(BoxFamily::read_binary(junk), DomainError);
}

TEST_CASE("bad hypergraph sizes") {
  const auto g = build_bad_hypergraph(2, 1, 2);
  CHECK(g.part_sizes == std::vector<std::size_t>{2, 8});
  CHECK(build_bad_hypergraph(3, 2, 2).part_sizes == std::vector<std::size_t>{2, 2, 64});
  CHECK_THROWS_AS(build_bad_hypergraph(3, 1, 5), SizeGuard);
}

TEST_CASE("bad hypergraph: edge count and long intervals") {
  for (std::size_t k : {2, 3}) {
    for (std::size_t d : {1, 2}) {
      for (std::size_t n : {2, 3}) {
        const auto g = build_bad_hypergraph(k, d, n);
        const std::size_t big_n = ipow(n, k - 1), types = std::size_t{1} << big_n;
        const std::size_t vk = g.part_sizes.back();
        CHECK(vk == 2 * d * types);
        CHECK(g.edge_count() == 2 * d * big_n * types / 2);
        const auto rel = hypergraph_oracle(g);
        std::vector<std::vector<std::size_t>> seqs(k - 1);
        for (auto& s : seqs) {
          for (std::size_t a = 0; a < n; ++a) s.push_back(a);
        }
        const std::size_t min_len = vk / d - 1;
        for (std::size_t start = 0; start + min_len <= vk; start += 1 + vk / 16) {
          std::vector<std::size_t> window;
          for (std::size_t c = start; c < start + min_len; ++c) window.push_back(c);
          CHECK(phi_types_realized(rel, 0, seqs, window) == types);
        }
      }
    }
  }
}

TEST_CASE("random partite graphs") {
  const std::vector<std::size_t> sizes{6, 6, 20};
  const auto g = random_partite_extension_graph(sizes, 9);
  CHECK(g == random_partite_extension_graph(sizes, 9));
  CHECK_FALSE(g == random_partite_extension_graph(sizes, 10));
  const double total = 720, sigma = std::sqrt(total / 4);
  CHECK(std::abs(static_cast<double>(g.edge_count()) - total / 2) < 4 * sigma);

  const double small = extension_score(random_partite_extension_graph(std::vector<std::size_t>{4, 8}, 1), 200, 1, 2);
  const double large = extension_score(random_partite_extension_graph(std::vector<std::size_t>{4, 128}, 1), 200, 1, 2);
  CHECK(small >= 0.0);
  CHECK(large <= 1.0);
  CHECK(large > small);
  CHECK(large > 0.9);
}

TEST_CASE("indiscernible sub-boxes") {
  ColorArray constant{{3, 4}, std::vector<int>(12, 7)};
  const std::vector<std::size_t> target{2, 3};
  const auto first = indiscernible_subbox(constant, target, 1000);
  REQUIRE(first.has_value());
  CHECK(first->parts == std::vector<std::vector<std::size_t>>{{0, 1}, {0, 1, 2}});

  for (int mask = 0; mask < 32; ++mask) {
    ColorArray line{{5}, {}};
    for (int i = 0; i < 5; ++i) line.labels.push_back((mask >> i) & 1);
    const std::vector<std::size_t> three{3};
    const auto box = indiscernible_subbox(line, three, 1000);
    REQUIRE(box.has_value());
    std::set<int> colors;
    for (std::size_t i : box->parts[0]) colors.insert(line.labels[i]);
    CHECK(colors.size() == 1);
  }

  const std::vector<std::size_t> too_big{4, 1};
  CHECK_FALSE(indiscernible_subbox(constant, too_big, 1000).has_value());

  ColorArray stripes{{6, 6}, {}};
  for (int i = 0; i < 36; ++i) stripes.labels.push_back(i % 2);
  const std::vector<std::size_t> wide{2, 4};
  CHECK_THROWS_AS(indiscernible_subbox(stripes, wide, 3), BudgetExceeded);
}
