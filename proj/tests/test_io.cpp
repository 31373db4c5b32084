#include <doctest.h>

#include "multiform/error.hpp"
#include "multiform/io.hpp"
#include "multiform/random.hpp"
#include "support.hpp"

using namespace multiform;

TEST_CASE("form JSON round trip and canonical bytes") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto f = random_form(5, 3, 5, s);
    const auto j = to_json(f);
    CHECK(form_from_json(j) == f);
    CHECK(to_json(form_from_json(Json::parse(j.dump()))).dump() == j.dump());
  }
  const auto unordered = Json::parse(R"({"d": 3, "n": 2, "p": 3, "coeffs": [[[1, 2], 2], [[0, 1], 1]]})");
  CHECK(to_json(form_from_json(unordered)).dump() == R"({"coeffs":[[[0,1],1],[[1,2],2]],"d":3,"n":2,"p":3})");
}

TEST_CASE("form JSON rejects malformed input") {
  CHECK_THROWS_AS(form_from_json(Json::parse(R"({"p": 2, "n": 2, "d": 2, "coeffs": [[[1, 0], 1]]})")), DomainError);
  CHECK_THROWS_AS(form_from_json(Json::parse(R"({"p": 2, "n": 2, "d": 2, "coeffs": [[[0, 2], 1]]})")), DomainError);
  CHECK_THROWS_AS(form_from_json(Json::parse(R"({"p": 2, "n": 2, "d": 2, "coeffs": [[[0, 1], 1], [[0, 1], 0]]})")),
                  DomainError);
  CHECK_THROWS_AS(form_from_json(Json::parse(R"({"p": 9, "n": 2, "d": 2, "coeffs": []})")), DomainError);
}

TEST_CASE("vectors, wedges and hypergraphs") {
  const FVector v(7, std::vector<std::int64_t>{1, 0, 6});
  CHECK(to_json(v) == Json::parse(R"({"p": 7, "coords": [1, 0, 6]})"));
  CHECK(vector_from_json(to_json(v), 7) == v);
  CHECK(vector_from_json(Json::parse("[8, 0, -1]"), 7) == v);
  CHECK_THROWS_AS(vector_from_json(to_json(v), 5), DomainError);

  WedgeVector t(3, 2, 4);
  t.set_coeff({0, 3}, 2);
  t.set_coeff({1, 2}, 1);
  CHECK(to_json(t) == Json::parse(R"({"p": 3, "n": 3, "d": 4, "terms": [[0, 3, 2], [1, 2, 1]]})"));
  CHECK(wedge_from_json(to_json(t)) == t);

  const auto g = random_partite_extension_graph(std::vector<std::size_t>{2, 3, 4}, 3);
  CHECK(hypergraph_from_json(to_json(g)) == g);
}

TEST_CASE("oracle descriptions") {
  const auto order = oracle_from_json(Json::parse(R"({"kind": "order", "size": 4})"));
  CHECK(order(std::vector<std::size_t>{1, 3}));
  CHECK_FALSE(order(std::vector<std::size_t>{3, 1}));
  const auto table = oracle_from_json(Json::parse(R"({"kind": "table", "universes": [2, 2], "table": "0110"})"));
  CHECK(table(std::vector<std::size_t>{0, 1}));
  CHECK_FALSE(table(std::vector<std::size_t>{1, 1}));
  CHECK_THROWS_AS(oracle_from_json(Json::parse(R"({"kind": "table", "universes": [2, 2], "table": "01"})")),
                  DomainError);
  CHECK_THROWS_AS(oracle_from_json(Json::parse(R"({"kind": "unknown"})")), DomainError);
  const auto composed = oracle_from_json(Json::parse(
      R"({"kind": "composed", "base": {"kind": "order", "size": 4}, "universes": [2, 2],
          "functions": [{"slots": [0], "values": [3, 0]}, {"slots": [1], "values": [1, 2]}]})"));
  CHECK(composed(std::vector<std::size_t>{1, 0}));
  CHECK_FALSE(composed(std::vector<std::size_t>{0, 1}));
}
