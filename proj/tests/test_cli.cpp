#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "multiform/cli.hpp"
#include "support.hpp"

using namespace multiform;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json parsed(const Outcome& o) { return Json::parse(o.out); }

const std::string kFixtures = testing::source_path("tests/fixtures");

}  // namespace

TEST_CASE("badgraph part sizes") {
  const auto o = call({"vc", "badgraph", "--k", "2", "--d", "1", "--n", "2"});
  REQUIRE(o.code == 0);
  CHECK(parsed(o)["partSizes"] == Json::array({2, 8}));
  CHECK(parsed(o)["edges"].size() == 8);
}

TEST_CASE("nondeg on the volume fixture") {
  const auto o = call({"form", "nondeg", "--form", kFixtures + "/volume_p5_n3.json"});
  REQUIRE(o.code == 0);
  CHECK(parsed(o) == Json{{"nondegenerate", true}});
}

TEST_CASE("ginfty of the empty set is the whole space") {
  const auto o = call({"conn", "ginfty", "--form", kFixtures + "/symplectic_p2_d6.json"});
  REQUIRE(o.code == 0);
  const auto j = parsed(o);
  CHECK(j["dim"] == 6);
  CHECK(j["codim"] == 0);
  CHECK(j["basis"].size() == 6);
}

TEST_CASE("exit codes") {
  CHECK(call({"nonsense"}).code == cli::kExitUsage);
  CHECK(call({}).code == cli::kExitUsage);
  CHECK(call({"form"}).code == cli::kExitUsage);
  CHECK(call({"form", "random", "--p", "2", "--n", "2", "--d", "3"}).code == cli::kExitUsage);
  CHECK(call({"form", "nondeg", "--form", "{not json"}).code == cli::kExitDomain);
  CHECK(call({"form", "nondeg", "--form", "/nonexistent/form.json"}).code == cli::kExitDomain);
  CHECK(call({"form", "nondeg", "--form", R"({"p": 6, "n": 2, "d": 2, "coeffs": []})"}).code == cli::kExitDomain);
  CHECK(call({"form", "nondeg", "--form", R"({"p": 2, "n": 2, "d": 2, "coeffs": [[[0,1],1],[[0,1],1]]})"}).code ==
        cli::kExitDomain);
  CHECK(call({"form", "tower", "--form", kFixtures + "/zero_p2_n3_d6.json", "--steps", "3"}).code == cli::kExitBudget);
  CHECK(call({"vc", "badgraph", "--k", "3", "--d", "1", "--n", "5"}).code == cli::kExitBudget);
  CHECK(call({"experiment", "--criterion", "3"}).code == cli::kExitDomain);
  CHECK(call({"--help"}).code == cli::kExitOk);
}

TEST_CASE("budget override through the environment") {
  const std::vector<std::string> args{"vc", "ramsey", "--colors", kFixtures + "/colors_4x4.json", "--targets", "[3,3]"};
  CHECK(call(args).code == cli::kExitOk);
  setenv("MULTIFORM_BUDGET", "2", 1);
  const auto o = call(args);
  unsetenv("MULTIFORM_BUDGET");
  CHECK(o.code == cli::kExitBudget);
}

TEST_CASE("output file") {
  const std::string path = testing::source_path("build-test-out.json");
  const auto o = call({"--out", path, "form", "standard", "--kind", "volume", "--p", "3", "--n", "3"});
  CHECK(o.code == 0);
  CHECK(o.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::remove(path.c_str());
  CHECK(Json::parse(ss.str())["coeffs"] == Json::array({Json::array({Json::array({0, 1, 2}), 1})}));
}

TEST_CASE("worker count does not change output") {
  const std::vector<std::string> base{"vc", "sauer", "--family", kFixtures + "/subsets_le2_n6.mfbf", "--d", "2"};
  auto with = [&](const std::string& t) {
    auto args = base;
    args.insert(args.begin(), {"--threads", t});
    return call(args).out;
  };
  CHECK(with("1") == with("4"));
  CHECK(with("1") == with("0"));
}

TEST_CASE("dagger csv row") {
  const auto o = call({"types", "dagger", "--oracle", R"({"kind":"constant","universes":[1,2,9],"value":true})",
                       "--seqs", "[[0,1]]", "--long-range", "9", "--dexp", "1", "--eps", "0.5", "--csv"});
  REQUIRE(o.code == 0);
  CHECK(o.out == "k,n,m,d_exp,eps,bound_exponent,window_length,intervals,max_count,passed\n"
                 "2,2,9,1.0,0.5,2,4,6,1,1\n");
}

TEST_CASE("findw accepts wedge objects") {
  const auto o = call({"form", "findw", "--form", kFixtures + "/symplectic_p2_d6.json", "--wedges",
                       R"([{"p":2,"n":2,"d":6,"terms":[[2,1]]}])", "--values", "[1]"});
  REQUIRE(o.code == 0);
  CHECK(parsed(o)["w"] == Json::array({0, 0, 0, 1, 0, 0}));
}

TEST_CASE("golden suite covers every subcommand") {
  std::set<std::string> covered;
  for (const auto& c : cli::golden_suite()) {
    if (c.args.size() >= 2) covered.insert(c.args[0] + " " + c.args[1]);
  }
  for (const char* cmd : {"form eval", "form radical", "form nondeg", "form generic", "form dual", "form findw",
                          "form extend", "form tower", "form random", "form standard", "struct generate",
                          "struct invariant", "struct equiv", "struct embed", "vc shatter", "vc dim", "vc sauer",
                          "vc badgraph", "vc randgraph", "vc ramsey", "types count", "types dagger", "types compose",
                          "types arrayfam", "conn perp", "conn ginfty", "conn identity"}) {
    CHECK_MESSAGE(covered.count(cmd) == 1, cmd);
  }
}
