#pragma once

// The acceptance experiments 1-8, each returning a pass flag and a JSON
// record of what was measured. Output depends only on the seed.

#include <cstdint>
#include <string>

#include "multiform/io.hpp"

namespace multiform::lab {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double time_limit_seconds = 0;
  Json details;
};

constexpr std::uint64_t kDefaultSeed = 20260419;
constexpr int kExperimentCount = 8;

// Throws DomainError for ids outside 1..8.
CriterionResult run_criterion(int id, std::uint64_t seed);

CriterionResult bad_hypergraph_exactness();
CriterionResult sauer_shelah_classical(std::uint64_t seed);
CriterionResult finite_dimension_obstruction(std::uint64_t seed);
CriterionResult extension_chain(std::uint64_t seed);
CriterionResult qe_versus_brute_force(std::uint64_t seed);
CriterionResult g_infty_identity(std::uint64_t seed);
CriterionResult dagger_sanity();
CriterionResult composition_suite(std::uint64_t seed);

}  // namespace multiform::lab
