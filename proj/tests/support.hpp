#pragma once

#include <string>
#include <vector>

#include "multiform/ffla.hpp"

namespace testing {

inline multiform::FVector vec(std::uint32_t p, std::vector<std::int64_t> coords) {
  return multiform::FVector(p, coords);
}

inline std::vector<multiform::FVector> vecs(std::uint32_t p, std::vector<std::vector<std::int64_t>> rows) {
  std::vector<multiform::FVector> out;
  for (auto& r : rows) out.emplace_back(p, r);
  return out;
}

inline multiform::FVector e(std::uint32_t p, std::size_t d, std::size_t i) { return multiform::FVector::unit(p, d, i); }

inline std::string source_path(const std::string& rel) { return std::string(MULTIFORM_SOURCE_DIR) + "/" + rel; }

}  // namespace testing
