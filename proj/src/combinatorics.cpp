#include "multiform/combinatorics.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "multiform/error.hpp"

namespace multiform {

namespace {
constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSat / a) return kSat;
  return a * b;
}
}  // namespace

std::uint64_t enumeration_budget(std::uint64_t fallback) {
  const char* env = std::getenv("MULTIFORM_BUDGET");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) return fallback;
  return static_cast<std::uint64_t>(v);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  // result_i = C(n - k + i, i) = result_{i-1} * (n - k + i) / i, exact at each step.
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > kSat) return kSat;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    result = sat_mul(result, base);
    if (result == kSat) return kSat;
  }
  return result;
}

std::uint64_t gaussian_binomial(std::uint64_t d, std::uint64_t r, std::uint64_t p) {
  if (r > d) return 0;
  // Count reduced echelon matrices: sum over pivot sets of p^(free entries).
  std::uint64_t total = 0;
  IndexTuple c(r);
  std::iota(c.begin(), c.end(), 0);
  if (r == 0) return 1;
  do {
    std::uint64_t free = 0;
    for (std::size_t i = 0; i < r; ++i) {
      // columns after pivot i that are not pivots
      free += (d - 1 - static_cast<std::uint64_t>(c[i])) - (r - 1 - i);
    }
    const std::uint64_t term = ipow(p, free);
    if (term == kSat || total > kSat - term) return kSat;
    total += term;
  } while (next_combination(c, static_cast<int>(d)));
  return total;
}

std::vector<IndexTuple> combinations(int d, int r) {
  std::vector<IndexTuple> out;
  if (r < 0 || r > d) return out;
  IndexTuple c(static_cast<std::size_t>(r));
  std::iota(c.begin(), c.end(), 0);
  do {
    out.push_back(c);
  } while (next_combination(c, d));
  return out;
}

bool next_combination(IndexTuple& c, int d) {
  const int r = static_cast<int>(c.size());
  int i = r - 1;
  while (i >= 0 && c[static_cast<std::size_t>(i)] == d - r + i) --i;
  if (i < 0) return false;
  ++c[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < r; ++j) {
    c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  return true;
}

std::size_t combination_rank(const IndexTuple& c, int d) {
  const std::size_t r = c.size();
  std::size_t rank = 0;
  int prev = -1;
  for (std::size_t i = 0; i < r; ++i) {
    for (int j = prev + 1; j < c[i]; ++j) {
      rank += static_cast<std::size_t>(
          binomial(static_cast<std::uint64_t>(d - 1 - j), r - 1 - i));
    }
    prev = c[i];
  }
  return rank;
}

bool is_strictly_increasing(const IndexTuple& t) {
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t[i - 1] >= t[i]) return false;
  }
  return true;
}

int sort_sign(const IndexTuple& t) {
  int inversions = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t[i] > t[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace multiform
