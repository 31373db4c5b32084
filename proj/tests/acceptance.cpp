// Runs the nine acceptance criteria and prints one line per criterion.
// Usage: acceptance [--json DIR] [criterion ...]

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include "multiform/cli.hpp"
#include "multiform/lab/experiments.hpp"

using namespace multiform;

namespace {

struct Line {
  int id;
  std::string title;
  bool passed;
  double seconds;
  double limit;
  Json details;
};

Line run_one(int id) {
  const auto start = std::chrono::steady_clock::now();
  Line line{id, "", false, 0, 0, Json()};
  if (id == 9) {
    bool passed = false;
    line.details = cli::golden_check(std::string(MULTIFORM_SOURCE_DIR) + "/tests/fixtures",
                                     std::string(MULTIFORM_SOURCE_DIR) + "/tests/golden", passed);
    line.title = "golden determinism across runs and worker counts";
    line.passed = passed;
    line.limit = 120;
  } else {
    const auto r = lab::run_criterion(id, lab::kDefaultSeed);
    line.title = r.title;
    line.passed = r.passed;
    line.limit = r.time_limit_seconds;
    line.details = r.details;
  }
  line.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return line;
}

}  // namespace

int main(int argc, char** argv) {
  std::string json_dir;
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--json" && i + 1 < argc) {
      json_dir = argv[++i];
    } else {
      wanted.insert(std::stoi(a));
    }
  }
  if (wanted.empty()) {
    for (int id = 1; id <= 9; ++id) wanted.insert(id);
  }
  int failures = 0;
  for (int id : wanted) {
    const Line line = run_one(id);
    const bool in_time = line.seconds < line.limit;
    const bool ok = line.passed && in_time;
    failures += !ok;
    char buf[256];
    std::snprintf(buf, sizeof buf, "criterion %d %s  %-50s %8.2fs (limit %.0fs)%s", id, ok ? "PASS" : "FAIL",
                  line.title.c_str(), line.seconds, line.limit, in_time ? "" : " over time limit");
    std::cout << buf << std::endl;
    if (!json_dir.empty()) {
      std::ofstream(json_dir + "/criterion_" + std::to_string(id) + ".json") << line.details.dump(2) << "\n";
    }
  }
  return failures == 0 ? 0 : 1;
}
