#pragma once

// The `multiform` command line as a library, so tests can drive it in-process.
//
// Exit codes: 0 success, 2 domain error (including malformed JSON input),
// 3 budget or size guard, 64 unknown command or bad usage.

#include <iosfwd>
#include <string>
#include <vector>

#include "multiform/io.hpp"

namespace multiform::cli {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 64;

// args excludes the program name. JSON goes to `out` (or to --out), messages
// to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct GoldenCase {
  std::string name;
  // "{fixtures}" is replaced by the fixtures directory.
  std::vector<std::string> args;
};

// The regression suite: one or more invocations of every subcommand.
std::vector<GoldenCase> golden_suite();

// Golden file text: "exit <code>\n" followed by stdout.
std::string golden_text(const GoldenCase& c, const std::string& fixtures_dir, int threads);

// Runs every case twice at 1 and at 4 workers and compares each output with
// golden_dir/<name>.golden. Sets `passed` and returns per-case details.
Json golden_check(const std::string& fixtures_dir, const std::string& golden_dir, bool& passed);

// Rewrites every golden file from a single-worker run.
void write_goldens(const std::string& fixtures_dir, const std::string& golden_dir);

}  // namespace multiform::cli
