#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hitchlat/covers.hpp"

namespace hitchlat {

// One tool invocation. Which fields are required depends on the command;
// run() reports a usage error for anything missing or contradictory.
struct RunConfig {
  std::string command;  // verify | enumerate | genus | dim | lattice | cocycle
  std::optional<long> n;
  std::optional<int> g;
  std::optional<std::vector<long>> mu;
  EnumerationMode mode = EnumerationMode::ordered;
  std::string format = "text";  // text | json | csv (csv: enumerate only)
  std::optional<std::string> output;
  std::optional<unsigned long long> limit;
  int m = 3;                  // cocycle: number of charts
  std::string kind = "rank2";  // cocycle: rank2 | affine
};

// Executes the configured command, writing the report to `out` (or to
// config.output when set) and diagnostics to `err`. Exit status: 0 when
// every check matched, 1 when a verification failed, 2 for usage or
// input errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses command-line arguments into a RunConfig and dispatches to run.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace hitchlat
