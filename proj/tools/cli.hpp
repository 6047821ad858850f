#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "linper/selfcheck.hpp"

namespace linper::cli {

enum class Format { Tsv, Json };

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInvalidConfig = 2 };

struct RunConfig {
  std::string command;
  std::vector<int> params;  // positional integers, in command order
  std::string blocks;       // levi only
  Format format = Format::Tsv;
  int jobs = 1;
  Bounds bounds;
  std::vector<std::string> raised_bounds;
  std::uint64_t seed = 0;  // reserved; every algorithm here is exact
};

/// Parses argv into `config`. Returns an exit code when the process should
/// stop right away (help, usage errors), otherwise nullopt.
std::optional<int> parse_command_line(int argc, const char* const* argv, RunConfig& config, std::ostream& out,
                                      std::ostream& err);

/// Executes the configured subcommand, writing the report to `out` and
/// diagnostics to `err`. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace linper::cli
