#pragma once

#include <optional>
#include <string>
#include <vector>

namespace steenrod::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kParseError = 2 };

struct Command {
  std::string name;
  std::vector<std::string> inputs;
  std::optional<std::string> simplex;
  std::optional<int> i;
  bool twist = false;
  bool homology = false;
  std::optional<std::string> base;
  std::optional<int> max_dim;
  std::optional<std::string> to;
  std::optional<std::string> out;
  std::optional<int> i_max;
  bool json = false;
};

struct Result {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

/// Runs one subcommand. Never throws; failures become exit codes and
/// diagnostics in `err`.
Result run(const Command& cmd);

}  // namespace steenrod::cli
