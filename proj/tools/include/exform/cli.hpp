#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace exform::cli {

/// Exit codes of the exform binary.
enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

struct CommandResult {
  int exit_code = kPass;
  /// {command, inputs, results, status}; null for usage errors and --help.
  nlohmann::ordered_json report;
  /// Human-readable summary, one line per row.
  std::string table;
  /// Help text or usage diagnostics.
  std::string message;
};

/// Runs one subcommand. `args` excludes the program name. Never throws.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace exform::cli
