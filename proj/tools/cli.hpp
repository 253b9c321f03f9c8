#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "veinseg/config.hpp"

namespace veinseg::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kIoError = 2,
};

struct ParsedArgs {
  PipelineConfig config;
  bool help = false;
  std::string help_text;
};

/// Builds the effective configuration: defaults, then the `--config` file,
/// then command-line flags. `args` excludes the program name.
/// Throws UsageError naming the offending flag or key, IoError if the
/// config file cannot be read.
ParsedArgs parse_config(const std::vector<std::string>& args);

/// Full command: parse, run the batch, map errors to exit codes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace veinseg::cli
