#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "veinseg/config.hpp"

namespace veinseg {

struct BatchSummary {
  int processed = 0;
  int warnings = 0;
  double seconds = 0.0;
  std::vector<std::filesystem::path> outputs;
};

/// Files named directly plus the regular files of any named directory
/// (sorted by name, not recursive).
std::vector<std::filesystem::path> expand_inputs(
    const std::vector<std::filesystem::path>& inputs);

/// Processes every input independently, writing `<stem>.final.pgm` (plus
/// intermediates and the baseline map when configured) into the output
/// directory. Per-stage report lines go to `report`; unreadable or corrupt
/// inputs are skipped with a line on `warnings`.
///
/// Throws UsageError when no input could be processed, or IoError when
/// inputs loaded but no output could be written.
BatchSummary run_batch(const PipelineConfig& cfg, std::ostream& report, std::ostream& warnings);

}  // namespace veinseg
