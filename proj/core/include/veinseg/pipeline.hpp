#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "veinseg/config.hpp"
#include "veinseg/image.hpp"

namespace veinseg {

struct StageReport {
  std::string stage;
  double seconds = 0.0;
  ImageStats stats;
};

struct PipelineResult {
  Image output;
  std::vector<StageReport> stages;
  /// Filled only with `emit_intermediates`: gray, gabor, close, erode, final.
  std::vector<std::pair<std::string, Image>> intermediates;
};

/// Runs odd-Gabor bank -> normalize -> close(disk) -> erode(line) -> stretch.
/// Reports one entry per stage: gabor, normalize, close, erode, stretch.
/// Errors are rethrown as StageError carrying the stage name.
PipelineResult run_pipeline(const PipelineConfig& cfg, const Image& img);

/// `stage=<name> ms=<t> min=<v> max=<v> mean=<v>`
std::string format_stage_report(const StageReport& report);

}  // namespace veinseg
