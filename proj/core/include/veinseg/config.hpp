#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "veinseg/convolution.hpp"
#include "veinseg/filter_bank.hpp"
#include "veinseg/gabor.hpp"

namespace veinseg {

enum class Baseline { kNone, kSobel, kPrewitt };

/// Every tunable of the vein pipeline. Defaults: wavelength 8, phase 0,
/// bandwidth 5, aspect ratio 0.5, eight orientations 22.5 degrees apart,
/// disk(3) closing, line(2, 0) erosion, 1% / 99% stretch.
struct PipelineConfig {
  std::vector<std::filesystem::path> inputs;
  std::filesystem::path output_dir = ".";

  GaborParams gabor;
  std::vector<double> orientations = evenly_spaced_orientations(8);
  Fusion fusion = Fusion::kMaxAbs;
  BorderMode border = BorderMode::kReflect;
  ConvolutionMode convolution = ConvolutionMode::kAuto;

  int disk_radius = 3;
  double line_length = 2.0;
  double line_angle = 0.0;

  double stretch_low = 0.01;
  double stretch_high = 0.99;

  bool emit_intermediates = false;
  Baseline baseline = Baseline::kNone;
  int threads = 0;

  /// Cross-field checks; throws UsageError naming the offending key.
  void validate() const;
};

/// Recognized keys, shared by config files and long CLI flags.
const std::vector<std::string>& config_keys();

/// Parse and apply one `key = value` setting. Throws UsageError naming the
/// key on an unknown key, an unparsable value, or a violated precondition.
void apply_setting(PipelineConfig& cfg, std::string_view key, std::string_view value);

/// Apply a flat UTF-8 document of `key = value` lines. Blank lines and
/// '#' comments are ignored.
void apply_config_text(PipelineConfig& cfg, std::string_view text);

/// "N" gives N evenly spaced orientations; "a,b,c" is an explicit list.
std::vector<double> parse_orientations(std::string_view text);

/// Single-line `key=value ...` rendering of the effective configuration.
std::string describe(const PipelineConfig& cfg);

std::string_view to_string(Fusion f);
std::string_view to_string(BorderMode b);
std::string_view to_string(ConvolutionMode m);
std::string_view to_string(Baseline b);

}  // namespace veinseg
