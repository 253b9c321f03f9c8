#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>

#include "veinseg/batch.hpp"
#include "veinseg/error.hpp"
#include "veinseg/pgm.hpp"

namespace veinseg::cli {

namespace {

struct FlagSpec {
  const char* key;
  const char* help;
};

// Value-carrying flags; each maps 1:1 onto a config key.
constexpr FlagSpec kValueFlags[] = {
    {"lambda", "Carrier wavelength in pixels (default 8)"},
    {"gamma", "Envelope aspect ratio (default 0.5)"},
    {"bandwidth", "Spatial-frequency bandwidth in octaves (default 5)"},
    {"phase", "Carrier phase offset in degrees (default 0)"},
    {"orientations", "Orientation count N or comma list of degrees (default 8)"},
    {"fusion", "Orientation fusion: max|l2"},
    {"disk-radius", "Closing disk radius (default 3)"},
    {"line-length", "Erosion line length (default 2)"},
    {"line-angle", "Erosion line angle in degrees (default 0)"},
    {"stretch-low", "Low saturation fraction (default 0.01)"},
    {"stretch-high", "High saturation fraction (default 0.99)"},
    {"border", "Convolution border: reflect|replicate|zero"},
    {"conv", "Convolution path: direct|fft|auto"},
    {"baseline", "Also write a baseline edge map: sobel|prewitt"},
    {"out", "Output directory (default .)"},
    {"threads", "Worker threads, 0 = all cores (default 0)"},
};

std::string read_text(const std::string& path) {
  const auto bytes = read_file(path);
  return std::string(bytes.begin(), bytes.end());
}

}  // namespace

ParsedArgs parse_config(const std::vector<std::string>& args) {
  CLI::App app{"Leaf vein enhancement: odd-Gabor bank, morphology, contrast stretch", "veinseg"};
  app.set_help_flag("-h,--help", "Print this help message and exit");

  std::optional<std::string> config_file;
  app.add_option("--config", config_file, "Flat 'key = value' config file");

  std::map<std::string, std::optional<std::string>> values;
  for (const auto& flag : kValueFlags) {
    app.add_option(std::string("--") + flag.key, values[flag.key], flag.help);
  }
  bool emit = false;
  app.add_flag("--emit-intermediates", emit, "Write <stem>.<stage>.pgm for every stage");

  std::vector<std::string> inputs;
  app.add_option("inputs", inputs, "Input PGM/PPM files or directories");

  ParsedArgs parsed;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    parsed.help = true;
    parsed.help_text = app.help();
    return parsed;
  } catch (const CLI::ParseError& e) {
    throw UsageError("", e.what());
  }

  PipelineConfig& cfg = parsed.config;
  if (config_file) apply_config_text(cfg, read_text(*config_file));
  for (const auto& flag : kValueFlags) {
    if (const auto& v = values[flag.key]) apply_setting(cfg, flag.key, *v);
  }
  if (emit) cfg.emit_intermediates = true;
  cfg.inputs.assign(inputs.begin(), inputs.end());
  cfg.validate();
  return parsed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const ParsedArgs parsed = parse_config(args);
    if (parsed.help) {
      out << parsed.help_text;
      return kSuccess;
    }
    if (parsed.config.inputs.empty()) {
      throw UsageError("input", "at least one INPUT is required");
    }
    run_batch(parsed.config, out, err);
    return kSuccess;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
}

}  // namespace veinseg::cli
