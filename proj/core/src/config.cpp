#include "veinseg/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "veinseg/error.hpp"

namespace veinseg {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text) {
  text = trim(text);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw UsageError(std::string(key), "expected a number, got '" + std::string(text) + "'");
  }
  return value;
}

int parse_int(std::string_view key, std::string_view text) {
  text = trim(text);
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw UsageError(std::string(key), "expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

bool parse_bool(std::string_view key, std::string_view text) {
  text = trim(text);
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  throw UsageError(std::string(key), "expected true or false, got '" + std::string(text) + "'");
}

template <class Enum, std::size_t N>
Enum parse_choice(std::string_view key, std::string_view text,
                  const std::pair<std::string_view, Enum> (&choices)[N]) {
  text = trim(text);
  std::string allowed;
  for (const auto& [name, value] : choices) {
    if (name == text) return value;
    allowed += allowed.empty() ? "" : "|";
    allowed += name;
  }
  throw UsageError(std::string(key),
                   "expected one of " + allowed + ", got '" + std::string(text) + "'");
}

constexpr std::pair<std::string_view, Fusion> kFusions[] = {{"max", Fusion::kMaxAbs},
                                                            {"l2", Fusion::kL2}};
constexpr std::pair<std::string_view, BorderMode> kBorders[] = {
    {"reflect", BorderMode::kReflect},
    {"replicate", BorderMode::kReplicate},
    {"zero", BorderMode::kZero}};
constexpr std::pair<std::string_view, ConvolutionMode> kModes[] = {
    {"direct", ConvolutionMode::kDirect},
    {"fft", ConvolutionMode::kFft},
    {"auto", ConvolutionMode::kAuto}};
constexpr std::pair<std::string_view, Baseline> kBaselines[] = {
    {"none", Baseline::kNone}, {"sobel", Baseline::kSobel}, {"prewitt", Baseline::kPrewitt}};

void require(bool ok, std::string_view key, const std::string& message) {
  if (!ok) throw UsageError(std::string(key), message);
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "lambda",      "gamma",       "bandwidth",    "phase",        "orientations",
      "fusion",      "disk-radius", "line-length",  "line-angle",   "stretch-low",
      "stretch-high", "border",     "conv",         "baseline",     "emit-intermediates",
      "out",         "threads"};
  return keys;
}

std::vector<double> parse_orientations(std::string_view text) {
  constexpr std::string_view key = "orientations";
  text = trim(text);
  if (text.find(',') == std::string_view::npos) {
    const int count = parse_int(key, text);
    require(count >= 1, key, "count must be >= 1");
    return evenly_spaced_orientations(count);
  }
  std::vector<double> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    if (!item.empty()) out.push_back(parse_double(key, item));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  require(!out.empty(), key, "list must not be empty");
  return out;
}

void apply_setting(PipelineConfig& cfg, std::string_view key, std::string_view value) {
  if (key == "lambda") {
    cfg.gabor.wavelength = parse_double(key, value);
    require(cfg.gabor.wavelength > 0.0, key, "wavelength must be > 0");
  } else if (key == "gamma") {
    cfg.gabor.aspect_ratio = parse_double(key, value);
    require(cfg.gabor.aspect_ratio > 0.0, key, "aspect ratio must be > 0");
  } else if (key == "bandwidth") {
    cfg.gabor.bandwidth = parse_double(key, value);
    require(cfg.gabor.bandwidth > 0.0, key, "bandwidth b must be > 0");
  } else if (key == "phase") {
    cfg.gabor.phase = parse_double(key, value);
    require(cfg.gabor.phase >= -180.0 && cfg.gabor.phase <= 180.0, key,
            "phase must be in [-180, 180] degrees");
  } else if (key == "orientations") {
    cfg.orientations = parse_orientations(value);
  } else if (key == "fusion") {
    cfg.fusion = parse_choice(key, value, kFusions);
  } else if (key == "disk-radius") {
    cfg.disk_radius = parse_int(key, value);
    require(cfg.disk_radius >= 0, key, "disk radius must be >= 0");
  } else if (key == "line-length") {
    cfg.line_length = parse_double(key, value);
    require(cfg.line_length > 0.0, key, "line length must be > 0");
  } else if (key == "line-angle") {
    cfg.line_angle = parse_double(key, value);
  } else if (key == "stretch-low") {
    cfg.stretch_low = parse_double(key, value);
    require(cfg.stretch_low >= 0.0 && cfg.stretch_low < 1.0, key,
            "low fraction must be in [0, 1)");
  } else if (key == "stretch-high") {
    cfg.stretch_high = parse_double(key, value);
    require(cfg.stretch_high > 0.0 && cfg.stretch_high <= 1.0, key,
            "high fraction must be in (0, 1]");
  } else if (key == "border") {
    cfg.border = parse_choice(key, value, kBorders);
  } else if (key == "conv") {
    cfg.convolution = parse_choice(key, value, kModes);
  } else if (key == "baseline") {
    cfg.baseline = parse_choice(key, value, kBaselines);
  } else if (key == "emit-intermediates") {
    cfg.emit_intermediates = parse_bool(key, value);
  } else if (key == "out") {
    const auto path = trim(value);
    require(!path.empty(), key, "output directory must not be empty");
    cfg.output_dir = std::filesystem::path(std::string(path));
  } else if (key == "threads") {
    cfg.threads = parse_int(key, value);
    require(cfg.threads >= 0, key, "thread count must be >= 0");
  } else {
    throw UsageError(std::string(key), "unknown configuration key");
  }
}

void apply_config_text(PipelineConfig& cfg, std::string_view text) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError(std::string(line), "line " + std::to_string(line_no) +
                                              ": expected 'key = value'");
    }
    apply_setting(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void PipelineConfig::validate() const {
  require(gabor.wavelength > 0.0, "lambda", "wavelength must be > 0");
  require(gabor.aspect_ratio > 0.0, "gamma", "aspect ratio must be > 0");
  require(gabor.bandwidth > 0.0, "bandwidth", "bandwidth b must be > 0");
  require(gabor.phase >= -180.0 && gabor.phase <= 180.0, "phase",
          "phase must be in [-180, 180] degrees");
  require(!orientations.empty(), "orientations", "list must not be empty");
  require(disk_radius >= 0, "disk-radius", "disk radius must be >= 0");
  require(line_length > 0.0, "line-length", "line length must be > 0");
  require(stretch_low >= 0.0 && stretch_low < stretch_high && stretch_high <= 1.0,
          "stretch-low", "fractions must satisfy 0 <= low < high <= 1");
  require(threads >= 0, "threads", "thread count must be >= 0");
}

std::string describe(const PipelineConfig& cfg) {
  std::ostringstream os;
  os << "lambda=" << format_number(cfg.gabor.wavelength)
     << " gamma=" << format_number(cfg.gabor.aspect_ratio)
     << " bandwidth=" << format_number(cfg.gabor.bandwidth)
     << " sigma=" << format_number(cfg.gabor.sigma())
     << " phase=" << format_number(cfg.gabor.phase) << " orientations=";
  for (std::size_t i = 0; i < cfg.orientations.size(); ++i) {
    os << (i ? "," : "") << format_number(cfg.orientations[i]);
  }
  os << " fusion=" << to_string(cfg.fusion) << " disk-radius=" << cfg.disk_radius
     << " line-length=" << format_number(cfg.line_length)
     << " line-angle=" << format_number(cfg.line_angle)
     << " stretch-low=" << format_number(cfg.stretch_low)
     << " stretch-high=" << format_number(cfg.stretch_high)
     << " border=" << to_string(cfg.border) << " conv=" << to_string(cfg.convolution)
     << " baseline=" << to_string(cfg.baseline)
     << " emit-intermediates=" << (cfg.emit_intermediates ? "true" : "false")
     << " threads=" << cfg.threads;
  return os.str();
}

std::string_view to_string(Fusion f) { return f == Fusion::kMaxAbs ? "max" : "l2"; }

std::string_view to_string(BorderMode b) {
  switch (b) {
    case BorderMode::kReflect: return "reflect";
    case BorderMode::kReplicate: return "replicate";
    case BorderMode::kZero: return "zero";
  }
  return "?";
}

std::string_view to_string(ConvolutionMode m) {
  switch (m) {
    case ConvolutionMode::kDirect: return "direct";
    case ConvolutionMode::kFft: return "fft";
    case ConvolutionMode::kAuto: return "auto";
  }
  return "?";
}

std::string_view to_string(Baseline b) {
  switch (b) {
    case Baseline::kNone: return "none";
    case Baseline::kSobel: return "sobel";
    case Baseline::kPrewitt: return "prewitt";
  }
  return "?";
}

}  // namespace veinseg
