#include "veinseg/batch.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>

#include "veinseg/baselines.hpp"
#include "veinseg/error.hpp"
#include "veinseg/pgm.hpp"
#include "veinseg/pipeline.hpp"

namespace fs = std::filesystem;

namespace veinseg {

namespace {

void save(const fs::path& path, const Image& img) { write_file(path, save_pgm(img, 255, true)); }

fs::path output_path(const PipelineConfig& cfg, const fs::path& input, std::string_view tag) {
  return cfg.output_dir / (input.stem().string() + "." + std::string(tag) + ".pgm");
}

}  // namespace

std::vector<fs::path> expand_inputs(const std::vector<fs::path>& inputs) {
  std::vector<fs::path> out;
  for (const auto& input : inputs) {
    std::error_code ec;
    if (fs::is_directory(input, ec)) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(input, ec)) {
        if (entry.is_regular_file()) files.push_back(entry.path());
      }
      std::sort(files.begin(), files.end());
      out.insert(out.end(), files.begin(), files.end());
    } else {
      out.push_back(input);
    }
  }
  return out;
}

BatchSummary run_batch(const PipelineConfig& cfg, std::ostream& report, std::ostream& warnings) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  const auto inputs = expand_inputs(cfg.inputs);
  if (inputs.empty()) throw UsageError("input", "no input files");

  std::error_code ec;
  fs::create_directories(cfg.output_dir, ec);
  if (ec) throw IoError("cannot create output directory " + cfg.output_dir.string());

  report << "config " << describe(cfg) << '\n';

  BatchSummary summary;
  int write_failures = 0;
  for (const auto& input : inputs) {
    Image img;
    try {
      img = load_grayscale(read_file(input));
    } catch (const std::exception& e) {
      ++summary.warnings;
      warnings << "warning: skipping " << input.string() << ": " << e.what() << '\n';
      continue;
    }

    try {
      const PipelineResult result = run_pipeline(cfg, img);
      const fs::path out = output_path(cfg, input, "final");
      save(out, result.output);
      for (const auto& [stage, stage_img] : result.intermediates) {
        if (stage != "final") save(output_path(cfg, input, stage), stage_img);
      }
      if (cfg.baseline != Baseline::kNone) {
        const ResponseImage magnitude = cfg.baseline == Baseline::kSobel
                                            ? sobel_magnitude(img)
                                            : prewitt_magnitude(img);
        save(output_path(cfg, input, to_string(cfg.baseline)), normalize_minmax(magnitude));
      }

      report << "image=" << input.string() << " width=" << img.width()
             << " height=" << img.height() << '\n';
      for (const auto& stage : result.stages) report << format_stage_report(stage) << '\n';
      report << "output=" << out.string() << '\n';
      summary.outputs.push_back(out);
      ++summary.processed;
    } catch (const IoError& e) {
      ++write_failures;
      ++summary.warnings;
      warnings << "warning: " << input.string() << ": " << e.what() << '\n';
    } catch (const std::exception& e) {
      ++summary.warnings;
      warnings << "warning: " << input.string() << ": " << e.what() << '\n';
    }
  }

  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  summary.seconds = elapsed.count();
  char buf[160];
  std::snprintf(buf, sizeof buf, "summary processed=%d warnings=%d ms=%.3f", summary.processed,
                summary.warnings, summary.seconds * 1000.0);
  report << buf << '\n';

  if (summary.processed == 0) {
    if (write_failures > 0) throw IoError("no output could be written");
    throw UsageError("input", "no processable input images");
  }
  return summary;
}

}  // namespace veinseg
