#include "veinseg/pipeline.hpp"

#include <chrono>
#include <cstdio>
#include <exception>

#include "veinseg/enhance.hpp"
#include "veinseg/error.hpp"
#include "veinseg/filter_bank.hpp"
#include "veinseg/morphology.hpp"

namespace veinseg {

namespace {

using Clock = std::chrono::steady_clock;

// Times `fn`, records its statistics and tags any exception with `name`.
template <class Fn>
auto run_stage(const char* name, std::vector<StageReport>& reports, Fn&& fn) {
  const auto start = Clock::now();
  try {
    auto out = fn();
    const std::chrono::duration<double> elapsed = Clock::now() - start;
    reports.push_back({name, elapsed.count(), compute_stats(out)});
    return out;
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

}  // namespace

PipelineResult run_pipeline(const PipelineConfig& cfg, const Image& img) {
  cfg.validate();
  PipelineResult result;
  auto& reports = result.stages;
  const bool keep = cfg.emit_intermediates;
  if (keep) result.intermediates.emplace_back("gray", img);

  const ResponseImage bank = run_stage("gabor", reports, [&] {
    FilterBankOptions options;
    options.fusion = cfg.fusion;
    options.border = cfg.border;
    options.convolution = cfg.convolution;
    options.threads = cfg.threads;
    return filter_bank_response(img, cfg.gabor, cfg.orientations, options);
  });

  const Image normalized = run_stage("normalize", reports, [&] { return normalize_minmax(bank); });
  if (keep) result.intermediates.emplace_back("gabor", normalized);

  const Image closed = run_stage("close", reports, [&] {
    return close(normalized, disk_se(cfg.disk_radius));
  });
  if (keep) result.intermediates.emplace_back("close", closed);

  const Image eroded = run_stage("erode", reports, [&] {
    return erode(closed, line_se(cfg.line_length, cfg.line_angle));
  });
  if (keep) result.intermediates.emplace_back("erode", eroded);

  result.output = run_stage("stretch", reports, [&] {
    return contrast_stretch(eroded, cfg.stretch_low, cfg.stretch_high);
  });
  if (keep) result.intermediates.emplace_back("final", result.output);
  return result;
}

std::string format_stage_report(const StageReport& report) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "stage=%s ms=%.3f min=%.6f max=%.6f mean=%.6f",
                report.stage.c_str(), report.seconds * 1000.0, report.stats.min,
                report.stats.max, report.stats.mean);
  return buf;
}

}  // namespace veinseg
