#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "veinseg/convolution.hpp"
#include "veinseg/filter_bank.hpp"
#include "veinseg/gabor.hpp"
#include "veinseg/morphology.hpp"
#include "veinseg/pipeline.hpp"

namespace {

using namespace veinseg;

Image textured(int w, int h) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> noise(-0.05, 0.05);
  Image img(w, h, 0.0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) img(x, y) = 0.5 + 0.3 * std::sin(0.2 * x + 0.05 * y) + noise(rng);
  }
  return img;
}

void BM_ConvolveDirect(benchmark::State& state) {
  const Image img = textured(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  const Kernel k = make_odd_kernel(GaborParams{});
  for (auto _ : state) benchmark::DoNotOptimize(convolve(img, k, BorderMode::kReflect));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(img.size()));
}
BENCHMARK(BM_ConvolveDirect)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_ConvolveFft(benchmark::State& state) {
  const Image img = textured(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  const Kernel k = make_odd_kernel(GaborParams{});
  for (auto _ : state) benchmark::DoNotOptimize(convolve_fft(img, k, BorderMode::kReflect));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(img.size()));
}
BENCHMARK(BM_ConvolveFft)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_FilterBank(benchmark::State& state) {
  const Image img = textured(640, 480);
  const auto orientations = evenly_spaced_orientations(8);
  FilterBankOptions opts;
  opts.convolution = state.range(0) == 0 ? ConvolutionMode::kDirect : ConvolutionMode::kFft;
  for (auto _ : state) {
    benchmark::DoNotOptimize(filter_bank_response(img, GaborParams{}, orientations, opts));
  }
}
BENCHMARK(BM_FilterBank)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CloseDisk3(benchmark::State& state) {
  const Image img = textured(640, 480);
  const auto se = disk_se(3);
  for (auto _ : state) benchmark::DoNotOptimize(close(img, se));
}
BENCHMARK(BM_CloseDisk3)->Unit(benchmark::kMillisecond);

void BM_Pipeline(benchmark::State& state) {
  const Image img = textured(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const PipelineConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(cfg, img));
}
BENCHMARK(BM_Pipeline)->Args({640, 480})->Args({2560, 1920})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
