#pragma once

#include <span>
#include <vector>

#include "veinseg/convolution.hpp"
#include "veinseg/gabor.hpp"
#include "veinseg/image.hpp"

namespace veinseg {

/// How per-orientation responses combine into one map.
enum class Fusion {
  kMaxAbs,  ///< max over orientations of |response|
  kL2,      ///< sqrt of the sum of squared responses
};

enum class ConvolutionMode { kDirect, kFft, kAuto };

struct FilterBankOptions {
  Fusion fusion = Fusion::kMaxAbs;
  BorderMode border = BorderMode::kReflect;
  ConvolutionMode convolution = ConvolutionMode::kAuto;
  int threads = 0;  ///< 0 selects std::thread::hardware_concurrency()
};

/// k * 180 / count for k = 0..count-1. Throws DomainError if count < 1.
std::vector<double> evenly_spaced_orientations(int count);

/// Orientations folded into [0, 180), sorted, duplicates removed. Odd-filter
/// responses at theta and theta + 180 differ only in sign, so one suffices.
std::vector<double> canonical_orientations(std::span<const double> degrees);

/// True when the frequency-domain path is expected to beat the direct one.
bool prefer_fft(int width, int height, const Kernel& k);

/// Applies the odd Gabor kernel at every canonical orientation and fuses the
/// responses per pixel. The result does not depend on thread count.
ResponseImage filter_bank_response(const Image& img, const GaborParams& base,
                                   std::span<const double> orientations,
                                   const FilterBankOptions& options = {});

}  // namespace veinseg
