#pragma once

#include <optional>
#include <span>

#include "veinseg/image.hpp"

namespace veinseg {

/// Intensity window used by contrast_stretch; 0 <= low < high <= 1.
struct StretchLimits {
  StretchLimits(double low, double high);

  double low;
  double high;
};

/// Linear-interpolated order statistic at rank q * (n - 1).
/// Throws DomainError on empty input or q outside [0,1].
double percentile(std::span<const double> values, double q);

/// Percentile window of `img`, or nullopt when both percentiles coincide.
std::optional<StretchLimits> stretch_limits(const Image& img, double low_frac,
                                            double high_frac);

/// Affine remap of [lo, hi] onto [0, 1], clamping the tails, where lo and hi
/// are the low_frac and high_frac percentiles. A degenerate window returns
/// the input unchanged.
Image contrast_stretch(const Image& img, double low_frac = 0.01, double high_frac = 0.99);

}  // namespace veinseg
