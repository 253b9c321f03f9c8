#include "veinseg/enhance.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "veinseg/error.hpp"

namespace veinseg {

namespace {

void check_fractions(double low_frac, double high_frac) {
  if (!(low_frac >= 0.0 && low_frac < high_frac && high_frac <= 1.0)) {
    throw DomainError("stretch fractions must satisfy 0 <= low < high <= 1");
  }
}

// Selection on a scratch copy; O(n) instead of a full sort.
double select_percentile(std::vector<double>& scratch, double q) {
  const double rank = q * static_cast<double>(scratch.size() - 1);
  const auto lower = static_cast<std::size_t>(std::floor(rank));
  const double frac = rank - static_cast<double>(lower);
  auto nth = scratch.begin() + static_cast<std::ptrdiff_t>(lower);
  std::nth_element(scratch.begin(), nth, scratch.end());
  const double a = *nth;
  if (frac == 0.0 || lower + 1 >= scratch.size()) return a;
  const double b = *std::min_element(nth + 1, scratch.end());
  return a + frac * (b - a);
}

}  // namespace

StretchLimits::StretchLimits(double lo, double hi) : low(lo), high(hi) {
  if (!(lo >= 0.0 && lo < hi && hi <= 1.0)) {
    throw DomainError("stretch limits must satisfy 0 <= low < high <= 1");
  }
}

double percentile(std::span<const double> values, double q) {
  if (values.empty()) throw DomainError("percentile of an empty sequence");
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("percentile fraction must be in [0,1]");
  std::vector<double> scratch(values.begin(), values.end());
  return select_percentile(scratch, q);
}

std::optional<StretchLimits> stretch_limits(const Image& img, double low_frac,
                                            double high_frac) {
  check_fractions(low_frac, high_frac);
  std::vector<double> scratch(img.pixels().begin(), img.pixels().end());
  const double hi = std::clamp(select_percentile(scratch, high_frac), 0.0, 1.0);
  const double lo = std::clamp(select_percentile(scratch, low_frac), 0.0, 1.0);
  if (!(hi > lo)) return std::nullopt;
  return StretchLimits(lo, hi);
}

Image contrast_stretch(const Image& img, double low_frac, double high_frac) {
  const auto limits = stretch_limits(img, low_frac, high_frac);
  if (!limits) return img;
  const double lo = limits->low;
  const double range = limits->high - limits->low;
  Image out = img;
  for (double& v : out.pixels()) v = std::clamp((v - lo) / range, 0.0, 1.0);
  return out;
}

}  // namespace veinseg
