#include "veinseg/gabor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "veinseg/error.hpp"

namespace veinseg {

namespace {

// sqrt(ln 2 / 2): half-response point of the Gaussian envelope.
const double kHalfResponse = std::sqrt(std::numbers::ln2 / 2.0);

double to_radians(double degrees) { return degrees * std::numbers::pi / 180.0; }

enum class Carrier { kCosine, kSine };

Kernel sample_gabor(const GaborParams& p, Carrier carrier) {
  p.validate();
  const int half = gabor_half_extent(p);
  const int side = 2 * half + 1;
  const double sigma = p.sigma();
  const double theta = to_radians(p.orientation);
  const double phi = to_radians(p.phase);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double gamma2 = p.aspect_ratio * p.aspect_ratio;
  const double denom = 2.0 * sigma * sigma;
  const double two_pi = 2.0 * std::numbers::pi;

  std::vector<double> w(static_cast<std::size_t>(side) * side);
  for (int dy = -half; dy <= half; ++dy) {
    for (int dx = -half; dx <= half; ++dx) {
      const double xr = dx * c + dy * s;
      const double yr = -dx * s + dy * c;
      const double envelope = std::exp(-(xr * xr + gamma2 * yr * yr) / denom);
      const double arg = two_pi * xr / p.wavelength + phi;
      const double wave = carrier == Carrier::kCosine ? std::cos(arg) : std::sin(arg);
      w[static_cast<std::size_t>(dy + half) * side + (dx + half)] = envelope * wave;
    }
  }
  return Kernel(half, half, std::move(w));
}

}  // namespace

double GaborParams::sigma() const { return sigma_from_bandwidth(wavelength, bandwidth); }

void GaborParams::validate() const {
  if (!(wavelength > 0.0) || !std::isfinite(wavelength)) {
    throw DomainError("wavelength must be > 0");
  }
  if (!std::isfinite(orientation)) throw DomainError("orientation must be finite");
  if (!(phase >= -180.0 && phase <= 180.0)) {
    throw DomainError("phase must be in [-180, 180] degrees");
  }
  if (!(aspect_ratio > 0.0) || !std::isfinite(aspect_ratio)) {
    throw DomainError("aspect ratio must be > 0");
  }
  if (!(bandwidth > 0.0) || !std::isfinite(bandwidth)) {
    throw DomainError("bandwidth must be > 0");
  }
}

double min_sigma_ratio() { return kHalfResponse / std::numbers::pi; }

double sigma_from_bandwidth(double wavelength, double bandwidth) {
  if (!(wavelength > 0.0)) throw DomainError("wavelength must be > 0");
  if (!(bandwidth > 0.0)) throw DomainError("bandwidth must be > 0");
  const double p = std::exp2(bandwidth);
  return wavelength * min_sigma_ratio() * (p + 1.0) / (p - 1.0);
}

double bandwidth_from_sigma(double sigma, double wavelength) {
  if (!(wavelength > 0.0)) throw DomainError("wavelength must be > 0");
  if (!(sigma > 0.0)) throw DomainError("sigma must be > 0");
  const double scaled = sigma / wavelength * std::numbers::pi;
  if (!(scaled > kHalfResponse)) {
    throw DomainError("sigma / wavelength must exceed sqrt(ln 2 / 2) / pi = " +
                      std::to_string(min_sigma_ratio()) + ", got " +
                      std::to_string(sigma / wavelength));
  }
  return std::log2((scaled + kHalfResponse) / (scaled - kHalfResponse));
}

int gabor_half_extent(const GaborParams& p) {
  const double stretch = std::max(1.0, 1.0 / p.aspect_ratio);
  return static_cast<int>(std::ceil(3.0 * p.sigma() * stretch));
}

Kernel make_even_kernel(const GaborParams& p) { return sample_gabor(p, Carrier::kCosine); }

Kernel make_odd_kernel(const GaborParams& p) { return sample_gabor(p, Carrier::kSine); }

}  // namespace veinseg
