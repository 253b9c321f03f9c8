#pragma once

#include "veinseg/convolution.hpp"

namespace veinseg {

/// Parameters of a 2D Gabor function. Angles are in degrees; sigma is
/// derived from wavelength and bandwidth so the two can never disagree.
struct GaborParams {
  double wavelength = 8.0;    ///< pixels per cycle of the carrier, > 0
  double orientation = 0.0;   ///< normal to the stripes, degrees
  double phase = 0.0;         ///< carrier phase offset, degrees in [-180, 180]
  double aspect_ratio = 0.5;  ///< ellipticity of the envelope, > 0
  double bandwidth = 5.0;     ///< half-response spatial-frequency bandwidth, octaves, > 0

  double sigma() const;

  /// Throws DomainError naming the first invalid field.
  void validate() const;
};

/// sigma = lambda / pi * sqrt(ln 2 / 2) * (2^b + 1) / (2^b - 1)
double sigma_from_bandwidth(double wavelength, double bandwidth);

/// Inverse of sigma_from_bandwidth. Requires sigma / lambda to exceed
/// sqrt(ln 2 / 2) / pi, below which no finite bandwidth exists.
double bandwidth_from_sigma(double sigma, double wavelength);

/// Lower bound on sigma / lambda for bandwidth_from_sigma.
double min_sigma_ratio();

/// Half extent of the square sampling grid: ceil(3 sigma max(1, 1/gamma)).
int gabor_half_extent(const GaborParams& p);

/// Cosine-carrier Gabor kernel sampled on the integer grid.
Kernel make_even_kernel(const GaborParams& p);

/// Sine-carrier (odd) Gabor kernel sampled on the integer grid. With zero
/// phase it is antisymmetric and sums to zero.
Kernel make_odd_kernel(const GaborParams& p);

}  // namespace veinseg
