#pragma once

#include "veinseg/convolution.hpp"
#include "veinseg/image.hpp"

namespace veinseg {

// Classical 3x3 gradient detectors, kept for side-by-side comparison with the
// Gabor pipeline. Both use reflect borders and return sqrt(gx^2 + gy^2).

ResponseImage sobel_magnitude(const Image& img);
ResponseImage prewitt_magnitude(const Image& img);

/// x-derivative kernels, rows [-1 0 1] [-c 0 c] [-1 0 1] with c = 2 (Sobel)
/// or c = 1 (Prewitt). The y kernels are their transposes.
Kernel sobel_x_kernel();
Kernel prewitt_x_kernel();

}  // namespace veinseg
