#include "veinseg/baselines.hpp"

#include <cmath>

namespace veinseg {

namespace {

// The two outer taps of each smoothing triple are added first, so swapping
// their order (as a 90 degree rotation does) leaves the result bit-identical.
ResponseImage gradient_magnitude(const Image& img, double center_weight) {
  const int w = img.width();
  const int h = img.height();
  ResponseImage out(w, h, 0.0);
  for (int y = 0; y < h; ++y) {
    const int ym = resolve_border(y - 1, h, BorderMode::kReflect);
    const int yp = resolve_border(y + 1, h, BorderMode::kReflect);
    const double* up = img.row(ym);
    const double* mid = img.row(y);
    const double* down = img.row(yp);
    double* dst = out.row(y);
    for (int x = 0; x < w; ++x) {
      const int xm = resolve_border(x - 1, w, BorderMode::kReflect);
      const int xp = resolve_border(x + 1, w, BorderMode::kReflect);
      const double right = (up[xp] + down[xp]) + center_weight * mid[xp];
      const double left = (up[xm] + down[xm]) + center_weight * mid[xm];
      const double bottom = (down[xm] + down[xp]) + center_weight * down[x];
      const double top = (up[xm] + up[xp]) + center_weight * up[x];
      const double gx = right - left;
      const double gy = bottom - top;
      dst[x] = std::sqrt(gx * gx + gy * gy);
    }
  }
  return out;
}

Kernel x_kernel(double c) {
  return Kernel(1, 1, {-1.0, 0.0, 1.0, -c, 0.0, c, -1.0, 0.0, 1.0});
}

}  // namespace

ResponseImage sobel_magnitude(const Image& img) { return gradient_magnitude(img, 2.0); }

ResponseImage prewitt_magnitude(const Image& img) { return gradient_magnitude(img, 1.0); }

Kernel sobel_x_kernel() { return x_kernel(2.0); }

Kernel prewitt_x_kernel() { return x_kernel(1.0); }

}  // namespace veinseg
