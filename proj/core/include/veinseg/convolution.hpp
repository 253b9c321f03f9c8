#pragma once

#include <memory>
#include <span>
#include <vector>

#include "veinseg/image.hpp"

namespace veinseg {

/// Dense 2D filter with odd side lengths and its origin at the center.
/// Offsets run from -half_width..half_width and -half_height..half_height.
class Kernel {
 public:
  Kernel(int half_width, int half_height, std::vector<double> weights);

  int half_width() const noexcept { return half_width_; }
  int half_height() const noexcept { return half_height_; }
  int width() const noexcept { return 2 * half_width_ + 1; }
  int height() const noexcept { return 2 * half_height_ + 1; }

  double at(int dx, int dy) const noexcept {
    return weights_[static_cast<std::size_t>(dy + half_height_) * width() +
                    static_cast<std::size_t>(dx + half_width_)];
  }

  std::span<const double> weights() const noexcept { return weights_; }

  /// Sum of all weights, accumulated in point-symmetric pairs
  /// (w[o] + w[-o]) so an antisymmetric kernel sums to exactly zero.
  double sum() const noexcept;

  bool operator==(const Kernel&) const = default;

 private:
  int half_width_;
  int half_height_;
  std::vector<double> weights_;
};

enum class BorderMode { kReflect, kReplicate, kZero };

/// Map an out-of-range coordinate back into [0, n) per the border rule.
/// Returns -1 for kZero when the coordinate is outside the image.
/// kReflect mirrors about the edge sample without repeating it (d c b | a b c d).
int resolve_border(int i, int n, BorderMode mode) noexcept;

/// Correlation: out[p] = sum_o k[o] * img[p + o]; output has the input shape.
/// Throws DomainError unless each kernel side is smaller than twice the
/// corresponding image extent.
ResponseImage convolve(const ResponseImage& img, const Kernel& k, BorderMode border);
ResponseImage convolve(const Image& img, const Kernel& k, BorderMode border);

/// Same contract as `convolve`, evaluated through a frequency-domain product
/// on the border-padded image.
ResponseImage convolve_fft(const ResponseImage& img, const Kernel& k, BorderMode border);
ResponseImage convolve_fft(const Image& img, const Kernel& k, BorderMode border);

/// Pads an image once and caches its spectrum, so several kernels of the
/// same extent can be applied for the cost of one forward and one inverse
/// transform each. Safe to call `apply` from several threads at once.
class SpectralCorrelator {
 public:
  SpectralCorrelator(const ResponseImage& img, int half_width, int half_height,
                     BorderMode border);
  ~SpectralCorrelator();
  SpectralCorrelator(const SpectralCorrelator&) = delete;
  SpectralCorrelator& operator=(const SpectralCorrelator&) = delete;

  /// `k` must have the half extents given at construction.
  ResponseImage apply(const Kernel& k) const;

 private:
  struct State;
  std::unique_ptr<State> state_;
};

/// Throws DomainError when the kernel is too large for the image.
void check_kernel_fits(int image_width, int image_height, const Kernel& k);

}  // namespace veinseg
