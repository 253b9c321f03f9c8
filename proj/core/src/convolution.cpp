#include "veinseg/convolution.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <mutex>
#include <string>

#include "veinseg/error.hpp"

namespace veinseg {

namespace {

// FFTW's planner is not reentrant; execution with the new-array interface is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwDeleter {
  void operator()(void* p) const noexcept { fftw_free(p); }
};

template <class T>
using FftwBuffer = std::unique_ptr<T[], FftwDeleter>;

template <class T>
FftwBuffer<T> fftw_alloc(std::size_t count) {
  auto* p = static_cast<T*>(fftw_malloc(sizeof(T) * count));
  if (p == nullptr) throw std::bad_alloc();
  return FftwBuffer<T>(p);
}

// Image extended by (hw, hh) on every side using the border rule.
struct Padded {
  int width;
  int height;
  std::vector<double> data;
};

Padded pad(const ResponseImage& img, int hw, int hh, BorderMode border) {
  Padded p{img.width() + 2 * hw, img.height() + 2 * hh, {}};
  p.data.assign(static_cast<std::size_t>(p.width) * p.height, 0.0);
  for (int py = 0; py < p.height; ++py) {
    const int sy = resolve_border(py - hh, img.height(), border);
    if (sy < 0) continue;
    const double* src = img.row(sy);
    double* dst = p.data.data() + static_cast<std::size_t>(py) * p.width;
    for (int px = 0; px < p.width; ++px) {
      const int sx = resolve_border(px - hw, img.width(), border);
      if (sx >= 0) dst[px] = src[sx];
    }
  }
  return p;
}

ResponseImage convolve_direct(const ResponseImage& img, const Kernel& k, BorderMode border) {
  check_kernel_fits(img.width(), img.height(), k);
  const int hw = k.half_width();
  const int hh = k.half_height();
  const Padded p = pad(img, hw, hh, border);
  ResponseImage out(img.width(), img.height(), 0.0);
  const int w = img.width();
  for (int y = 0; y < img.height(); ++y) {
    double* dst = out.row(y);
    for (int dy = -hh; dy <= hh; ++dy) {
      const double* src = p.data.data() + static_cast<std::size_t>(y + hh + dy) * p.width + hw;
      for (int dx = -hw; dx <= hw; ++dx) {
        const double weight = k.at(dx, dy);
        if (weight == 0.0) continue;
        const double* s = src + dx;
        for (int x = 0; x < w; ++x) dst[x] += weight * s[x];
      }
    }
  }
  return out;
}

}  // namespace

Kernel::Kernel(int half_width, int half_height, std::vector<double> weights)
    : half_width_(half_width), half_height_(half_height), weights_(std::move(weights)) {
  if (half_width < 0 || half_height < 0) {
    throw DomainError("kernel half extents must be non-negative");
  }
  if (weights_.size() != static_cast<std::size_t>(width()) * height()) {
    throw DomainError("kernel weights must have (2*hw+1)*(2*hh+1) entries");
  }
  for (double v : weights_) {
    if (!std::isfinite(v)) throw DomainError("kernel weights must be finite");
  }
}

double Kernel::sum() const noexcept {
  const std::size_t n = weights_.size();
  double total = 0.0;
  for (std::size_t i = 0; i < n / 2; ++i) total += weights_[i] + weights_[n - 1 - i];
  return total + weights_[n / 2];
}

int resolve_border(int i, int n, BorderMode mode) noexcept {
  if (i >= 0 && i < n) return i;
  switch (mode) {
    case BorderMode::kZero:
      return -1;
    case BorderMode::kReplicate:
      return i < 0 ? 0 : n - 1;
    case BorderMode::kReflect: {
      if (n == 1) return 0;
      const int period = 2 * (n - 1);
      int m = i % period;
      if (m < 0) m += period;
      return m < n ? m : period - m;
    }
  }
  return -1;
}

void check_kernel_fits(int image_width, int image_height, const Kernel& k) {
  if (k.width() >= 2 * image_width || k.height() >= 2 * image_height) {
    throw DomainError("kernel " + std::to_string(k.width()) + "x" +
                      std::to_string(k.height()) + " too large for image " +
                      std::to_string(image_width) + "x" + std::to_string(image_height));
  }
}

ResponseImage convolve(const ResponseImage& img, const Kernel& k, BorderMode border) {
  return convolve_direct(img, k, border);
}

ResponseImage convolve(const Image& img, const Kernel& k, BorderMode border) {
  return convolve_direct(as_response(img), k, border);
}

struct SpectralCorrelator::State {
  int width = 0;
  int height = 0;
  int half_width = 0;
  int half_height = 0;
  int pad_width = 0;
  int pad_height = 0;
  std::size_t spectrum_size = 0;
  FftwBuffer<fftw_complex> image_spectrum;
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;

  ~State() {
    std::lock_guard lock(planner_mutex());
    if (forward != nullptr) fftw_destroy_plan(forward);
    if (inverse != nullptr) fftw_destroy_plan(inverse);
  }
};

SpectralCorrelator::SpectralCorrelator(const ResponseImage& img, int half_width,
                                       int half_height, BorderMode border)
    : state_(std::make_unique<State>()) {
  check_kernel_fits(img.width(), img.height(),
                    Kernel(half_width, half_height,
                           std::vector<double>(static_cast<std::size_t>(2 * half_width + 1) *
                                               (2 * half_height + 1))));
  State& s = *state_;
  s.width = img.width();
  s.height = img.height();
  s.half_width = half_width;
  s.half_height = half_height;

  Padded p = pad(img, half_width, half_height, border);
  s.pad_width = p.width;
  s.pad_height = p.height;
  const std::size_t real_size = static_cast<std::size_t>(p.width) * p.height;
  s.spectrum_size = static_cast<std::size_t>(p.height) * (p.width / 2 + 1);

  auto real = fftw_alloc<double>(real_size);
  s.image_spectrum = fftw_alloc<fftw_complex>(s.spectrum_size);
  {
    std::lock_guard lock(planner_mutex());
    s.forward = fftw_plan_dft_r2c_2d(p.height, p.width, real.get(), s.image_spectrum.get(),
                                     FFTW_ESTIMATE);
    s.inverse = fftw_plan_dft_c2r_2d(p.height, p.width, s.image_spectrum.get(), real.get(),
                                     FFTW_ESTIMATE);
  }
  if (s.forward == nullptr || s.inverse == nullptr) {
    throw std::runtime_error("FFTW planning failed");
  }
  std::copy(p.data.begin(), p.data.end(), real.get());
  fftw_execute_dft_r2c(s.forward, real.get(), s.image_spectrum.get());
}

SpectralCorrelator::~SpectralCorrelator() = default;

ResponseImage SpectralCorrelator::apply(const Kernel& k) const {
  const State& s = *state_;
  if (k.half_width() != s.half_width || k.half_height() != s.half_height) {
    throw DomainError("kernel extent does not match the correlator");
  }
  const std::size_t real_size = static_cast<std::size_t>(s.pad_width) * s.pad_height;
  auto real = fftw_alloc<double>(real_size);
  auto spectrum = fftw_alloc<fftw_complex>(s.spectrum_size);

  // Correlation = convolution with the point-reflected kernel, wrapped onto
  // the periodic grid: weight k(o) goes to index -o.
  std::fill(real.get(), real.get() + real_size, 0.0);
  for (int dy = -s.half_height; dy <= s.half_height; ++dy) {
    const int ry = (s.pad_height - dy) % s.pad_height;
    for (int dx = -s.half_width; dx <= s.half_width; ++dx) {
      const int rx = (s.pad_width - dx) % s.pad_width;
      real[static_cast<std::size_t>(ry) * s.pad_width + rx] = k.at(dx, dy);
    }
  }
  fftw_execute_dft_r2c(s.forward, real.get(), spectrum.get());

  for (std::size_t i = 0; i < s.spectrum_size; ++i) {
    const std::complex<double> a(s.image_spectrum[i][0], s.image_spectrum[i][1]);
    const std::complex<double> b(spectrum[i][0], spectrum[i][1]);
    const std::complex<double> prod = a * b;
    spectrum[i][0] = prod.real();
    spectrum[i][1] = prod.imag();
  }
  fftw_execute_dft_c2r(s.inverse, spectrum.get(), real.get());

  const double scale = 1.0 / static_cast<double>(real_size);
  ResponseImage out(s.width, s.height, 0.0);
  for (int y = 0; y < s.height; ++y) {
    const double* src =
        real.get() + static_cast<std::size_t>(y + s.half_height) * s.pad_width + s.half_width;
    double* dst = out.row(y);
    for (int x = 0; x < s.width; ++x) dst[x] = src[x] * scale;
  }
  return out;
}

ResponseImage convolve_fft(const ResponseImage& img, const Kernel& k, BorderMode border) {
  check_kernel_fits(img.width(), img.height(), k);
  return SpectralCorrelator(img, k.half_width(), k.half_height(), border).apply(k);
}

ResponseImage convolve_fft(const Image& img, const Kernel& k, BorderMode border) {
  return convolve_fft(as_response(img), k, border);
}

}  // namespace veinseg
