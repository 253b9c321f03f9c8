#include "veinseg/filter_bank.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include "veinseg/error.hpp"

namespace veinseg {

namespace {

void fuse_into(ResponseImage& acc, const ResponseImage& r, Fusion fusion) {
  auto dst = acc.pixels();
  auto src = r.pixels();
  if (fusion == Fusion::kMaxAbs) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = std::max(dst[i], std::abs(src[i]));
  } else {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i] * src[i];
  }
}

int worker_count(int requested, std::size_t tasks) {
  int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  n = std::max(n, 1);
  return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(n), tasks));
}

}  // namespace

std::vector<double> evenly_spaced_orientations(int count) {
  if (count < 1) throw DomainError("orientation count must be >= 1");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) out[static_cast<std::size_t>(k)] = k * 180.0 / count;
  return out;
}

std::vector<double> canonical_orientations(std::span<const double> degrees) {
  if (degrees.empty()) throw DomainError("orientation list must not be empty");
  std::vector<double> out;
  out.reserve(degrees.size());
  for (double d : degrees) {
    if (!std::isfinite(d)) throw DomainError("orientations must be finite");
    double t = std::fmod(d, 180.0);
    if (t < 0.0) t += 180.0;
    if (t >= 180.0) t = 0.0;
    out.push_back(t == 0.0 ? 0.0 : t);  // folds -0.0
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool prefer_fft(int width, int height, const Kernel& k) {
  const double padded = static_cast<double>(width + 2 * k.half_width()) *
                        static_cast<double>(height + 2 * k.half_height());
  const double taps = static_cast<double>(k.width()) * k.height();
  return taps > 5.0 * std::log2(std::max(padded, 2.0));
}

ResponseImage filter_bank_response(const Image& img, const GaborParams& base,
                                   std::span<const double> orientations,
                                   const FilterBankOptions& options) {
  base.validate();
  const std::vector<double> thetas = canonical_orientations(orientations);

  const int half = gabor_half_extent(base);
  const Kernel probe(half, half,
                     std::vector<double>(static_cast<std::size_t>(2 * half + 1) * (2 * half + 1)));
  check_kernel_fits(img.width(), img.height(), probe);

  const bool use_fft = options.convolution == ConvolutionMode::kFft ||
                       (options.convolution == ConvolutionMode::kAuto &&
                        prefer_fft(img.width(), img.height(), probe));
  const ResponseImage source = as_response(img);
  std::optional<SpectralCorrelator> correlator;
  if (use_fft) correlator.emplace(source, half, half, options.border);

  auto respond = [&](double theta) {
    GaborParams p = base;
    p.orientation = theta;
    const Kernel k = make_odd_kernel(p);
    return correlator ? correlator->apply(k) : convolve(source, k, options.border);
  };

  ResponseImage acc(img.width(), img.height(), 0.0);

  // Responses are computed in parallel but folded into `acc` strictly in
  // orientation order, so the floating-point result is thread-count invariant.
  std::mutex mutex;
  std::condition_variable turn;
  std::size_t next_fold = 0;
  std::atomic<std::size_t> next_task{0};
  std::exception_ptr error;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next_task.fetch_add(1);
      if (i >= thetas.size()) return;
      std::optional<ResponseImage> r;
      std::exception_ptr local_error;
      try {
        r.emplace(respond(thetas[i]));
      } catch (...) {
        local_error = std::current_exception();
      }
      std::unique_lock lock(mutex);
      turn.wait(lock, [&] { return next_fold == i; });
      if (local_error && !error) error = local_error;
      if (r && !error) fuse_into(acc, *r, options.fusion);
      ++next_fold;
      turn.notify_all();
    }
  };

  const int workers = worker_count(options.threads, thetas.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  if (options.fusion == Fusion::kL2) {
    for (double& v : acc.pixels()) v = std::sqrt(v);
  }
  return acc;
}

}  // namespace veinseg
