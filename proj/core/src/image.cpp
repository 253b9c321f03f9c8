#include "veinseg/image.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "veinseg/error.hpp"

namespace veinseg {

namespace {

void check_dimensions(int width, int height) {
  if (width <= 0 || height <= 0) {
    throw DomainError("image dimensions must be positive, got " +
                      std::to_string(width) + "x" + std::to_string(height));
  }
}

void check_finite(std::span<const double> values) {
  if (!std::all_of(values.begin(), values.end(),
                   [](double v) { return std::isfinite(v); })) {
    throw DomainError("image samples must be finite");
  }
}

template <class Tag>
Image normalize_impl(const Raster<Tag>& img) {
  Image out(img.width(), img.height(), 0.0);
  if (img.empty()) return out;
  const auto [lo_it, hi_it] = std::minmax_element(img.pixels().begin(), img.pixels().end());
  const double lo = *lo_it;
  const double range = *hi_it - lo;
  if (range == 0.0) return out;
  auto src = img.pixels();
  auto dst = out.pixels();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = (src[i] - lo) / range;
  return out;
}

}  // namespace

template <class Tag>
Raster<Tag>::Raster(int width, int height, double fill)
    : width_(width), height_(height) {
  check_dimensions(width, height);
  if (!std::isfinite(fill)) throw DomainError("fill value must be finite");
  data_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
}

template <class Tag>
Raster<Tag>::Raster(int width, int height, std::vector<double> data)
    : width_(width), height_(height), data_(std::move(data)) {
  check_dimensions(width, height);
  if (data_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw DomainError("image data length " + std::to_string(data_.size()) +
                      " does not match " + std::to_string(width) + "x" +
                      std::to_string(height));
  }
  check_finite(data_);
}

template class Raster<IntensityTag>;
template class Raster<ResponseTag>;

RgbImage::RgbImage(int w, int h, std::vector<double> d)
    : width(w), height(h), data(std::move(d)) {
  check_dimensions(w, h);
  if (data.size() != 3 * static_cast<std::size_t>(w) * static_cast<std::size_t>(h)) {
    throw DomainError("rgb data length must be 3 * width * height");
  }
  check_finite(data);
}

ImageStats compute_stats(std::span<const double> values) {
  ImageStats s;
  if (values.empty()) return s;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  s.min = *lo;
  s.max = *hi;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  return s;
}

Image rgb_to_gray(const RgbImage& rgb) {
  std::vector<double> gray(static_cast<std::size_t>(rgb.width) *
                           static_cast<std::size_t>(rgb.height));
  for (std::size_t i = 0; i < gray.size(); ++i) {
    const double r = rgb.data[3 * i];
    const double g = rgb.data[3 * i + 1];
    const double b = rgb.data[3 * i + 2];
    gray[i] = std::clamp(0.299 * r + 0.587 * g + 0.114 * b, 0.0, 1.0);
  }
  return Image(rgb.width, rgb.height, std::move(gray));
}

Image normalize_minmax(const ResponseImage& img) { return normalize_impl(img); }
Image normalize_minmax(const Image& img) { return normalize_impl(img); }

}  // namespace veinseg
