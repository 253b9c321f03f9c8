#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace veinseg {

struct IntensityTag {};
struct ResponseTag {};

/// Row-major grid of finite real samples. The tag separates display-range
/// intensity images (`Image`, values in [0,1]) from raw filter output
/// (`ResponseImage`, unbounded) so the two cannot be mixed by accident.
template <class Tag>
class Raster {
 public:
  Raster() = default;
  Raster(int width, int height, double fill = 0.0);
  Raster(int width, int height, std::vector<double> data);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  double operator()(int x, int y) const noexcept { return data_[index(x, y)]; }
  double& operator()(int x, int y) noexcept { return data_[index(x, y)]; }

  const double* row(int y) const noexcept { return data_.data() + index(0, y); }
  double* row(int y) noexcept { return data_.data() + index(0, y); }

  std::span<const double> pixels() const noexcept { return data_; }
  std::span<double> pixels() noexcept { return data_; }

  template <class Other>
  bool same_shape(const Raster<Other>& other) const noexcept {
    return width_ == other.width() && height_ == other.height();
  }

  bool operator==(const Raster&) const = default;

 private:
  std::size_t index(int x, int y) const noexcept {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<double> data_;
};

using Image = Raster<IntensityTag>;
using ResponseImage = Raster<ResponseTag>;

extern template class Raster<IntensityTag>;
extern template class Raster<ResponseTag>;

/// Reinterpret samples under another tag; shape and values are preserved.
template <class To, class From>
Raster<To> retag(const Raster<From>& src) {
  return Raster<To>(src.width(), src.height(),
                    std::vector<double>(src.pixels().begin(), src.pixels().end()));
}

inline ResponseImage as_response(const Image& img) {
  return retag<ResponseTag>(img);
}

/// Interleaved R,G,B triples, each channel in [0,1].
struct RgbImage {
  RgbImage(int width, int height, std::vector<double> data);

  int width;
  int height;
  std::vector<double> data;
};

struct ImageStats {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
};

ImageStats compute_stats(std::span<const double> values);

template <class Tag>
ImageStats compute_stats(const Raster<Tag>& img) {
  return compute_stats(img.pixels());
}

/// ITU-R BT.601 luma: 0.299 R + 0.587 G + 0.114 B.
Image rgb_to_gray(const RgbImage& rgb);

/// Affine map min -> 0, max -> 1. A constant input yields all zeros.
Image normalize_minmax(const ResponseImage& img);
Image normalize_minmax(const Image& img);

}  // namespace veinseg
