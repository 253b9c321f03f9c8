#include "veinseg/morphology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "veinseg/error.hpp"

namespace veinseg {

namespace {

// Folds src[p + o] into out[p] for every o and every p where p + o lies
// inside the image. `out` starts at the identity element of `pick`.
template <class Tag, class Pick>
Raster<Tag> flat_filter(const Raster<Tag>& img, std::span<const Offset> offsets, double identity,
                        Pick pick) {
  const int w = img.width();
  const int h = img.height();
  std::vector<double> out(img.size(), identity);
  for (const Offset o : offsets) {
    const int y0 = std::max(0, -o.dy);
    const int y1 = std::min(h, h - o.dy);
    const int x0 = std::max(0, -o.dx);
    const int x1 = std::min(w, w - o.dx);
    for (int y = y0; y < y1; ++y) {
      const double* src = img.row(y + o.dy) + o.dx;
      double* dst = out.data() + static_cast<std::size_t>(y) * w;
      for (int x = x0; x < x1; ++x) dst[x] = pick(dst[x], src[x]);
    }
  }
  // No probe landed inside the image: keep the input sample.
  auto in = img.pixels();
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] == identity) out[i] = in[i];
  }
  return Raster<Tag>(w, h, std::move(out));
}

}  // namespace

StructuringElement::StructuringElement(std::vector<Offset> offsets)
    : offsets_(std::move(offsets)) {
  if (offsets_.empty()) throw DomainError("structuring element must not be empty");
  std::sort(offsets_.begin(), offsets_.end());
  offsets_.erase(std::unique(offsets_.begin(), offsets_.end()), offsets_.end());
}

bool StructuringElement::contains(Offset o) const noexcept {
  return std::binary_search(offsets_.begin(), offsets_.end(), o);
}

bool StructuringElement::is_symmetric() const noexcept {
  return std::all_of(offsets_.begin(), offsets_.end(),
                     [this](Offset o) { return contains({-o.dx, -o.dy}); });
}

StructuringElement StructuringElement::reflected() const {
  std::vector<Offset> r;
  r.reserve(offsets_.size());
  for (const Offset o : offsets_) r.push_back({-o.dx, -o.dy});
  return StructuringElement(std::move(r));
}

StructuringElement disk_se(int radius) {
  if (radius < 0) throw DomainError("disk radius must be >= 0");
  std::vector<Offset> offsets;
  const long long r2 = static_cast<long long>(radius) * radius;
  for (int dy = -radius; dy <= radius; ++dy) {
    for (int dx = -radius; dx <= radius; ++dx) {
      if (static_cast<long long>(dx) * dx + static_cast<long long>(dy) * dy <= r2) {
        offsets.push_back({dx, dy});
      }
    }
  }
  return StructuringElement(std::move(offsets));
}

StructuringElement line_se(double length, double angle_degrees) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw DomainError("line length must be > 0");
  }
  if (!std::isfinite(angle_degrees)) throw DomainError("line angle must be finite");
  const int count = 2 * static_cast<int>(std::round((length - 1.0) / 2.0)) + 1;
  const int half = (count - 1) / 2;
  const double a = angle_degrees * std::numbers::pi / 180.0;
  const double c = std::cos(a);
  const double s = std::sin(a);
  std::vector<Offset> offsets;
  for (int i = -half; i <= half; ++i) {
    offsets.push_back({static_cast<int>(std::round(i * c)),
                       -static_cast<int>(std::round(i * s))});
  }
  return StructuringElement(std::move(offsets));
}

template <class Tag>
Raster<Tag> erode(const Raster<Tag>& img, const StructuringElement& se) {
  return flat_filter(img, se.offsets(), std::numeric_limits<double>::infinity(),
                     [](double a, double b) { return std::min(a, b); });
}

template <class Tag>
Raster<Tag> dilate(const Raster<Tag>& img, const StructuringElement& se) {
  const StructuringElement reflected = se.reflected();
  return flat_filter(img, reflected.offsets(), -std::numeric_limits<double>::infinity(),
                     [](double a, double b) { return std::max(a, b); });
}

template Image erode(const Image&, const StructuringElement&);
template ResponseImage erode(const ResponseImage&, const StructuringElement&);
template Image dilate(const Image&, const StructuringElement&);
template ResponseImage dilate(const ResponseImage&, const StructuringElement&);

}  // namespace veinseg
