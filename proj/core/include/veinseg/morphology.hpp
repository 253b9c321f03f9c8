#pragma once

#include <compare>
#include <span>
#include <vector>

#include "veinseg/image.hpp"

namespace veinseg {

struct Offset {
  int dx = 0;
  int dy = 0;
  auto operator<=>(const Offset&) const = default;
};

/// Flat structuring element: a non-empty set of integer offsets. Image y
/// points down, so (0, -1) is the pixel above the origin.
class StructuringElement {
 public:
  /// Duplicates are removed; throws DomainError if `offsets` is empty.
  explicit StructuringElement(std::vector<Offset> offsets);

  std::span<const Offset> offsets() const noexcept { return offsets_; }
  std::size_t size() const noexcept { return offsets_.size(); }
  bool contains(Offset o) const noexcept;
  bool contains_origin() const noexcept { return contains({0, 0}); }
  bool is_symmetric() const noexcept;

  /// The point reflection {-o : o in this}.
  StructuringElement reflected() const;

  bool operator==(const StructuringElement&) const = default;

 private:
  std::vector<Offset> offsets_;  // sorted
};

/// Exact Euclidean disk {(dx,dy) : dx^2 + dy^2 <= r^2}.
StructuringElement disk_se(int radius);

/// Symmetric line of N = 2 round((length-1)/2) + 1 pixels through the origin;
/// offset i maps to (round(i cos a), -round(i sin a)), angle counter-clockwise
/// from +x. Pixels that round onto the same offset are merged.
StructuringElement line_se(double length, double angle_degrees);

/// out[p] = min over o of img[p + o]. Reads outside the image are ignored;
/// a pixel whose every probe falls outside keeps its input value.
template <class Tag>
Raster<Tag> erode(const Raster<Tag>& img, const StructuringElement& se);

/// out[p] = max over o of img[p - o], with the same border rule as erode.
template <class Tag>
Raster<Tag> dilate(const Raster<Tag>& img, const StructuringElement& se);

/// Dilation followed by erosion with the same element.
template <class Tag>
Raster<Tag> close(const Raster<Tag>& img, const StructuringElement& se) {
  return erode(dilate(img, se), se);
}

/// Erosion followed by dilation with the same element.
template <class Tag>
Raster<Tag> open(const Raster<Tag>& img, const StructuringElement& se) {
  return dilate(erode(img, se), se);
}

extern template Image erode(const Image&, const StructuringElement&);
extern template ResponseImage erode(const ResponseImage&, const StructuringElement&);
extern template Image dilate(const Image&, const StructuringElement&);
extern template ResponseImage dilate(const ResponseImage&, const StructuringElement&);

}  // namespace veinseg
