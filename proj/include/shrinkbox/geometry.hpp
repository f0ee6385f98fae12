#pragma once

#include "shrinkbox/errors.hpp"

namespace shrinkbox {

// Axis-aligned box in image pixel coordinates, y grows downward.
// Coordinates are real-valued; rounding to integer pixels happens only at
// raster-compositing time.
struct BBox {
  double left = 0.0;
  double top = 0.0;
  double right = 0.0;
  double bottom = 0.0;

  double width() const { return right - left; }
  double height() const { return bottom - top; }
  double area() const { return width() * height(); }
  double cx() const { return (left + right) / 2.0; }
  double cy() const { return (top + bottom) / 2.0; }
  bool valid() const { return left < right && top < bottom; }

  friend bool operator==(const BBox&, const BBox&) = default;
};

// Intersection over union. 0 for disjoint boxes, 1 for identical ones.
double iou(const BBox& a, const BBox& b);

// Scales width and height by `scale` about the box center.
// Throws ValidationError unless scale is in (0, 1].
BBox shrink_about_center(const BBox& b, double scale);

// Lexicographic order on (left, top, right, bottom); deterministic tie-break
// key for sorting predictions with equal confidence.
bool bbox_less(const BBox& a, const BBox& b);

}  // namespace shrinkbox
