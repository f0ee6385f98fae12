#include "shrinkbox/geometry.hpp"

#include <tuple>

#include "shrinkbox/kernels/scalar_impl.hpp"

namespace shrinkbox {

double iou(const BBox& a, const BBox& b) {
  return kernels::detail::iou_px(a.left, a.top, a.right, a.bottom, b.left,
                                 b.top, b.right, b.bottom);
}

BBox shrink_about_center(const BBox& b, double scale) {
  if (!(scale > 0.0) || scale > 1.0) {
    throw ValidationError("shrink scale must be in (0, 1]");
  }
  const double cx = b.cx();
  const double cy = b.cy();
  const double hw = b.width() * scale / 2.0;
  const double hh = b.height() * scale / 2.0;
  return BBox{cx - hw, cy - hh, cx + hw, cy + hh};
}

bool bbox_less(const BBox& a, const BBox& b) {
  return std::tie(a.left, a.top, a.right, a.bottom) <
         std::tie(b.left, b.top, b.right, b.bottom);
}

}  // namespace shrinkbox
