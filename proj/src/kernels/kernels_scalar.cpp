#include "shrinkbox/kernels/kernels.hpp"
#include "shrinkbox/kernels/scalar_impl.hpp"

namespace shrinkbox::kernels {

namespace {

void blend_rgba_row_scalar(uint8_t* dst, const uint8_t* src, size_t npx,
                           int blend_q8) {
  for (size_t i = 0; i < npx; ++i) {
    detail::blend_px(dst + 4 * i, src + 4 * i, blend_q8);
  }
}

void iou_one_vs_many_scalar(const double box[4], const double* l,
                            const double* t, const double* r, const double* b,
                            double* out, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    out[i] = detail::iou_px(box[0], box[1], box[2], box[3], l[i], t[i], r[i],
                            b[i]);
  }
}

void estimate_many_scalar(double k, double c, const double* h, double* out,
                          size_t n) {
  for (size_t i = 0; i < n; ++i) {
    out[i] = detail::estimate_one(k, c, h[i]);
  }
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{"scalar", blend_rgba_row_scalar, iou_one_vs_many_scalar,
                       estimate_many_scalar};
  return ops;
}

}  // namespace shrinkbox::kernels
