#pragma once

#include <cstdint>

// Per-element formulas shared by the scalar reference kernels, the SIMD
// variants (tail handling), and the public geometry API. Keeping one
// definition pins all code paths to the same operation sequence.
namespace shrinkbox::kernels::detail {

inline double iou_px(double al, double at, double ar, double ab, double bl,
                     double bt, double br, double bb) {
  const double iw = (ar < br ? ar : br) - (al > bl ? al : bl);
  const double ih = (ab < bb ? ab : bb) - (at > bt ? at : bt);
  const double cw = iw > 0.0 ? iw : 0.0;
  const double ch = ih > 0.0 ? ih : 0.0;
  const double inter = cw * ch;
  if (inter <= 0.0) return 0.0;
  const double uni = (ar - al) * (ab - at) + (br - bl) * (bb - bt) - inter;
  return inter / uni;
}

inline double estimate_one(double k, double c, double h) { return k / h + c; }

// Exact rounding division by 255 for x in [0, 65280].
inline uint16_t round_div255(uint32_t x) {
  const uint32_t t = x + 128;
  return static_cast<uint16_t>((t + (t >> 8)) >> 8);
}

// src over dst for one pixel channel with weight w in [0,255].
inline uint8_t blend_channel(uint8_t dst, uint8_t src, uint16_t w) {
  return static_cast<uint8_t>(round_div255(
      static_cast<uint32_t>(dst) * (255u - w) + static_cast<uint32_t>(src) * w));
}

inline void blend_px(uint8_t* dst, const uint8_t* src, int blend_q8) {
  const uint16_t w = round_div255(static_cast<uint32_t>(src[3]) *
                                  static_cast<uint32_t>(blend_q8));
  dst[0] = blend_channel(dst[0], src[0], w);
  dst[1] = blend_channel(dst[1], src[1], w);
  dst[2] = blend_channel(dst[2], src[2], w);
  dst[3] = blend_channel(dst[3], src[3], w);
}

}  // namespace shrinkbox::kernels::detail
