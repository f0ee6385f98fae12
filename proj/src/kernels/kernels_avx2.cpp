#include "shrinkbox/kernels/kernels.hpp"
#include "shrinkbox/kernels/scalar_impl.hpp"

#if defined(__x86_64__)

#include <immintrin.h>

namespace shrinkbox::kernels {

namespace {

// Broadcasts the u16 alpha lane of each RGBA pixel to its four channel lanes.
// Operates on the 16-bit expansion of 4 pixels per 128-bit half.
const __m256i kAlphaBcast = _mm256_setr_epi8(
    6, 7, 6, 7, 6, 7, 6, 7, 14, 15, 14, 15, 14, 15, 14, 15, 6, 7, 6, 7, 6, 7,
    6, 7, 14, 15, 14, 15, 14, 15, 14, 15);

inline __m256i round_div255_u16(__m256i x) {
  const __m256i t = _mm256_add_epi16(x, _mm256_set1_epi16(128));
  return _mm256_srli_epi16(_mm256_add_epi16(t, _mm256_srli_epi16(t, 8)), 8);
}

inline __m256i blend16(__m256i d16, __m256i s16, __m256i bq) {
  const __m256i a = _mm256_shuffle_epi8(s16, kAlphaBcast);
  const __m256i w = round_div255_u16(_mm256_mullo_epi16(a, bq));
  const __m256i wc = _mm256_sub_epi16(_mm256_set1_epi16(255), w);
  return round_div255_u16(_mm256_add_epi16(_mm256_mullo_epi16(d16, wc),
                                           _mm256_mullo_epi16(s16, w)));
}

void blend_rgba_row_avx2(uint8_t* dst, const uint8_t* src, size_t npx,
                         int blend_q8) {
  const __m256i bq = _mm256_set1_epi16(static_cast<short>(blend_q8));
  size_t i = 0;
  for (; i + 8 <= npx; i += 8) {
    const uint8_t* sp = src + 4 * i;
    uint8_t* dp = dst + 4 * i;
    const __m256i s0 = _mm256_cvtepu8_epi16(
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(sp)));
    const __m256i s1 = _mm256_cvtepu8_epi16(
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(sp + 16)));
    const __m256i d0 = _mm256_cvtepu8_epi16(
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(dp)));
    const __m256i d1 = _mm256_cvtepu8_epi16(
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(dp + 16)));
    const __m256i r0 = blend16(d0, s0, bq);
    const __m256i r1 = blend16(d1, s1, bq);
    // packus interleaves 128-bit lanes; restore byte order afterwards.
    const __m256i packed = _mm256_permute4x64_epi64(
        _mm256_packus_epi16(r0, r1), _MM_SHUFFLE(3, 1, 2, 0));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dp), packed);
  }
  for (; i < npx; ++i) {
    detail::blend_px(dst + 4 * i, src + 4 * i, blend_q8);
  }
}

void iou_one_vs_many_avx2(const double box[4], const double* l,
                          const double* t, const double* r, const double* b,
                          double* out, size_t n) {
  const __m256d al = _mm256_set1_pd(box[0]);
  const __m256d at = _mm256_set1_pd(box[1]);
  const __m256d ar = _mm256_set1_pd(box[2]);
  const __m256d ab = _mm256_set1_pd(box[3]);
  const __m256d area_a =
      _mm256_set1_pd((box[2] - box[0]) * (box[3] - box[1]));
  const __m256d zero = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d bl = _mm256_loadu_pd(l + i);
    const __m256d bt = _mm256_loadu_pd(t + i);
    const __m256d br = _mm256_loadu_pd(r + i);
    const __m256d bb = _mm256_loadu_pd(b + i);
    const __m256d iw =
        _mm256_sub_pd(_mm256_min_pd(ar, br), _mm256_max_pd(al, bl));
    const __m256d ih =
        _mm256_sub_pd(_mm256_min_pd(ab, bb), _mm256_max_pd(at, bt));
    const __m256d inter = _mm256_mul_pd(_mm256_max_pd(iw, zero),
                                        _mm256_max_pd(ih, zero));
    const __m256d area_b =
        _mm256_mul_pd(_mm256_sub_pd(br, bl), _mm256_sub_pd(bb, bt));
    const __m256d uni =
        _mm256_sub_pd(_mm256_add_pd(area_a, area_b), inter);
    const __m256d q = _mm256_div_pd(inter, uni);
    const __m256d pos = _mm256_cmp_pd(inter, zero, _CMP_GT_OQ);
    _mm256_storeu_pd(out + i, _mm256_blendv_pd(zero, q, pos));
  }
  for (; i < n; ++i) {
    out[i] =
        detail::iou_px(box[0], box[1], box[2], box[3], l[i], t[i], r[i], b[i]);
  }
}

void estimate_many_avx2(double k, double c, const double* h, double* out,
                        size_t n) {
  const __m256d kv = _mm256_set1_pd(k);
  const __m256d cv = _mm256_set1_pd(c);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d hv = _mm256_loadu_pd(h + i);
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_div_pd(kv, hv), cv));
  }
  for (; i < n; ++i) {
    out[i] = detail::estimate_one(k, c, h[i]);
  }
}

}  // namespace

const Ops* avx2_ops() {
  if (!__builtin_cpu_supports("avx2")) return nullptr;
  static const Ops ops{"avx2", blend_rgba_row_avx2, iou_one_vs_many_avx2,
                       estimate_many_avx2};
  return &ops;
}

}  // namespace shrinkbox::kernels

#else  // !__x86_64__

namespace shrinkbox::kernels {
const Ops* avx2_ops() { return nullptr; }
}  // namespace shrinkbox::kernels

#endif
