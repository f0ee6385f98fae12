#pragma once

#include <cstddef>
#include <cstdint>

// Arithmetic inner loops used by matching, evaluation, and compositing.
// Every kernel has a scalar reference implementation and may have SIMD
// variants; variants are selected once at runtime and must produce
// bit-identical results (equivalence-tested). Elementwise float kernels rely
// on IEEE correctly-rounded +,-,*,/,min,max with contraction disabled; all
// reductions in the library stay scalar so summation order is pinned.
namespace shrinkbox::kernels {

// Alpha-composites one row of RGBA pixels: src over dst with a global blend
// factor quantized to blend_q8 in [0,255]. Per pixel the weight is
// w = round255(a * blend_q8) and each channel becomes
// round255(dst*(255-w) + src*w), pure integer arithmetic.
using BlendRowFn = void (*)(uint8_t* dst_rgba, const uint8_t* src_rgba,
                            size_t npx, int blend_q8);

// IoU of one box (l,t,r,b) against n boxes held in SoA arrays.
using IouManyFn = void (*)(const double box[4], const double* l,
                           const double* t, const double* r, const double* b,
                           double* out, size_t n);

// out[i] = k / h[i] + c.
using EstimateManyFn = void (*)(double k, double c, const double* h,
                                double* out, size_t n);

struct Ops {
  const char* name;
  BlendRowFn blend_rgba_row;
  IouManyFn iou_one_vs_many;
  EstimateManyFn estimate_many;
};

const Ops& scalar_ops();

// nullptr when AVX2 is unavailable at build or run time.
const Ops* avx2_ops();

// Best supported variant; SHRINKBOX_KERNELS=scalar|avx2 overrides.
const Ops& active();

}  // namespace shrinkbox::kernels
