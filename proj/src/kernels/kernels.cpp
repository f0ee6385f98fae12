#include "shrinkbox/kernels/kernels.hpp"

#include <cstdlib>
#include <string_view>

#include "shrinkbox/errors.hpp"

namespace shrinkbox::kernels {

namespace {

const Ops& resolve() {
  const char* force = std::getenv("SHRINKBOX_KERNELS");
  if (force != nullptr) {
    const std::string_view want{force};
    if (want == "scalar") return scalar_ops();
    if (want == "avx2") {
      const Ops* ops = avx2_ops();
      if (ops == nullptr) {
        throw ValidationError(
            "SHRINKBOX_KERNELS=avx2 requested but AVX2 is not available");
      }
      return *ops;
    }
    if (!want.empty() && want != "auto") {
      throw ValidationError("unknown SHRINKBOX_KERNELS value: " +
                            std::string(want));
    }
  }
  const Ops* ops = avx2_ops();
  return ops != nullptr ? *ops : scalar_ops();
}

}  // namespace

const Ops& active() {
  static const Ops& ops = resolve();
  return ops;
}

}  // namespace shrinkbox::kernels
