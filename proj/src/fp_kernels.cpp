#include "splitkit/fp_kernels.hpp"

#include <cstdlib>

namespace splitkit::kernels {

bool cpu_has_avx2() {
#if defined(SPLITKIT_BUILD_AVX2)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

namespace {

bool simd_disabled() {
    const char* e = std::getenv("SPLITKIT_NO_SIMD");
    return e && e[0] && e[0] != '0';
}

}  // namespace

Kernels select(std::uint32_t p) {
    if (p == kMersenne31) {
#if defined(SPLITKIT_BUILD_AVX2)
        if (cpu_has_avx2() && !simd_disabled())
            return {&axpy_m31_avx2, &scale_m31_avx2, "m31-avx2"};
#endif
        return {&axpy_m31_scalar, &scale_m31_scalar, "m31-scalar"};
    }
    return {&axpy_mod_scalar, &scale_mod_scalar, "mod-scalar"};
}

}  // namespace splitkit::kernels
