#pragma once

#include <cstddef>
#include <cstdint>

#include "splitkit/fp.hpp"

// Row kernels for F_p elimination. The scalar generic kernel is the reference
// for any p < 2^31; the Mersenne-31 variants (scalar folding, AVX2) are
// equivalence-tested against it and selected at runtime.

namespace splitkit::kernels {

// dst[i] = (dst[i] + c * src[i]) mod p; all inputs reduced mod p
using axpy_fn = void (*)(fp_t* dst, const fp_t* src, fp_t c, std::size_t n, std::uint32_t p);
// dst[i] = c * dst[i] mod p
using scale_fn = void (*)(fp_t* dst, fp_t c, std::size_t n, std::uint32_t p);

void axpy_mod_scalar(fp_t* dst, const fp_t* src, fp_t c, std::size_t n, std::uint32_t p);
void scale_mod_scalar(fp_t* dst, fp_t c, std::size_t n, std::uint32_t p);

void axpy_m31_scalar(fp_t* dst, const fp_t* src, fp_t c, std::size_t n, std::uint32_t p);
void scale_m31_scalar(fp_t* dst, fp_t c, std::size_t n, std::uint32_t p);

#if defined(SPLITKIT_BUILD_AVX2)
void axpy_m31_avx2(fp_t* dst, const fp_t* src, fp_t c, std::size_t n, std::uint32_t p);
void scale_m31_avx2(fp_t* dst, fp_t c, std::size_t n, std::uint32_t p);
#endif

struct Kernels {
    axpy_fn axpy;
    scale_fn scale;
    const char* name;
};

// Runtime selection for the field's modulus: AVX2 Mersenne path when p = 2^31-1
// and the CPU supports it, scalar otherwise. SPLITKIT_NO_SIMD=1 forces scalar.
Kernels select(std::uint32_t p);

bool cpu_has_avx2();

}  // namespace splitkit::kernels
