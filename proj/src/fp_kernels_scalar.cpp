#include "splitkit/fp_kernels.hpp"

namespace splitkit::kernels {

namespace {

// reduces x < 2^62 + 2^31 modulo 2^31 - 1
inline fp_t m31_reduce(std::uint64_t x) {
    x = (x & kMersenne31) + (x >> 31);  // < 2^32
    x = (x & kMersenne31) + (x >> 31);  // <= p + 1
    if (x >= kMersenne31) x -= kMersenne31;
    return x;
}

}  // namespace

void axpy_mod_scalar(fp_t* dst, const fp_t* src, fp_t c, std::size_t n, std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = (dst[i] + c * src[i]) % p;
}

void scale_mod_scalar(fp_t* dst, fp_t c, std::size_t n, std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = c * dst[i] % p;
}

void axpy_m31_scalar(fp_t* dst, const fp_t* src, fp_t c, std::size_t n, std::uint32_t) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = m31_reduce(dst[i] + c * src[i]);
}

void scale_m31_scalar(fp_t* dst, fp_t c, std::size_t n, std::uint32_t) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = m31_reduce(c * dst[i]);
}

}  // namespace splitkit::kernels
