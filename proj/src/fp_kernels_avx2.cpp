#include <immintrin.h>

#include "splitkit/fp_kernels.hpp"

// AVX2 kernels for p = 2^31 - 1. Residues live in 64-bit lanes; a 32x32->64
// multiply plus two Mersenne folds keeps everything branch-free.

namespace splitkit::kernels {

namespace {

inline fp_t m31_reduce(std::uint64_t x) {
    x = (x & kMersenne31) + (x >> 31);
    x = (x & kMersenne31) + (x >> 31);
    if (x >= kMersenne31) x -= kMersenne31;
    return x;
}

inline __m256i m31_fold(__m256i t) {
    const __m256i mask = _mm256_set1_epi64x(0x7FFFFFFF);
    // t < 2^62 + 2^31; after two folds v <= p + 1
    __m256i u = _mm256_add_epi64(_mm256_and_si256(t, mask), _mm256_srli_epi64(t, 31));
    __m256i v = _mm256_add_epi64(_mm256_and_si256(u, mask), _mm256_srli_epi64(u, 31));
    __m256i ge = _mm256_cmpgt_epi64(v, _mm256_set1_epi64x(0x7FFFFFFE));
    return _mm256_sub_epi64(v, _mm256_and_si256(ge, mask));
}

}  // namespace

void axpy_m31_avx2(fp_t* dst, const fp_t* src, fp_t c, std::size_t n, std::uint32_t) {
    const __m256i vc = _mm256_set1_epi64x(static_cast<long long>(c));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i t = _mm256_add_epi64(_mm256_mul_epu32(a, vc), b);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), m31_fold(t));
    }
    for (; i < n; ++i) dst[i] = m31_reduce(dst[i] + c * src[i]);
}

void scale_m31_avx2(fp_t* dst, fp_t c, std::size_t n, std::uint32_t) {
    const __m256i vc = _mm256_set1_epi64x(static_cast<long long>(c));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i t = _mm256_mul_epu32(b, vc);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), m31_fold(t));
    }
    for (; i < n; ++i) dst[i] = m31_reduce(c * dst[i]);
}

}  // namespace splitkit::kernels
