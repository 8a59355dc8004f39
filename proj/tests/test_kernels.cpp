#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "splitkit/fp_kernels.hpp"
#include "splitkit/rng.hpp"

using namespace splitkit;

namespace {

std::vector<fp_t> random_row(Rng& rng, std::size_t n, std::uint32_t p) {
    std::vector<fp_t> v(n);
    for (auto& x : v) x = rng.below(p);
    return v;
}

}  // namespace

TEST_CASE("mersenne kernels agree with the generic scalar reference") {
    Rng rng(0xBEEF);
    const std::uint32_t p = kMersenne31;
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 31u, 64u, 257u}) {
        auto src = random_row(rng, n, p);
        auto d0 = random_row(rng, n, p);
        fp_t c = rng.below(p);
        auto d1 = d0, d2 = d0, d3 = d0;
        kernels::axpy_mod_scalar(d1.data(), src.data(), c, n, p);
        kernels::axpy_m31_scalar(d2.data(), src.data(), c, n, p);
        CHECK(d1 == d2);
#if defined(SPLITKIT_BUILD_AVX2)
        if (kernels::cpu_has_avx2()) {
            kernels::axpy_m31_avx2(d3.data(), src.data(), c, n, p);
            CHECK(d1 == d3);
        }
#endif
        auto s1 = d0, s2 = d0, s3 = d0;
        kernels::scale_mod_scalar(s1.data(), c, n, p);
        kernels::scale_m31_scalar(s2.data(), c, n, p);
        CHECK(s1 == s2);
#if defined(SPLITKIT_BUILD_AVX2)
        if (kernels::cpu_has_avx2()) {
            kernels::scale_m31_avx2(s3.data(), c, n, p);
            CHECK(s1 == s3);
        }
#endif
    }
}

TEST_CASE("kernel edge values: operands at p-1") {
    const std::uint32_t p = kMersenne31;
    std::vector<fp_t> src(8, p - 1), dst(8, p - 1), ref(8, p - 1);
    kernels::axpy_mod_scalar(ref.data(), src.data(), p - 1, 8, p);
    kernels::axpy_m31_scalar(dst.data(), src.data(), p - 1, 8, p);
    CHECK(ref == dst);
#if defined(SPLITKIT_BUILD_AVX2)
    if (kernels::cpu_has_avx2()) {
        std::vector<fp_t> v(8, p - 1);
        kernels::axpy_m31_avx2(v.data(), src.data(), p - 1, 8, p);
        CHECK(ref == v);
    }
#endif
}

TEST_CASE("runtime dispatch picks a mersenne kernel for the default prime") {
    auto k1 = kernels::select(kMersenne31);
    CHECK(std::string(k1.name).find("m31") != std::string::npos);
    auto k2 = kernels::select(101);
    CHECK(std::string(k2.name) == std::string("mod-scalar"));
}

TEST_CASE("generic kernel across small primes") {
    Rng rng(7);
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u, 65537u}) {
        auto src = random_row(rng, 33, p);
        auto dst = random_row(rng, 33, p);
        fp_t c = rng.below(p);
        auto expect = dst;
        for (std::size_t i = 0; i < 33; ++i)
            expect[i] = (dst[i] + static_cast<unsigned __int128>(c) * src[i]) % p;
        kernels::axpy_mod_scalar(dst.data(), src.data(), c, 33, p);
        CHECK(dst == expect);
    }
}
