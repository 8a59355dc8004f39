#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "splitkit/dense_matrix.hpp"
#include "splitkit/rational.hpp"
#include "splitkit/rng.hpp"

using namespace splitkit;

TEST_CASE("primality validation") {
    CHECK(is_prime_u32(2));
    CHECK(is_prime_u32(3));
    CHECK(is_prime_u32(5));
    CHECK(is_prime_u32(101));
    CHECK(is_prime_u32(kMersenne31));
    CHECK_FALSE(is_prime_u32(1));
    CHECK_FALSE(is_prime_u32(2147483646u));
    CHECK_THROWS_AS(PrimeField(91), input_error);
}

TEST_CASE("rank: 3x3 identity over F_101") {
    PrimeField f(101);
    DenseMatrix<PrimeField> m(f, 3, 3);
    for (int i = 0; i < 3; ++i) m.at(i, i) = 1;
    CHECK(rank(m) == 3);
}

TEST_CASE("rank: proportional rows over Q") {
    RationalField q;
    DenseMatrix<RationalField> m(q, 2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    CHECK(rank(m) == 1);
}

// the double-vanishing conditions a line imposes on quadrics in P^4: the ten
// coefficient rows of the restricted partials over the fifteen monomials;
// hand enumeration of the constrained monomials per the chain-of-lines proof
// gives x0^j x1^{2-j} (three) and x_m x0^j x1^{1-j} for m in {2,3,4} (six)
TEST_CASE("rank: line double-vanishing condition matrix") {
    PrimeField f(kMersenne31);
    // monomials x_a x_b, 0 <= a <= b <= 4, in lex order
    std::vector<std::pair<int, int>> monos;
    for (int a = 0; a < 5; ++a)
        for (int b = a; b < 5; ++b) monos.push_back({a, b});
    REQUIRE(monos.size() == 15);
    // partial of x_a x_b in x_i, restricted to the line [s, t, 0, 0, 0]:
    // a degree-1 form in (s, t); rows = 2 coefficients per partial
    DenseMatrix<PrimeField> m(f, 10, 15);
    auto restrict_lin = [&](int v) -> std::pair<fp_t, fp_t> {
        if (v == 0) return {1, 0};
        if (v == 1) return {0, 1};
        return {0, 0};
    };
    for (int i = 0; i < 5; ++i) {
        for (std::size_t c = 0; c < monos.size(); ++c) {
            auto [a, b] = monos[c];
            fp_t s = 0, t = 0;
            if (a == i) {
                auto [rs, rt] = restrict_lin(b);
                s = f.add(s, rs);
                t = f.add(t, rt);
            }
            if (b == i) {
                auto [rs, rt] = restrict_lin(a);
                s = f.add(s, rs);
                t = f.add(t, rt);
            }
            m.at(2 * i, c) = s;
            m.at(2 * i + 1, c) = t;
        }
    }
    // 15 coefficients minus the 6 quadrics in the square of the line's ideal
    CHECK(rank(m) == 9);
}

TEST_CASE("kernel basis: identity and zero matrices") {
    PrimeField f(101);
    DenseMatrix<PrimeField> id(f, 3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    CHECK(kernel_basis(id).empty());
    DenseMatrix<PrimeField> z(f, 2, 3);
    CHECK(kernel_basis(z).size() == 3);
}

TEST_CASE("kernel basis: multiplication by s^2+t^2 on sections is injective") {
    PrimeField f(7);
    // H0(O(0)) -> H0(O(2)): the single column (1, 0, 1)
    DenseMatrix<PrimeField> m(f, 3, 1);
    m.at(0, 0) = 1;
    m.at(2, 0) = 1;
    CHECK(kernel_basis(m).empty());
    CHECK(nullity(m) == 0);
}

TEST_CASE("kernel vectors satisfy m v = 0") {
    PrimeField f(kMersenne31);
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t r = 1 + rng.below(6), c = 1 + rng.below(8);
        DenseMatrix<PrimeField> m(f, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng.below(3) ? 0 : f.random(rng);
        auto basis = kernel_basis(m);
        CHECK(basis.size() == nullity(m));
        for (const auto& v : basis)
            for (std::size_t i = 0; i < r; ++i) {
                fp_t acc = 0;
                for (std::size_t j = 0; j < c; ++j) acc = f.add(acc, f.mul(m.at(i, j), v[j]));
                CHECK(acc == 0);
            }
    }
}

TEST_CASE("property: rank equals rank of the transpose") {
    Rng rng(2024);
    PrimeField fp(kMersenne31);
    PrimeField f2(2);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = 1 + rng.below(7), c = 1 + rng.below(7);
        DenseMatrix<PrimeField> m(fp, r, c);
        DenseMatrix<PrimeField> m2(f2, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                m.at(i, j) = fp.random(rng);
                m2.at(i, j) = f2.random(rng);
            }
        CHECK(rank(m) == rank(m.transposed()));
        CHECK(rank(m2) == rank(m2.transposed()));
    }
    RationalField q;
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
        DenseMatrix<RationalField> m(q, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                m.at(i, j) = q.from_int(static_cast<long long>(rng.below(19)) - 9);
        CHECK(rank(m) == rank(m.transposed()));
    }
}

TEST_CASE("property: rank over Q equals rank over a random 31-bit prime") {
    Rng rng(5150);
    // draw a random 31-bit prime
    std::uint32_t p = 0;
    for (;;) {
        p = static_cast<std::uint32_t>((rng.next() >> 33) | 0x40000001u);
        if (is_prime_u32(p)) break;
    }
    PrimeField fp(p);
    RationalField q;
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t r = 1 + rng.below(7), c = 1 + rng.below(7);
        DenseMatrix<RationalField> mq(q, r, c);
        DenseMatrix<PrimeField> mp(fp, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                long long v = static_cast<long long>(rng.below(19)) - 9;
                mq.at(i, j) = q.from_int(v);
                mp.at(i, j) = fp.from_int(v);
            }
        CHECK(rank(mq) == rank(mp));
        CHECK(nullity(mq) + rank(mq) == c);
        CHECK(nullity(mp) + rank(mp) == c);
    }
}

TEST_CASE("rational kernel basis is exact") {
    RationalField q;
    Rng rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t r = 1 + rng.below(5), c = 1 + rng.below(6);
        DenseMatrix<RationalField> m(q, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                m.at(i, j) = q.from_int(static_cast<long long>(rng.below(19)) - 9);
        auto basis = kernel_basis(m);
        CHECK(basis.size() == nullity(m));
        for (const auto& v : basis)
            for (std::size_t i = 0; i < r; ++i) {
                mpq_class acc(0);
                for (std::size_t j = 0; j < c; ++j) acc += m.at(i, j) * v[j];
                CHECK(sgn(acc) == 0);
            }
    }
}

TEST_CASE("rational capacity cap") {
    RationalField q;
    DenseMatrix<RationalField> m(q, 401, 2);
    CHECK_THROWS_AS(rank(m), capacity_error);
}

TEST_CASE("random_scalar is uniform-ish and deterministic") {
    PrimeField f(101);
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(f.random(a) == f.random(b));
    Rng c(1);
    std::vector<int> hits(101, 0);
    for (int i = 0; i < 10100; ++i) hits[f.random(c)]++;
    for (int h : hits) CHECK(h > 0);
}

TEST_CASE("per-task rng derivation is scheduling independent") {
    auto r1 = derive_rng(99, 3);
    auto r2 = derive_rng(99, 3);
    auto r3 = derive_rng(99, 4);
    CHECK(r1.next() == r2.next());
    CHECK(r1.next() != r3.next());
}
