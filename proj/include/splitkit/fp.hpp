#pragma once

#include <cstdint>

#include "splitkit/errors.hpp"
#include "splitkit/rng.hpp"

namespace splitkit {

using fp_t = std::uint64_t;  // residue in [0, p), p < 2^31

inline constexpr std::uint32_t kMersenne31 = 2147483647u;  // 2^31 - 1, the default characteristic

// Deterministic Miller-Rabin, valid for all n < 3,215,031,751 with bases {2,3,5,7}.
inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint32_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    for (std::uint32_t a : {2u, 3u, 5u, 7u}) {
        std::uint64_t x = 1, b = a, e = d;
        while (e) {
            if (e & 1) x = x * b % n;
            b = b * b % n;
            e >>= 1;
        }
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = x * x % n;
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

// Prime field F_p, p < 2^31 (2, 3, 5 explicitly allowed). Elements are raw
// fp_t residues; the field object carries the modulus.
class PrimeField {
  public:
    using elem = fp_t;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (!is_prime_u32(p)) throw input_error("characteristic " + std::to_string(p) + " is not prime");
    }

    std::uint32_t p() const { return p_; }

    elem zero() const { return 0; }
    elem one() const { return 1 % p_; }
    elem from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<elem>(r);
    }
    bool is_zero(elem a) const { return a == 0; }

    elem add(elem a, elem b) const {
        elem t = a + b;
        return t >= p_ ? t - p_ : t;
    }
    elem sub(elem a, elem b) const { return a >= b ? a - b : a + p_ - b; }
    elem neg(elem a) const { return a == 0 ? 0 : p_ - a; }
    elem mul(elem a, elem b) const { return a * b % p_; }

    elem pow(elem a, std::uint64_t e) const {
        elem r = one(), b = a;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

    elem inv(elem a) const {
        if (a == 0) throw internal_error("division by zero in F_p");
        return pow(a, p_ - 2);
    }

    elem random(Rng& rng) const { return rng.below(p_); }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

  private:
    std::uint32_t p_;
};

}  // namespace splitkit
