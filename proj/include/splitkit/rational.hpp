#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "splitkit/dense_matrix.hpp"
#include "splitkit/errors.hpp"

namespace splitkit {

// Exact rationals backed by GMP. Fractions are kept canonical (lowest terms,
// positive denominator) by mpq semantics.
class RationalField {
  public:
    using elem = mpq_class;

    elem zero() const { return elem(0); }
    elem one() const { return elem(1); }
    elem from_int(long long v) const { return elem(static_cast<long>(v)); }
    bool is_zero(const elem& a) const { return sgn(a) == 0; }

    elem add(const elem& a, const elem& b) const { return a + b; }
    elem sub(const elem& a, const elem& b) const { return a - b; }
    elem mul(const elem& a, const elem& b) const { return a * b; }
    elem neg(const elem& a) const { return -a; }
    elem inv(const elem& a) const {
        if (sgn(a) == 0) throw internal_error("division by zero in Q");
        return 1 / a;
    }

    bool operator==(const RationalField&) const { return true; }
};

// Matrices over Q above this size are rejected; use a prime field instead.
inline constexpr std::size_t kRationalDim = 400;

// Fraction-free (Bareiss) rank; entry growth stays polynomial in the minors.
std::size_t rank(const DenseMatrix<RationalField>& m);

std::size_t nullity(const DenseMatrix<RationalField>& m);

std::vector<std::vector<mpq_class>> kernel_basis(const DenseMatrix<RationalField>& m);

}  // namespace splitkit
