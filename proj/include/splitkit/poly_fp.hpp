#pragma once

#include <cstddef>
#include <vector>

#include "splitkit/fp.hpp"

// Dense univariate polynomials over F_p (index = exponent), just enough for
// fraction-free elimination over F_p[t].

namespace splitkit::polyfp {

using Poly = std::vector<fp_t>;

void trim(Poly& a);
bool is_zero(const Poly& a);
Poly mul(const PrimeField& f, const Poly& a, const Poly& b);
Poly sub(const PrimeField& f, const Poly& a, const Poly& b);
// exact division (throws internal_error if not exact)
Poly div_exact(const PrimeField& f, const Poly& a, const Poly& b);

// rank of a matrix over F_p[t] via one-step Bareiss with row pivoting;
// this is the rank at the generic point of the line
std::size_t poly_matrix_rank(const PrimeField& f, std::vector<std::vector<Poly>> m);

}  // namespace splitkit::polyfp
