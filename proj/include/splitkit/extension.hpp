#pragma once

#include <vector>

#include "splitkit/bundle.hpp"
#include "splitkit/dense_matrix.hpp"
#include "splitkit/fp.hpp"
#include "splitkit/rng.hpp"

namespace splitkit {

// Class of an extension 0 -> E -> F -> O(d) -> 0 with E a sum of line bundles.
// Component i lives in the cohomology of O(base[i] - d) on the two-chart cover:
// Laurent monomials s^u t^v with u, v <= -1 and u + v = base[i] - d. We store
// the coefficient of s^{-j} t^{base[i]-d+j} at index j-1, j = 1..d-base[i]-1.
struct ExtensionClass {
    PrimeField field;
    std::vector<int> base;  // degrees of E in basis order
    int top_degree;
    std::vector<std::vector<fp_t>> cocycle;

    ExtensionClass(PrimeField f, std::vector<int> base_degrees, int d,
                   std::vector<std::vector<fp_t>> cocycle_coeffs);

    static ExtensionClass zero(PrimeField f, const std::vector<int>& base_degrees, int d);
    static ExtensionClass random(PrimeField f, const std::vector<int>& base_degrees, int d,
                                 Rng& rng);
};

// Splitting type of the middle term, from section counts h0(F(t)) = h0(E(t)) +
// nullity of the connecting map (multiplication by the cocycle).
SplittingType extension_splitting(const ExtensionClass& x);

}  // namespace splitkit
