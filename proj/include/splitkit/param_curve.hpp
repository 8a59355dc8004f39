#pragma once

#include <map>
#include <vector>

#include "splitkit/graded_map.hpp"
#include "splitkit/multiform.hpp"
#include "splitkit/rational.hpp"
#include "splitkit/rnc.hpp"

namespace splitkit {

inline constexpr long long kMonomialCap = 20000;  // cap on binom(n+d, d)

// Parametrized rational curve of degree e in P^n: n+1 forms of degree e,
// base-point-free (no common zero).
template <class F>
struct ParamCurve {
    F field;
    int n;
    int e;
    std::vector<BiForm<F>> comps;

    ParamCurve(F f, int n_, int e_, std::vector<BiForm<F>> components)
        : field(f), n(n_), e(e_), comps(std::move(components)) {
        if (static_cast<int>(comps.size()) != n + 1)
            throw input_error("ParamCurve: need n+1 components");
        bool all_zero = true;
        for (const auto& c : comps) {
            if (c.degree() != e) throw input_error("ParamCurve: component degree mismatch");
            if (!c.is_zero()) all_zero = false;
        }
        if (all_zero) throw input_error("ParamCurve: zero parametrization");
        if (!is_unit(gcd_set(field, comps)))
            throw input_error("ParamCurve: parametrization has a base point");
    }
};

template <class F>
ParamCurve<F> rnc_curve(const F& field, int e, int n) {
    std::vector<BiForm<F>> cs;
    for (int i = 0; i <= n; ++i) {
        BiForm<F> c(field, e);
        if (i <= e) c.set_coeff(i, field.one());
        cs.push_back(std::move(c));
    }
    return ParamCurve<F>(field, n, e, std::move(cs));
}

// 2x2 minors of the Jacobian have no common zero
template <class F>
bool is_immersion(const ParamCurve<F>& c) {
    std::vector<BiForm<F>> ds, dt, minors;
    for (const auto& f : c.comps) {
        ds.push_back(f.deriv_s());
        dt.push_back(f.deriv_t());
    }
    for (int i = 0; i <= c.n; ++i)
        for (int j = i + 1; j <= c.n; ++j) minors.push_back(ds[i] * dt[j] - ds[j] * dt[i]);
    bool any = false;
    for (const auto& m : minors)
        if (!m.is_zero()) any = true;
    if (!any) return false;
    return is_unit(gcd_set(c.field, minors));
}

// Splitting of the normal bundle via the Euler/Jacobian diagram; requires the
// characteristic not to divide e and an unramified parametrization.
SplittingType normal_via_jacobian(const ParamCurve<PrimeField>& c);

// Generators and syzygies of the curve's ideal, supplied as data. Row r of the
// syzygy matrix satisfies sum_i syz[r][i] * gen[i] = 0 with deg(syz[r][i]) +
// deg(gen[i]) constant along the row.
struct Presentation {
    std::vector<FpMultiForm> gens;
    std::vector<std::vector<FpMultiForm>> syz;
    std::vector<int> gen_degrees() const;
    std::vector<int> row_degrees() const;

    void validate(const ParamCurve<PrimeField>& c) const;
};

// One hypersurface through the curve written on the presentation's generators.
struct HypersurfaceOnGens {
    int degree;                       // total degree of the hypersurface
    std::vector<FpMultiForm> coeffs;  // coeff i multiplies generator i; degree - d_i each
};

// The map whose kernel is the normal bundle: restricted transposed syzygies,
// with one extra row per stacked hypersurface.
GradedMap normal_via_presentation(const ParamCurve<PrimeField>& c, const Presentation& p,
                                  const std::vector<HypersurfaceOnGens>& stacked = {});

namespace detail {

// exponent vectors of the degree-d monomials in nvars variables, lex order
std::vector<std::vector<int>> monomials_of_degree(int nvars, int d);

long long binom(int n, int k);

}  // namespace detail

// h^0 of the degree-d ideal: nullity of the restriction map on degree-d
// coefficient space
template <class F>
long long h0_ideal(const ParamCurve<F>& c, int d);

// h^0 of the degree-d double ideal: the hypersurface and all first partials
// vanish along the curve (valid for smooth embedded curves in every
// characteristic)
template <class F>
long long h0_ideal_sq(const ParamCurve<F>& c, int d);

// Rank of the explicit monomial-condition system for the chain of coordinate
// lines; for e = n+1 the modified last line contributes its full
// double-vanishing conditions.
template <class F>
long long chain_double_conditions(const F& field, int n, int e, int d);

struct PhiResult {
    long long image_dim;
    long long target_dim;
    bool surjective;
};

// Dimension comparison for the map from degree-d hypersurfaces through the
// curve to homomorphisms out of the normal bundle.
PhiResult phi_surjective(const ParamCurve<PrimeField>& c, int d);

// Random degree-e curve, resampled until base-point-free and unramified
// (cap 32 attempts).
ParamCurve<PrimeField> random_curve(const PrimeField& f, int n, int e, Rng& rng);

}  // namespace splitkit
