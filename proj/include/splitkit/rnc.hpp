#pragma once

#include <map>
#include <utility>
#include <vector>

#include "splitkit/extension.hpp"
#include "splitkit/graded_map.hpp"
#include "splitkit/multiform.hpp"

namespace splitkit {

// Rational normal curve of degree e spanning the coordinate e-plane in P^n:
// [s^e : s^{e-1} t : ... : t^e : 0 : ... : 0].
struct RncModel {
    int e;
    int n;

    RncModel(int e_, int n_) : e(e_), n(n_) {
        if (e < 1 || e > n) throw input_error("RncModel: need 1 <= e <= n");
    }

    std::vector<FpForm> parametrization(const PrimeField& f) const;
};

using FpMultiForm = MultiForm<PrimeField>;

// q_{i,j} = x_i x_{j-1} - x_{i-1} x_j, the determinantal quadric generators
FpMultiForm rnc_quadric(const PrimeField& f, int nvars, int i, int j);

// O(e+2)^{e-1} + O(e)^{n-e}; for e = n this is O(n+2)^{n-1}
SplittingType standard_normal_splitting(int e, int n);

// degree sequence in the fixed basis order (quadric block, then the directions
// normal to the spanning plane)
std::vector<int> normal_basis_degrees(int e, int n);

// One symbolic term of the image of a normal-bundle section on q_{i,k},
// expanded over the free degree-(n+2) basis b_{l,l+1}.
struct SectionImageTerm {
    int s_exp;
    int t_exp;
    int ell;  // the basis element b_{ell, ell+1}
};

// alpha(q_{i,k}) = sum over l in [i, k-1] of s^{n-k-i+l} t^{k+i-l-2} b_{l,l+1}
std::vector<SectionImageTerm> section_image_on_quadric(int i, int k, int n);

// Degree-d hypersurface through the curve, presented by its coefficients on
// the ideal generators: F = sum A_{i,j} q_{i,j} + sum L_j x_j (j > e).
class HypersurfaceCombo {
  public:
    HypersurfaceCombo(RncModel model, int degree);

    const RncModel& model() const { return model_; }
    int degree() const { return degree_; }

    void set_quadric_coeff(int i, int j, FpMultiForm a);
    void set_linear_coeff(int j, FpMultiForm l);
    void add_scalar_quadric(const PrimeField& f, int i, int j, fp_t c);

    const std::map<std::pair<int, int>, FpMultiForm>& quadric_coeffs() const { return qc_; }
    const std::map<int, FpMultiForm>& linear_coeffs() const { return lc_; }

    // the underlying polynomial of degree `degree` in n+1 variables
    FpMultiForm polynomial(const PrimeField& f) const;

  private:
    RncModel model_;
    int degree_;
    std::map<std::pair<int, int>, FpMultiForm> qc_;
    std::map<int, FpMultiForm> lc_;
};

// Row of the induced normal map: coefficient collection over the b-basis
// followed by the restrictions of the linear-generator coefficients.
std::vector<FpForm> hypersurface_row(const PrimeField& f, const HypersurfaceCombo& h);

// Stacked map whose kernel is the normal bundle of the curve in the complete
// intersection cut by the combos.
GradedMap ci_normal_map(const PrimeField& f, const std::vector<HypersurfaceCombo>& hs,
                        const RncModel& model);

bool smooth_along_curve(const PrimeField& f, const std::vector<HypersurfaceCombo>& hs,
                        const RncModel& model);

// Hyperplane extension: combos F_i in one more variable, F_i + x_n G_i. The
// G_i (degree d_i - 1, in the n+1 variables of the larger space) land in the
// new linear slot.
std::vector<HypersurfaceCombo> realize_extension(const std::vector<HypersurfaceCombo>& hs0,
                                                 const std::vector<FpMultiForm>& gs);

// The class of 0 -> K0 -> KX -> O(e) -> 0 cut out by a hyperplane-realized
// complete intersection, as an explicit cocycle over the kernel generators of
// the smaller map. extension_splitting of the result must agree with the
// kernel splitting of the realized map.
ExtensionClass induced_extension_class(const PrimeField& f,
                                       const std::vector<HypersurfaceCombo>& hs0,
                                       const std::vector<FpMultiForm>& gs);

}  // namespace splitkit
