#include "splitkit/rnc.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "splitkit/errors.hpp"

namespace splitkit {

std::vector<FpForm> RncModel::parametrization(const PrimeField& f) const {
    std::vector<FpForm> ps;
    ps.reserve(n + 1);
    for (int i = 0; i <= n; ++i) {
        FpForm c(f, e);
        if (i <= e) c.set_coeff(i, f.one());
        ps.push_back(std::move(c));
    }
    return ps;
}

FpMultiForm rnc_quadric(const PrimeField& f, int nvars, int i, int j) {
    if (!(1 <= i && i < j && j < nvars)) throw input_error("rnc_quadric: need 1 <= i < j <= n");
    std::vector<int> e1(nvars, 0), e2(nvars, 0);
    e1[i] += 1;
    e1[j - 1] += 1;
    e2[i - 1] += 1;
    e2[j] += 1;
    auto m = FpMultiForm::monomial(f, nvars, e1, f.one());
    m.add_term(e2, f.neg(f.one()));
    return m;
}

SplittingType standard_normal_splitting(int e, int n) {
    if (e < 1 || e > n) throw input_error("standard_normal_splitting: need 1 <= e <= n");
    return SplittingType(normal_basis_degrees(e, n));
}

std::vector<int> normal_basis_degrees(int e, int n) {
    std::vector<int> d;
    for (int i = 0; i < e - 1; ++i) d.push_back(e + 2);
    for (int i = 0; i < n - e; ++i) d.push_back(e);
    return d;
}

std::vector<SectionImageTerm> section_image_on_quadric(int i, int k, int n) {
    if (!(1 <= i && i < k && k <= n)) throw input_error("section_image: need 1 <= i < k <= n");
    std::vector<SectionImageTerm> out;
    for (int l = i; l <= k - 1; ++l)
        out.push_back({n - k - i + l, k + i - l - 2, l});
    return out;
}

HypersurfaceCombo::HypersurfaceCombo(RncModel model, int degree)
    : model_(model), degree_(degree) {
    if (degree < 2) throw input_error("HypersurfaceCombo: degree must be at least 2");
}

void HypersurfaceCombo::set_quadric_coeff(int i, int j, FpMultiForm a) {
    if (!(1 <= i && i < j && j <= model_.e))
        throw input_error("quadric coefficient index out of range");
    if (a.degree() != degree_ - 2)
        throw input_error("quadric coefficient must have degree " + std::to_string(degree_ - 2));
    if (a.nvars() != model_.n + 1) throw input_error("quadric coefficient arity mismatch");
    qc_.insert_or_assign({i, j}, std::move(a));
}

void HypersurfaceCombo::set_linear_coeff(int j, FpMultiForm l) {
    if (!(model_.e < j && j <= model_.n)) throw input_error("linear coefficient index out of range");
    if (l.degree() != degree_ - 1)
        throw input_error("linear coefficient must have degree " + std::to_string(degree_ - 1));
    if (l.nvars() != model_.n + 1) throw input_error("linear coefficient arity mismatch");
    lc_.insert_or_assign(j, std::move(l));
}

void HypersurfaceCombo::add_scalar_quadric(const PrimeField& f, int i, int j, fp_t c) {
    if (degree_ != 2) throw input_error("scalar quadric coefficients require degree 2");
    auto it = qc_.find({i, j});
    if (it == qc_.end()) {
        FpMultiForm a(f, model_.n + 1, 0);
        a.add_term(std::vector<int>(model_.n + 1, 0), c);
        set_quadric_coeff(i, j, std::move(a));
    } else {
        FpMultiForm a(f, model_.n + 1, 0);
        a.add_term(std::vector<int>(model_.n + 1, 0), c);
        it->second.add_in(a);
    }
}

FpMultiForm HypersurfaceCombo::polynomial(const PrimeField& f) const {
    FpMultiForm acc(f, model_.n + 1, degree_);
    for (const auto& [ij, a] : qc_) acc.add_in(a * rnc_quadric(f, model_.n + 1, ij.first, ij.second));
    for (const auto& [j, l] : lc_) acc.add_in(l * FpMultiForm::variable(f, model_.n + 1, j));
    return acc;
}

std::vector<FpForm> hypersurface_row(const PrimeField& f, const HypersurfaceCombo& h) {
    const RncModel& md = h.model();
    const int e = md.e, n = md.n, d = h.degree();
    const auto params = md.parametrization(f);
    const int degb = e * d - (e + 2);
    const int degl = e * d - e;
    std::vector<FpForm> row;
    row.reserve(n - 1);
    for (int l = 1; l <= e - 1; ++l) row.emplace_back(f, degb);
    for (int j = e + 1; j <= n; ++j) row.emplace_back(f, degl);
    for (const auto& [ij, a] : h.quadric_coeffs()) {
        if (a.is_zero()) continue;
        FpForm ra = a.restrict_to(params);  // degree e(d-2)
        for (const auto& term : section_image_on_quadric(ij.first, ij.second, e)) {
            if (term.s_exp < 0 || term.t_exp < 0)
                throw internal_error("hypersurface_row: negative exponent in expansion");
            FpForm mono = FpForm::monomial(f, e - 2, term.t_exp, f.one());
            row[term.ell - 1].add_in(ra * mono);
        }
    }
    for (const auto& [j, l] : h.linear_coeffs()) {
        if (l.is_zero()) continue;
        FpForm rl = l.restrict_to(params);  // degree e(d-1)
        row[(e - 1) + (j - e - 1)].add_in(rl);
    }
    return row;
}

GradedMap ci_normal_map(const PrimeField& f, const std::vector<HypersurfaceCombo>& hs,
                        const RncModel& model) {
    std::vector<int> src = normal_basis_degrees(model.e, model.n);
    std::vector<int> tgt;
    std::vector<std::vector<FpForm>> ent;
    for (const auto& h : hs) {
        if (h.model().e != model.e || h.model().n != model.n)
            throw input_error("ci_normal_map: combo model mismatch");
        tgt.push_back(model.e * h.degree());
        ent.push_back(hypersurface_row(f, h));
    }
    return GradedMap(f, std::move(src), std::move(tgt), std::move(ent));
}

bool smooth_along_curve(const PrimeField& f, const std::vector<HypersurfaceCombo>& hs,
                        const RncModel& model) {
    if (hs.size() > static_cast<std::size_t>(model.n - 1))
        throw input_error("smooth_along_curve: more hypersurfaces than the normal rank");
    return surjective_everywhere(ci_normal_map(f, hs, model));
}

std::vector<HypersurfaceCombo> realize_extension(const std::vector<HypersurfaceCombo>& hs0,
                                                 const std::vector<FpMultiForm>& gs) {
    if (hs0.size() != gs.size()) throw input_error("realize_extension: one G per combo required");
    std::vector<HypersurfaceCombo> out;
    out.reserve(hs0.size());
    for (std::size_t m = 0; m < hs0.size(); ++m) {
        const auto& h = hs0[m];
        const int n0 = h.model().n, e = h.model().e, d = h.degree();
        const int n = n0 + 1;
        if (gs[m].nvars() != n + 1)
            throw input_error("realize_extension: G must live in the larger space");
        if (gs[m].degree() != d - 1)
            throw input_error("realize_extension: G must have degree " + std::to_string(d - 1));
        HypersurfaceCombo hx(RncModel(e, n), d);
        const PrimeField& f = gs[m].field();
        for (const auto& [ij, a] : h.quadric_coeffs()) {
            FpMultiForm a2(f, n + 1, a.degree());
            for (const auto& [ev, c] : a.terms()) {
                std::vector<int> e2 = ev;
                e2.push_back(0);
                a2.add_term(e2, c);
            }
            hx.set_quadric_coeff(ij.first, ij.second, std::move(a2));
        }
        for (const auto& [j, l] : h.linear_coeffs()) {
            FpMultiForm l2(f, n + 1, l.degree());
            for (const auto& [ev, c] : l.terms()) {
                std::vector<int> e2 = ev;
                e2.push_back(0);
                l2.add_term(e2, c);
            }
            hx.set_linear_coeff(j, std::move(l2));
        }
        hx.set_linear_coeff(n, gs[m]);
        out.push_back(std::move(hx));
    }
    return out;
}

namespace {

// Laurent vector: per source component, a map s-exponent -> coefficient, all
// terms homogeneous of the component's degree.
using Laurent = std::map<int, fp_t>;

struct ChartLift {
    int pole_order;                 // N: the lift is w / s^N (or / t^N)
    std::vector<std::vector<fp_t>> w;  // per source component, coeffs at twist N - e
};

// Section of the realized kernel over one chart whose last coordinate is the
// canonical generator: solve the section system at twist N - e with the last
// block pinned to the monomial s^N (chart 's') or t^N (chart 't').
ChartLift chart_lift(const GradedMap& mx, int e, char chart) {
    const PrimeField& f = mx.field();
    const auto& src = mx.source_degrees();
    const std::size_t last = src.size() - 1;
    long long cap = 4;
    for (int a : src) cap += std::abs(a);
    for (int b : mx.target_degrees()) cap += std::abs(b);
    for (int N = 0; N <= cap; ++N) {
        const int t = N - e;
        auto sm = mx.section_matrix(t);
        std::vector<std::size_t> coff(src.size());
        std::size_t nc = 0;
        for (std::size_t i = 0; i < src.size(); ++i) {
            coff[i] = nc;
            if (src[i] + t >= 0) nc += src[i] + t + 1;
        }
        const std::size_t lw = static_cast<std::size_t>(src[last] + t);  // = N
        // move the pinned block to the right-hand side
        std::vector<fp_t> rhs(sm.rows(), 0);
        const std::size_t pin = coff[last] + (chart == 's' ? 0 : lw);
        for (std::size_t r = 0; r < sm.rows(); ++r) rhs[r] = f.neg(sm.at(r, pin));
        DenseMatrix<PrimeField> a(f, sm.rows(), nc - (lw + 1));
        for (std::size_t r = 0; r < sm.rows(); ++r) {
            std::size_t k = 0;
            for (std::size_t ccol = 0; ccol < nc; ++ccol) {
                if (ccol >= coff[last] && ccol <= coff[last] + lw) continue;
                a.at(r, k++) = sm.at(r, ccol);
            }
        }
        auto sol = solve(std::move(a), std::move(rhs));
        if (!sol) continue;
        ChartLift out;
        out.pole_order = N;
        std::size_t k = 0;
        for (std::size_t i = 0; i < src.size(); ++i) {
            int da = src[i] + t;
            std::vector<fp_t> comp(da >= 0 ? da + 1 : 0, 0);
            if (i == last) {
                comp[chart == 's' ? 0 : lw] = 1;
            } else if (da >= 0) {
                for (int u = 0; u <= da; ++u) comp[u] = (*sol)[k + u];
                k += da + 1;
            }
            out.w.push_back(std::move(comp));
        }
        return out;
    }
    throw internal_error("induced class: no chart lift found (quotient not surjective?)");
}

}  // namespace

ExtensionClass induced_extension_class(const PrimeField& f,
                                       const std::vector<HypersurfaceCombo>& hs0,
                                       const std::vector<FpMultiForm>& gs) {
    if (hs0.empty()) throw input_error("induced_extension_class: empty complete intersection");
    const int e = hs0[0].model().e;
    const RncModel model0(e, hs0[0].model().n);
    GradedMap m0 = ci_normal_map(f, hs0, model0);
    auto gens = kernel_generators(m0);
    if (gens.empty()) throw input_error("induced_extension_class: trivial kernel downstairs");

    auto hsx = realize_extension(hs0, gs);
    const RncModel modelx(e, model0.n + 1);
    GradedMap mx = ci_normal_map(f, hsx, modelx);
    const auto& src0 = m0.source_degrees();

    ChartLift ls = chart_lift(mx, e, 's');
    ChartLift lt = chart_lift(mx, e, 't');
    const int Ns = ls.pole_order, Nt = lt.pole_order;

    // delta_i = ls_i / s^Ns - lt_i / t^Nt on the overlap, a Laurent vector in K0
    std::vector<Laurent> delta(src0.size());
    for (std::size_t i = 0; i < src0.size(); ++i) {
        const int Ds = src0[i] - e + Ns;
        for (int w = 0; w < static_cast<int>(ls.w[i].size()); ++w)
            if (ls.w[i][w]) {
                int sexp = (Ds - w) - Ns;
                delta[i][sexp] = f.add(delta[i].count(sexp) ? delta[i][sexp] : 0, ls.w[i][w]);
            }
        const int Dt = src0[i] - e + Nt;
        for (int w = 0; w < static_cast<int>(lt.w[i].size()); ++w)
            if (lt.w[i][w]) {
                int sexp = Dt - w;  // dividing by t^Nt shifts the t-exponent only
                fp_t cur = delta[i].count(sexp) ? delta[i][sexp] : 0;
                delta[i][sexp] = f.sub(cur, lt.w[i][w]);
            }
        for (auto it = delta[i].begin(); it != delta[i].end();)
            it = it->second == 0 ? delta[i].erase(it) : std::next(it);
    }

    // solve delta = sum_l h_l g_l with h_l Laurent of degree c_l - e,
    // s-exponent in [-Ns, (c_l - e) + Nt]
    struct Unk {
        std::size_t gen;
        int sexp;
    };
    std::vector<Unk> unks;
    for (std::size_t l = 0; l < gens.size(); ++l) {
        const int dl = gens[l].degree - e;
        for (int sx = -Ns; sx <= dl + Nt; ++sx) unks.push_back({l, sx});
    }
    std::map<std::pair<std::size_t, int>, std::size_t> uidx;
    for (std::size_t k = 0; k < unks.size(); ++k) uidx[{unks[k].gen, unks[k].sexp}] = k;

    std::vector<std::vector<fp_t>> rows;
    std::vector<fp_t> rhs;
    for (std::size_t i = 0; i < src0.size(); ++i) {
        // collect achievable s-exponents for this component
        std::map<int, bool> exps;
        for (const auto& [sx, c] : delta[i]) exps[sx] = true;
        for (std::size_t l = 0; l < gens.size(); ++l) {
            const auto& gv = gens[l].comp[i];
            if (gv.degree() < 0 || gv.is_zero()) continue;
            const int dl = gens[l].degree - e;
            for (int w = 0; w <= gv.degree(); ++w) {
                if (!gv.coeff(w)) continue;
                int gsx = gv.degree() - w;
                for (int sx = -Ns; sx <= dl + Nt; ++sx) exps[gsx + sx] = true;
            }
        }
        for (const auto& [target_sx, unused] : exps) {
            (void)unused;
            std::vector<fp_t> row(unks.size(), 0);
            for (std::size_t l = 0; l < gens.size(); ++l) {
                const auto& gv = gens[l].comp[i];
                if (gv.degree() < 0 || gv.is_zero()) continue;
                for (int w = 0; w <= gv.degree(); ++w) {
                    fp_t cf = gv.coeff(w);
                    if (!cf) continue;
                    int gsx = gv.degree() - w;
                    auto it = uidx.find({l, target_sx - gsx});
                    if (it != uidx.end()) row[it->second] = f.add(row[it->second], cf);
                }
            }
            rows.push_back(std::move(row));
            auto dit = delta[i].find(target_sx);
            rhs.push_back(dit == delta[i].end() ? 0 : dit->second);
        }
    }
    DenseMatrix<PrimeField> a(f, rows.size(), unks.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < unks.size(); ++c) a.at(r, c) = rows[r][c];
    auto sol = solve(std::move(a), std::move(rhs));
    if (!sol) throw internal_error("induced class: cocycle solve inconsistent");

    // keep the strictly-negative-bidegree part: s^u t^v with u, v <= -1
    std::vector<int> base;
    std::vector<std::vector<fp_t>> coc;
    for (std::size_t l = 0; l < gens.size(); ++l) {
        const int c = gens[l].degree;
        base.push_back(c);
        const int dl = c - e;
        std::vector<fp_t> comp(dl <= -2 ? static_cast<std::size_t>(-dl) - 1 : 0, 0);
        for (int sx = -Ns; sx <= dl + Nt; ++sx) {
            int tx = dl - sx;
            if (sx <= -1 && tx <= -1) {
                // index j-1 where the monomial is s^{-j} t^{dl+j}
                comp[static_cast<std::size_t>(-sx) - 1] = (*sol)[uidx[{l, sx}]];
            }
        }
        coc.push_back(std::move(comp));
    }
    return ExtensionClass(f, std::move(base), e, std::move(coc));
}

}  // namespace splitkit
