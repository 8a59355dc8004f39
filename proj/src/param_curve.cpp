#include "splitkit/param_curve.hpp"

#include <algorithm>
#include <string>

#include "splitkit/errors.hpp"

namespace splitkit {

SplittingType normal_via_jacobian(const ParamCurve<PrimeField>& c) {
    const PrimeField& f = c.field;
    if (c.e % f.p() == 0)
        throw input_error("normal_via_jacobian: characteristic divides the curve degree");
    if (!is_immersion(c)) throw input_error("normal_via_jacobian: ramified parametrization");
    // dual route: kernel of the transposed Jacobian on sections, then negate
    // and shift back
    std::vector<int> src(c.n + 1, 0);
    std::vector<int> tgt{c.e - 1, c.e - 1};
    std::vector<std::vector<FpForm>> ent(2);
    for (int i = 0; i <= c.n; ++i) {
        ent[0].push_back(c.comps[i].deriv_s());
        ent[1].push_back(c.comps[i].deriv_t());
    }
    GradedMap m(f, std::move(src), std::move(tgt), std::move(ent));
    SplittingType k = kernel_splitting(m);
    std::vector<int> out;
    for (int x : k.degrees()) out.push_back(c.e - x);
    return SplittingType(std::move(out));
}

std::vector<int> Presentation::gen_degrees() const {
    std::vector<int> d;
    for (const auto& g : gens) d.push_back(g.degree());
    return d;
}

std::vector<int> Presentation::row_degrees() const {
    std::vector<int> out;
    for (const auto& row : syz) {
        int s = -1;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i].is_zero()) continue;
            int cand = row[i].degree() + gens[i].degree();
            if (s < 0) s = cand;
            if (cand != s) throw input_error("Presentation: inhomogeneous syzygy row");
        }
        if (s < 0) throw input_error("Presentation: zero syzygy row");
        out.push_back(s);
    }
    return out;
}

void Presentation::validate(const ParamCurve<PrimeField>& c) const {
    const PrimeField& f = c.field;
    for (const auto& g : gens) {
        if (g.nvars() != c.n + 1) throw input_error("Presentation: generator arity");
        if (!g.restrict_to(c.comps).is_zero())
            throw input_error("Presentation: generator does not vanish on the curve");
    }
    auto sr = row_degrees();
    for (std::size_t r = 0; r < syz.size(); ++r) {
        if (syz[r].size() != gens.size()) throw input_error("Presentation: syzygy row arity");
        FpMultiForm acc(f, c.n + 1, sr[r]);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (syz[r][i].is_zero()) continue;
            acc.add_in(syz[r][i] * gens[i]);
        }
        if (!acc.is_zero())
            throw input_error("Presentation: syzygy identity fails in row " + std::to_string(r));
    }
}

GradedMap normal_via_presentation(const ParamCurve<PrimeField>& c, const Presentation& p,
                                  const std::vector<HypersurfaceOnGens>& stacked) {
    const PrimeField& f = c.field;
    p.validate(c);
    auto dg = p.gen_degrees();
    auto sr = p.row_degrees();
    std::vector<int> src, tgt;
    for (int d : dg) src.push_back(c.e * d);
    for (int s : sr) tgt.push_back(c.e * s);
    std::vector<std::vector<FpForm>> ent;
    for (std::size_t r = 0; r < p.syz.size(); ++r) {
        std::vector<FpForm> row;
        for (std::size_t i = 0; i < p.gens.size(); ++i) {
            int deg = tgt[static_cast<int>(r)] - src[i];
            if (p.syz[r][i].is_zero()) {
                row.emplace_back(f, deg);
            } else {
                auto rf = p.syz[r][i].restrict_to(c.comps);
                if (rf.degree() != deg) throw input_error("Presentation: degree bookkeeping");
                row.push_back(std::move(rf));
            }
        }
        ent.push_back(std::move(row));
    }
    for (const auto& h : stacked) {
        if (h.coeffs.size() != p.gens.size())
            throw input_error("stacked hypersurface: one coefficient per generator");
        tgt.push_back(c.e * h.degree);
        std::vector<FpForm> row;
        for (std::size_t i = 0; i < p.gens.size(); ++i) {
            int deg = c.e * h.degree - src[i];
            if (h.coeffs[i].is_zero()) {
                row.emplace_back(f, deg);
            } else {
                if (h.coeffs[i].degree() != h.degree - dg[i])
                    throw input_error("stacked hypersurface: coefficient degree mismatch");
                auto rf = h.coeffs[i].restrict_to(c.comps);
                if (rf.degree() != deg) throw input_error("stacked hypersurface: degree bookkeeping");
                row.push_back(std::move(rf));
            }
        }
        ent.push_back(std::move(row));
    }
    return GradedMap(f, std::move(src), std::move(tgt), std::move(ent));
}

namespace detail {

std::vector<std::vector<int>> monomials_of_degree(int nvars, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(nvars, 0);
    struct Rec {
        int nvars;
        std::vector<std::vector<int>>& out;
        std::vector<int>& cur;
        void go(int i, int left) {
            if (i == nvars - 1) {
                cur[i] = left;
                out.push_back(cur);
                return;
            }
            for (int k = left; k >= 0; --k) {
                cur[i] = k;
                go(i + 1, left - k);
            }
            cur[i] = 0;
        }
    } rec{nvars, out, cur};
    rec.go(0, d);
    return out;
}

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

template <class F>
void check_monomial_cap(int nvars, int d) {
    long long b = binom(nvars - 1 + d, d);
    if (b > kMonomialCap)
        throw capacity_error("monomial space dimension " + std::to_string(b) + " exceeds cap " +
                             std::to_string(kMonomialCap));
}

// restriction of every degree-d monomial to the curve, built degree by degree
template <class F>
std::vector<BiForm<F>> monomial_restrictions(const ParamCurve<F>& c,
                                             const std::vector<std::vector<int>>& monos) {
    const F& f = c.field;
    std::map<std::vector<int>, BiForm<F>> memo;
    std::vector<int> zero(c.n + 1, 0);
    memo.emplace(zero, BiForm<F>(f, 0, {f.one()}));
    std::vector<BiForm<F>> out;
    out.reserve(monos.size());
    for (const auto& ev : monos) {
        // walk down to a memoized ancestor, then multiply back up
        std::vector<std::vector<int>> stack;
        std::vector<int> cur = ev;
        while (!memo.count(cur)) {
            int i = 0;
            while (cur[i] == 0) ++i;
            stack.push_back(cur);
            cur[i] -= 1;
        }
        while (!stack.empty()) {
            const auto& nxt = stack.back();
            int i = 0;
            while (nxt[i] == cur[i]) ++i;
            auto r = memo.at(cur) * c.comps[i];
            memo.emplace(nxt, std::move(r));
            cur = nxt;
            stack.pop_back();
        }
        out.push_back(memo.at(ev));
    }
    return out;
}

}  // namespace detail

template <class F>
long long h0_ideal(const ParamCurve<F>& c, int d) {
    if (d < 1) throw input_error("h0_ideal: d >= 1 required");
    detail::check_monomial_cap<F>(c.n + 1, d);
    const F& f = c.field;
    auto monos = detail::monomials_of_degree(c.n + 1, d);
    auto rs = detail::monomial_restrictions(c, monos);
    DenseMatrix<F> m(f, d * c.e + 1, monos.size());
    for (std::size_t col = 0; col < monos.size(); ++col)
        for (int w = 0; w <= d * c.e; ++w) m.at(w, col) = rs[col].coeff(w);
    return static_cast<long long>(nullity(m));
}

template <class F>
long long h0_ideal_sq(const ParamCurve<F>& c, int d) {
    if (d < 2) throw input_error("h0_ideal_sq: d >= 2 required");
    detail::check_monomial_cap<F>(c.n + 1, d);
    const F& f = c.field;
    auto monos = detail::monomials_of_degree(c.n + 1, d);
    auto monos_lo = detail::monomials_of_degree(c.n + 1, d - 1);
    auto rs = detail::monomial_restrictions(c, monos);
    std::map<std::vector<int>, std::size_t> lo_index;
    for (std::size_t i = 0; i < monos_lo.size(); ++i) lo_index[monos_lo[i]] = i;
    auto rs_lo = detail::monomial_restrictions(c, monos_lo);

    const int rows_f = d * c.e + 1;
    const int rows_p = (d - 1) * c.e + 1;
    DenseMatrix<F> m(f, rows_f + (c.n + 1) * rows_p, monos.size());
    for (std::size_t col = 0; col < monos.size(); ++col) {
        for (int w = 0; w < rows_f; ++w) m.at(w, col) = rs[col].coeff(w);
        const auto& ev = monos[col];
        for (int i = 0; i <= c.n; ++i) {
            if (ev[i] == 0) continue;
            auto coeff = f.from_int(ev[i]);
            if (f.is_zero(coeff)) continue;
            std::vector<int> e2 = ev;
            e2[i] -= 1;
            const auto& r = rs_lo[lo_index.at(e2)];
            for (int w = 0; w < rows_p; ++w)
                m.at(rows_f + i * rows_p + w, col) = f.mul(coeff, r.coeff(w));
        }
    }
    return static_cast<long long>(nullity(m));
}

template <class F>
long long chain_double_conditions(const F& field, int n, int e, int d) {
    if (e > n + 1) throw input_error("chain_double_conditions: e <= n+1 required");
    if (d < 1) throw input_error("chain_double_conditions: d >= 1 required");
    detail::check_monomial_cap<F>(n + 1, d);
    auto monos = detail::monomials_of_degree(n + 1, d);
    std::map<std::vector<int>, std::size_t> idx;
    for (std::size_t i = 0; i < monos.size(); ++i) idx[monos[i]] = i;
    std::vector<std::vector<typename F::elem>> rows;
    auto unit_row = [&](const std::vector<int>& ev) {
        std::vector<typename F::elem> r(monos.size(), field.zero());
        r[idx.at(ev)] = field.one();
        rows.push_back(std::move(r));
    };
    const int nlines = std::min(e, n);
    for (int i = 1; i <= nlines; ++i) {
        for (int j = 0; j <= d; ++j) {
            std::vector<int> ev(n + 1, 0);
            ev[i - 1] = j;
            ev[i] = d - j;
            unit_row(ev);
        }
        for (int m = 0; m <= n; ++m) {
            if (m == i - 1 || m == i) continue;
            for (int j = 0; j <= d - 1; ++j) {
                std::vector<int> ev(n + 1, 0);
                ev[m] = 1;
                ev[i - 1] = j;
                ev[i] = d - 1 - j;
                unit_row(ev);
            }
        }
    }
    if (e == n + 1) {
        // the modified last line x_1 = x_3 = ... = x_{n-1} = x_0 - x_2 = 0,
        // parametrized by x_0 = x_2 = u, x_n = w: the hypersurface and all its
        // partials vanish identically in (u, w)
        auto pure = [&](int i, int j, int k) {
            std::vector<int> ev(n + 1, 0);
            ev[0] += i;
            ev[2] += j;
            ev[n] += k;
            return ev;
        };
        for (int a = 0; a <= d; ++a) {  // value: coefficient of u^a w^{d-a}
            std::vector<typename F::elem> r(monos.size(), field.zero());
            for (int i = 0; i <= a; ++i)
                r[idx.at(pure(i, a - i, d - a))] = field.add(r[idx.at(pure(i, a - i, d - a))],
                                                             field.one());
            rows.push_back(std::move(r));
        }
        for (int m = 0; m <= n; ++m) {  // partial in x_m, coefficient of u^a w^{d-1-a}
            for (int a = 0; a <= d - 1; ++a) {
                std::vector<typename F::elem> r(monos.size(), field.zero());
                if (m != 0 && m != 2 && m != n) {
                    for (int i = 0; i <= a; ++i) {
                        std::vector<int> ev = pure(i, a - i, d - 1 - a);
                        ev[m] += 1;
                        r[idx.at(ev)] = field.add(r[idx.at(ev)], field.one());
                    }
                } else {
                    for (int i = 0; i <= d; ++i)
                        for (int j = 0; j <= d - i; ++j) {
                            int k = d - i - j;
                            int em = (m == 0) ? i : (m == 2) ? j : k;
                            if (em == 0) continue;
                            int ud = i + j - ((m == 0 || m == 2) ? 1 : 0);
                            int wd = k - (m == n ? 1 : 0);
                            if (ud == a && wd == d - 1 - a) {
                                auto ev = pure(i, j, k);
                                r[idx.at(ev)] = field.add(r[idx.at(ev)], field.from_int(em));
                            }
                        }
                }
                bool any = false;
                for (const auto& x : r)
                    if (!field.is_zero(x)) any = true;
                if (any) rows.push_back(std::move(r));
            }
        }
    }
    DenseMatrix<F> m(field, rows.size(), monos.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t cix = 0; cix < monos.size(); ++cix) m.at(r, cix) = rows[r][cix];
    return static_cast<long long>(rank(m));
}

PhiResult phi_surjective(const ParamCurve<PrimeField>& c, int d) {
    SplittingType normal = normal_via_jacobian(c);
    const long long ed = static_cast<long long>(c.e) * d;
    long long target = 0;
    for (int a : normal.degrees()) {
        if (a > ed)
            throw input_error("phi_surjective: normal summand degree exceeds the twist");
        target += ed - a + 1;
    }
    long long image = h0_ideal(c, d) - h0_ideal_sq(c, d);
    return {image, target, image == target};
}

ParamCurve<PrimeField> random_curve(const PrimeField& f, int n, int e, Rng& rng) {
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<FpForm> cs;
        for (int i = 0; i <= n; ++i) cs.push_back(FpForm::random(f, e, rng));
        try {
            ParamCurve<PrimeField> c(f, n, e, std::move(cs));
            if (is_immersion(c)) return c;
        } catch (const input_error&) {
            continue;
        }
    }
    throw input_error("random_curve: no base-point-free unramified sample in 32 attempts");
}

template long long h0_ideal<PrimeField>(const ParamCurve<PrimeField>&, int);
template long long h0_ideal<RationalField>(const ParamCurve<RationalField>&, int);
template long long h0_ideal_sq<PrimeField>(const ParamCurve<PrimeField>&, int);
template long long h0_ideal_sq<RationalField>(const ParamCurve<RationalField>&, int);
template long long chain_double_conditions<PrimeField>(const PrimeField&, int, int, int);
template long long chain_double_conditions<RationalField>(const RationalField&, int, int, int);

}  // namespace splitkit
