#include "splitkit/graded_map.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "splitkit/errors.hpp"
#include "splitkit/poly_fp.hpp"

namespace splitkit {

GradedMap::GradedMap(PrimeField field, std::vector<int> source_degrees,
                     std::vector<int> target_degrees, std::vector<std::vector<FpForm>> entries)
    : field_(field), src_(std::move(source_degrees)), tgt_(std::move(target_degrees)),
      e_(std::move(entries)) {
    if (e_.size() != tgt_.size()) throw input_error("GradedMap: row count mismatch");
    for (std::size_t j = 0; j < tgt_.size(); ++j) {
        if (e_[j].size() != src_.size()) throw input_error("GradedMap: column count mismatch");
        for (std::size_t i = 0; i < src_.size(); ++i) {
            int d = tgt_[j] - src_[i];
            if (e_[j][i].degree() != d)
                throw input_error("GradedMap: entry (" + std::to_string(j) + "," +
                                  std::to_string(i) + ") has degree " +
                                  std::to_string(e_[j][i].degree()) + ", expected " +
                                  std::to_string(d));
            if (d < 0 && !e_[j][i].is_zero())
                throw input_error("GradedMap: negative-degree entry must be zero");
        }
    }
}

GradedMap::GradedMap(PrimeField field, std::vector<int> source_degrees,
                     std::vector<int> target_degrees)
    : field_(field), src_(std::move(source_degrees)), tgt_(std::move(target_degrees)) {
    for (int b : tgt_) {
        std::vector<FpForm> row;
        row.reserve(src_.size());
        for (int a : src_) row.emplace_back(field_, b - a);
        e_.push_back(std::move(row));
    }
}

void GradedMap::set_entry(std::size_t j, std::size_t i, FpForm f) {
    if (f.degree() != tgt_.at(j) - src_.at(i)) throw input_error("set_entry: wrong degree");
    e_[j][i] = std::move(f);
}

GradedMap GradedMap::dual() const {
    std::vector<int> ds, dt;
    for (int b : tgt_) ds.push_back(-b);
    for (int a : src_) dt.push_back(-a);
    std::vector<std::vector<FpForm>> ent;
    for (std::size_t i = 0; i < src_.size(); ++i) {
        std::vector<FpForm> row;
        for (std::size_t j = 0; j < tgt_.size(); ++j) row.push_back(e_[j][i]);
        ent.push_back(std::move(row));
    }
    return GradedMap(field_, std::move(ds), std::move(dt), std::move(ent));
}

GradedMap GradedMap::twist(int t) const {
    std::vector<int> ds = src_, dt = tgt_;
    for (int& a : ds) a += t;
    for (int& b : dt) b += t;
    return GradedMap(field_, std::move(ds), std::move(dt), e_);
}

GradedMap GradedMap::stack(const GradedMap& other) const {
    if (!(field_ == other.field_) || src_ != other.src_)
        throw input_error("stack: source mismatch");
    std::vector<int> dt = tgt_;
    dt.insert(dt.end(), other.tgt_.begin(), other.tgt_.end());
    auto ent = e_;
    ent.insert(ent.end(), other.e_.begin(), other.e_.end());
    return GradedMap(field_, src_, std::move(dt), std::move(ent));
}

DenseMatrix<PrimeField> GradedMap::section_matrix(int t) const {
    std::vector<std::size_t> coff(src_.size()), roff(tgt_.size());
    std::size_t nc = 0, nr = 0;
    for (std::size_t i = 0; i < src_.size(); ++i) {
        coff[i] = nc;
        if (src_[i] + t >= 0) nc += src_[i] + t + 1;
    }
    for (std::size_t j = 0; j < tgt_.size(); ++j) {
        roff[j] = nr;
        if (tgt_[j] + t >= 0) nr += tgt_[j] + t + 1;
    }
    DenseMatrix<PrimeField> m(field_, nr, nc);
    for (std::size_t i = 0; i < src_.size(); ++i) {
        int da = src_[i] + t;
        if (da < 0) continue;
        for (std::size_t j = 0; j < tgt_.size(); ++j) {
            int db = tgt_[j] + t;
            if (db < 0) continue;
            const FpForm& f = e_[j][i];
            if (f.degree() < 0 || f.is_zero()) continue;
            // monomial s^{da-u} t^u maps to sum_w coeff(w) at row index u+w
            for (int u = 0; u <= da; ++u)
                for (int w = 0; w <= f.degree(); ++w) {
                    fp_t c = f.coeff(w);
                    if (c) m.at(roff[j] + u + w, coff[i] + u) = c;
                }
        }
    }
    return m;
}

std::size_t generic_rank(const GradedMap& m) {
    const PrimeField& f = m.field();
    std::vector<std::vector<polyfp::Poly>> p;
    p.reserve(m.target_degrees().size());
    for (std::size_t j = 0; j < m.target_degrees().size(); ++j) {
        std::vector<polyfp::Poly> row;
        row.reserve(m.source_degrees().size());
        for (std::size_t i = 0; i < m.source_degrees().size(); ++i) {
            const FpForm& e = m.entry(j, i);
            polyfp::Poly q;
            if (e.degree() >= 0) {
                q = e.coeffs();  // dehomogenize at s = 1: index is the t-exponent
                polyfp::trim(q);
            }
            row.push_back(std::move(q));
        }
        p.push_back(std::move(row));
    }
    return polyfp::poly_matrix_rank(f, std::move(p));
}

std::size_t sampled_generic_rank(const GradedMap& m, Rng& rng, int points) {
    const PrimeField& f = m.field();
    std::size_t best = 0;
    // over tiny fields sample every rational point instead of three draws
    std::vector<std::pair<fp_t, fp_t>> pts;
    if (f.p() <= 13) {
        for (fp_t t = 0; t < f.p(); ++t) pts.push_back({1, t});
        pts.push_back({0, 1});
    } else {
        for (int k = 0; k < points; ++k) pts.push_back({1, f.random(rng)});
    }
    for (auto [s0, t0] : pts) {
        DenseMatrix<PrimeField> a(f, m.target_degrees().size(), m.source_degrees().size());
        for (std::size_t j = 0; j < m.target_degrees().size(); ++j)
            for (std::size_t i = 0; i < m.source_degrees().size(); ++i)
                a.at(j, i) = m.entry(j, i).eval(s0, t0);
        best = std::max(best, rank(std::move(a)));
    }
    return best;
}

namespace {

long long twist_cap(const GradedMap& m) {
    long long cap = 2;
    for (int a : m.source_degrees()) cap += std::abs(a);
    for (int b : m.target_degrees()) cap += std::abs(b);
    return cap;
}

// measured section counts k(t) -> multiset of kernel degrees; verifies that
// the reconstruction reproduces every measured value
SplittingType reconstruct_from_counts(const std::map<int, std::size_t>& ks, std::size_t rk,
                                      int t0) {
    std::vector<int> cs;
    std::size_t gprev = 0;
    for (auto it = ks.begin(); it != ks.end(); ++it) {
        int t = it->first;
        if (t == t0) continue;
        std::size_t k = it->second, kprev = ks.at(t - 1);
        if (k < kprev) throw internal_error("twist scan: section count decreased");
        std::size_t g = k - kprev;
        if (g < gprev) throw internal_error("twist scan: non-monotone growth");
        for (std::size_t x = 0; x < g - gprev; ++x) cs.push_back(-t);
        gprev = g;
    }
    if (cs.size() != rk) throw internal_error("twist scan: rank mismatch in reconstruction");
    for (const auto& [t, k] : ks) {
        long long pred = 0;
        for (int c : cs) pred += std::max(0, c + t + 1);
        if (pred != static_cast<long long>(k))
            throw internal_error("twist scan: reconstruction fails at twist " + std::to_string(t));
    }
    return SplittingType(std::move(cs));
}

}  // namespace

SplittingType kernel_splitting(const GradedMap& m) {
    const std::size_t rk = m.source_degrees().size() - generic_rank(m);
    if (rk == 0) return SplittingType(std::vector<int>{});
    int maxa = *std::max_element(m.source_degrees().begin(), m.source_degrees().end());
    const int t0 = -maxa - 1;  // every kernel degree is <= max source degree
    const long long cap = twist_cap(m);
    std::map<int, std::size_t> ks;
    ks[t0] = 0;
    std::size_t g = 0;
    int t = t0;
    while (g < rk) {
        ++t;
        if (t - t0 > cap) throw internal_error("twist scan cap exceeded");
        std::size_t k = nullity(m.section_matrix(t));
        ks[t] = k;
        g = k - ks.at(t - 1);
    }
    return reconstruct_from_counts(ks, rk, t0);
}

std::vector<KernelGenerator> kernel_generators(const GradedMap& m) {
    const PrimeField& f = m.field();
    SplittingType ks = kernel_splitting(m);
    std::vector<KernelGenerator> gens;
    if (ks.empty()) return gens;
    std::map<int, int, std::greater<int>> mult;
    for (int c : ks.degrees()) mult[c]++;

    const auto& src = m.source_degrees();
    auto section_coords = [&](const std::vector<FpForm>& comp, int t) {
        // flatten a kernel vector of forms (deg src[i] + t) into section coordinates
        std::vector<fp_t> v;
        for (std::size_t i = 0; i < src.size(); ++i) {
            int da = src[i] + t;
            if (da < 0) continue;
            for (int w = 0; w <= da; ++w) v.push_back(comp[i].coeff(w));
        }
        return v;
    };

    for (const auto& [c, need] : mult) {
        const int t = -c;
        auto sm = m.section_matrix(t);
        auto nb = kernel_basis(std::move(sm));
        // span of shifts of the generators already found
        std::vector<std::vector<fp_t>> rows;
        for (const auto& g : gens) {
            int dshift = g.degree - c;
            for (int mexp = 0; mexp <= dshift; ++mexp) {
                // multiply by the monomial s^{dshift-mexp} t^{mexp}
                std::vector<FpForm> comp;
                for (std::size_t i = 0; i < src.size(); ++i) {
                    FpForm shifted(f, src[i] + t);
                    if (src[i] + t >= 0) {
                        for (int w = 0; w <= g.comp[i].degree(); ++w) {
                            fp_t x = g.comp[i].coeff(w);
                            if (x) shifted.set_coeff(w + mexp, x);
                        }
                    }
                    comp.push_back(std::move(shifted));
                }
                rows.push_back(section_coords(comp, t));
            }
        }
        std::size_t width = rows.empty() ? (nb.empty() ? 0 : nb[0].size()) : rows[0].size();
        // echelon basis of the shift span, kept as (row, pivot) pairs
        std::vector<std::pair<std::vector<fp_t>, std::size_t>> basis;
        auto reduce = [&](std::vector<fp_t> v) {
            for (const auto& [br, bp] : basis)
                if (v[bp]) {
                    fp_t c2 = f.mul(v[bp], f.inv(br[bp]));
                    const auto ker = kernels::select(f.p());
                    ker.axpy(v.data(), br.data(), f.p() - c2, v.size(), f.p());
                }
            return v;
        };
        auto pivot_of = [&](const std::vector<fp_t>& v) -> std::size_t {
            for (std::size_t i = 0; i < v.size(); ++i)
                if (v[i]) return i;
            return width;
        };
        for (auto& r : rows) {
            auto v = reduce(std::move(r));
            std::size_t pv = pivot_of(v);
            if (pv < width) basis.push_back({std::move(v), pv});
        }
        int got = 0;
        for (auto& nv : nb) {
            if (got == need) break;
            auto v = reduce(nv);
            std::size_t pv = pivot_of(v);
            if (pv == width) continue;
            basis.push_back({v, pv});
            KernelGenerator g;
            g.degree = c;
            std::size_t off = 0;
            for (std::size_t i = 0; i < src.size(); ++i) {
                int da = src[i] + t;
                FpForm comp(f, da);
                if (da >= 0) {
                    for (int w = 0; w <= da; ++w) comp.set_coeff(w, nv[off + w]);
                    off += da + 1;
                }
                g.comp.push_back(std::move(comp));
            }
            gens.push_back(std::move(g));
            ++got;
        }
        if (got != need) throw internal_error("kernel_generators: missing generators in degree " +
                                              std::to_string(c));
    }
    return gens;
}

std::vector<FpForm> maximal_minors(const GradedMap& m) {
    const PrimeField& f = m.field();
    const auto& src = m.source_degrees();
    const auto& tgt = m.target_degrees();
    const std::size_t k = tgt.size(), nc = src.size();
    if (k > nc) throw input_error("maximal_minors: more rows than columns");
    if (nc > 30) throw capacity_error("maximal_minors: too many columns");
    // level r holds the minors of the first r rows for every r-subset of columns
    std::map<std::uint32_t, FpForm> lvl;
    lvl.emplace(0u, FpForm(f, 0, {f.one()}));
    long long tdeg = 0;
    for (std::size_t r = 0; r < k; ++r) {
        tdeg += tgt[r];
        std::map<std::uint32_t, FpForm> nxt;
        for (const auto& [mask, sub] : lvl) {
            // extend the subset by one column; Laplace along row r
            for (std::size_t cidx = 0; cidx < nc; ++cidx) {
                std::uint32_t bit = 1u << cidx;
                if (mask & bit) continue;
                std::uint32_t nm = mask | bit;
                long long cdeg = 0;
                for (std::size_t i = 0; i < nc; ++i)
                    if (nm & (1u << i)) cdeg += src[i];
                int mdeg = static_cast<int>(tdeg - cdeg);
                auto it = nxt.find(nm);
                if (it == nxt.end())
                    it = nxt.emplace(nm, FpForm(f, std::max(mdeg, -1))).first;
                const FpForm& e = m.entry(r, cidx);
                if (e.degree() < 0 || e.is_zero() || sub.is_zero()) continue;
                // sign: position of cidx within nm
                int pos = 0;
                for (std::size_t i = 0; i < cidx; ++i)
                    if (nm & (1u << i)) ++pos;
                FpForm term = e * sub;
                if ((static_cast<int>(r) + pos) % 2) term.scale_in(f.p() - 1);
                if (it->second.degree() != term.degree()) {
                    if (it->second.is_zero())
                        it->second = FpForm(f, term.degree());
                    else
                        throw internal_error("minor degree bookkeeping");
                }
                it->second.add_in(term);
            }
        }
        lvl = std::move(nxt);
    }
    std::vector<FpForm> out;
    out.reserve(lvl.size());
    for (auto& [mask, v] : lvl) out.push_back(std::move(v));
    return out;
}

bool surjective_everywhere(const GradedMap& m) {
    if (m.target_degrees().size() > m.source_degrees().size())
        throw input_error("surjective_everywhere: target rank exceeds source rank");
    const PrimeField& f = m.field();
    std::vector<FpForm> nonzero;
    // incremental gcd with early exit once it is a constant
    FpForm g(f, 0);
    bool have = false;
    for (auto& minor : maximal_minors(m)) {
        if (minor.is_zero()) continue;
        if (!have) {
            std::vector<FpForm> one{minor};
            g = gcd_set(f, one);
            have = true;
        } else {
            std::vector<FpForm> two{g, minor};
            g = gcd_set(f, two);
        }
        if (is_unit(g)) return true;
    }
    return false;
}

GradedMap random_hom(const PrimeField& field, const BundleSum& source, int d, Rng& rng) {
    std::vector<std::vector<FpForm>> row(1);
    for (int a : source.degrees()) {
        int deg = d - a;
        row[0].push_back(deg >= 0 ? FpForm::random(field, deg, rng) : FpForm(field, deg));
    }
    return GradedMap(field, source.degrees(), {d}, std::move(row));
}

double balanced_kernel_rate(const PrimeField& field, const BundleSum& source, int d, int trials,
                            Rng& rng) {
    int ok = 0;
    for (int i = 0; i < trials; ++i) {
        auto m = random_hom(field, source, d, rng);
        auto ks = kernel_splitting(m);
        if (!ks.empty() && is_balanced(ks)) ++ok;
        if (ks.empty()) ++ok;  // rank-0 kernel counts as trivially balanced
    }
    return static_cast<double>(ok) / trials;
}

}  // namespace splitkit
