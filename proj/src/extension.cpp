#include "splitkit/extension.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "splitkit/errors.hpp"

namespace splitkit {

namespace {

std::size_t h1_dim(int c) { return c <= -2 ? static_cast<std::size_t>(-c) - 1 : 0; }

}  // namespace

ExtensionClass::ExtensionClass(PrimeField f, std::vector<int> base_degrees, int d,
                               std::vector<std::vector<fp_t>> cocycle_coeffs)
    : field(f), base(std::move(base_degrees)), top_degree(d), cocycle(std::move(cocycle_coeffs)) {
    if (base.empty()) throw input_error("ExtensionClass: empty base");
    if (cocycle.size() != base.size())
        throw input_error("ExtensionClass: one cocycle component per base summand required");
    for (std::size_t i = 0; i < base.size(); ++i)
        if (cocycle[i].size() != h1_dim(base[i] - top_degree))
            throw input_error("ExtensionClass: component " + std::to_string(i) +
                              " has unsupported cocycle support");
}

ExtensionClass ExtensionClass::zero(PrimeField f, const std::vector<int>& base_degrees, int d) {
    std::vector<std::vector<fp_t>> cc;
    for (int a : base_degrees) cc.emplace_back(h1_dim(a - d), 0);
    return ExtensionClass(f, base_degrees, d, std::move(cc));
}

ExtensionClass ExtensionClass::random(PrimeField f, const std::vector<int>& base_degrees, int d,
                                      Rng& rng) {
    std::vector<std::vector<fp_t>> cc;
    for (int a : base_degrees) {
        std::vector<fp_t> v(h1_dim(a - d));
        for (auto& x : v) x = f.random(rng);
        cc.push_back(std::move(v));
    }
    return ExtensionClass(f, base_degrees, d, std::move(cc));
}

SplittingType extension_splitting(const ExtensionClass& x) {
    const PrimeField& f = x.field;
    const int d = x.top_degree;
    const int r = static_cast<int>(x.base.size()) + 1;
    int t0 = -std::max(*std::max_element(x.base.begin(), x.base.end()), d) - 1;
    long long cap = std::abs(d) + 2;
    for (int a : x.base) cap += std::abs(a);

    std::map<int, std::size_t> ks;
    ks[t0] = 0;
    std::vector<int> cs;
    std::size_t gprev = 0;
    int t = t0;
    while (static_cast<int>(gprev) < r) {
        ++t;
        if (t - t0 > cap) throw internal_error("extension twist scan cap exceeded");
        long long h0E = 0;
        for (int a : x.base) h0E += std::max(0, a + t + 1);
        const int dim_src = std::max(0, d + t + 1);  // sections of O(d+t): s^{d+t-x} t^x
        std::size_t nul;
        if (dim_src == 0) {
            nul = 0;
        } else {
            // connecting map into the twisted cohomology of E: rows indexed by
            // Laurent monomials s^u t^v, u,v <= -1, u+v = a_i + t
            std::size_t nrows = 0;
            for (int a : x.base) nrows += h1_dim(a + t);
            if (nrows == 0) {
                nul = static_cast<std::size_t>(dim_src);
            } else {
                DenseMatrix<PrimeField> m(f, nrows, dim_src);
                std::size_t roff = 0;
                for (std::size_t i = 0; i < x.base.size(); ++i) {
                    const int a = x.base[i];
                    const std::size_t hd = h1_dim(a + t);
                    if (hd == 0) continue;
                    // cocycle term s^{-j} t^{a-d+j} times monomial s^{d+t-w} t^w lands
                    // on s^{d+t-w-j} t^{a-d+j+w}; keep it when both exponents <= -1
                    for (std::size_t jj = 0; jj < x.cocycle[i].size(); ++jj) {
                        fp_t cf = x.cocycle[i][jj];
                        if (!cf) continue;
                        int j = static_cast<int>(jj) + 1;
                        for (int w = 0; w < dim_src; ++w) {
                            int u = d + t - w - j;
                            int v = a - d + j + w;
                            if (u <= -1 && v <= -1) {
                                // row index within block i: u runs a+t+1 .. -1
                                std::size_t row = roff + static_cast<std::size_t>(u - (a + t + 1));
                                m.at(row, w) = f.add(m.at(row, w), cf);
                            }
                        }
                    }
                    roff += hd;
                }
                nul = nullity(m);
            }
        }
        std::size_t k = static_cast<std::size_t>(h0E) + nul;
        ks[t] = k;
        std::size_t g = k - ks.at(t - 1);
        if (g < gprev) throw internal_error("extension scan: non-monotone growth");
        for (std::size_t q = 0; q < g - gprev; ++q) cs.push_back(-t);
        gprev = g;
    }
    SplittingType out{cs};
    // exactness bookkeeping: rank and degree of the middle term
    long long want_deg = d;
    for (int a : x.base) want_deg += a;
    if (out.rank() != r || out.degree() != want_deg)
        throw internal_error("extension splitting violates rank/degree conservation");
    for (const auto& [tt, k] : ks) {
        long long pred = 0;
        for (int c : out.degrees()) pred += std::max(0, c + tt + 1);
        if (pred != static_cast<long long>(k))
            throw internal_error("extension splitting reconstruction fails at twist " +
                                 std::to_string(tt));
    }
    return out;
}

}  // namespace splitkit
