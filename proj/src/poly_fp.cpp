#include "splitkit/poly_fp.hpp"

#include "splitkit/errors.hpp"
#include "splitkit/fp_kernels.hpp"

namespace splitkit::polyfp {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

bool is_zero(const Poly& a) {
    for (fp_t x : a)
        if (x) return false;
    return true;
}

Poly mul(const PrimeField& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    const auto ker = kernels::select(f.p());
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i]) ker.axpy(r.data() + i, b.data(), a[i], b.size(), f.p());
    return r;
}

Poly sub(const PrimeField& f, const Poly& a, const Poly& b) {
    Poly r = a;
    if (r.size() < b.size()) r.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
    trim(r);
    return r;
}

Poly div_exact(const PrimeField& f, const Poly& a, const Poly& b) {
    Poly r = a, d = b;
    trim(r);
    trim(d);
    if (d.empty()) throw internal_error("polynomial division by zero");
    if (r.empty()) return {};
    if (r.size() < d.size()) throw internal_error("inexact polynomial division");
    Poly q(r.size() - d.size() + 1, 0);
    fp_t iv = f.inv(d.back());
    while (!r.empty() && r.size() >= d.size()) {
        fp_t c = f.mul(r.back(), iv);
        std::size_t off = r.size() - d.size();
        q[off] = c;
        for (std::size_t i = 0; i < d.size(); ++i) r[off + i] = f.sub(r[off + i], f.mul(c, d[i]));
        trim(r);
    }
    if (!r.empty()) throw internal_error("inexact polynomial division");
    return q;
}

std::size_t poly_matrix_rank(const PrimeField& f, std::vector<std::vector<Poly>> m) {
    const std::size_t nr = m.size();
    if (nr == 0) return 0;
    const std::size_t nc = m[0].size();
    Poly prev{1};
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t piv = nr;
        for (std::size_t i = r; i < nr; ++i) {
            trim(m[i][c]);
            if (!m[i][c].empty()) { piv = i; break; }
        }
        if (piv == nr) continue;
        if (piv != r) m[r].swap(m[piv]);
        for (std::size_t i = r + 1; i < nr; ++i) {
            for (std::size_t j = c + 1; j < nc; ++j) {
                Poly t = sub(f, mul(f, m[i][j], m[r][c]), mul(f, m[i][c], m[r][j]));
                m[i][j] = t.empty() ? Poly{} : div_exact(f, t, prev);
            }
            m[i][c].clear();
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

}  // namespace splitkit::polyfp
