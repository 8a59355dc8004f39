#include "splitkit/rational.hpp"

#include <string>

namespace splitkit {

namespace {

void check_capacity(const DenseMatrix<RationalField>& m) {
    if (m.rows() > kRationalDim || m.cols() > kRationalDim)
        throw capacity_error("rational matrix " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + " exceeds " +
                             std::to_string(kRationalDim) +
                             "; use a prime field for large eliminations");
}

struct BareissResult {
    std::vector<std::vector<mpz_class>> m;  // echelon form, integer entries
    std::vector<std::size_t> pivots;        // pivot columns, one per leading row
};

// One-step fraction-free elimination with row pivoting. Entries of the working
// matrix remain minors of the scaled input, so the divisions are exact.
BareissResult bareiss(const DenseMatrix<RationalField>& in) {
    check_capacity(in);
    const std::size_t nr = in.rows(), nc = in.cols();
    std::vector<std::vector<mpz_class>> m(nr, std::vector<mpz_class>(nc));
    for (std::size_t r = 0; r < nr; ++r) {
        mpz_class lcm = 1;
        for (std::size_t c = 0; c < nc; ++c) {
            const mpq_class& q = in.at(r, c);
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        }
        for (std::size_t c = 0; c < nc; ++c) {
            const mpq_class& q = in.at(r, c);
            m[r][c] = q.get_num() * (lcm / q.get_den());
        }
    }
    BareissResult out;
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t piv = nr;
        for (std::size_t i = r; i < nr; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv == nr) continue;
        if (piv != r) m[r].swap(m[piv]);
        for (std::size_t i = r + 1; i < nr; ++i) {
            for (std::size_t j = c + 1; j < nc; ++j) {
                mpz_class t = m[i][j] * m[r][c] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        out.pivots.push_back(c);
        ++r;
    }
    out.m = std::move(m);
    return out;
}

}  // namespace

std::size_t rank(const DenseMatrix<RationalField>& m) { return bareiss(m).pivots.size(); }

std::size_t nullity(const DenseMatrix<RationalField>& m) { return m.cols() - rank(m); }

std::vector<std::vector<mpq_class>> kernel_basis(const DenseMatrix<RationalField>& m) {
    auto e = bareiss(m);
    const std::size_t nc = m.cols(), npiv = e.pivots.size();
    std::vector<bool> is_pivot(nc, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::vector<mpq_class>> basis;
    for (std::size_t fc = 0; fc < nc; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<mpq_class> v(nc, mpq_class(0));
        v[fc] = 1;
        // back-substitute through the integer echelon rows
        for (std::size_t k = npiv; k-- > 0;) {
            std::size_t pc = e.pivots[k];
            mpq_class acc(0);
            for (std::size_t j = pc + 1; j < nc; ++j)
                if (sgn(v[j]) != 0 && e.m[k][j] != 0) acc += mpq_class(e.m[k][j]) * v[j];
            v[pc] = -acc / mpq_class(e.m[k][pc]);
            v[pc].canonicalize();
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace splitkit
