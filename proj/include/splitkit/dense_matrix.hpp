#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "splitkit/errors.hpp"
#include "splitkit/fp.hpp"
#include "splitkit/fp_kernels.hpp"

namespace splitkit {

template <class F>
class DenseMatrix {
  public:
    using elem = typename F::elem;

    DenseMatrix(F field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const F& field() const { return field_; }

    elem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const elem& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    elem* row(std::size_t r) { return a_.data() + r * cols_; }
    const elem* row(std::size_t r) const { return a_.data() + r * cols_; }

    DenseMatrix transposed() const {
        DenseMatrix t(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

  private:
    F field_;
    std::size_t rows_, cols_;
    std::vector<elem> a_;
};

// ---- elimination over F_p --------------------------------------------------

// In-place row echelon; returns pivot columns. reduce_up produces RREF.
inline std::vector<std::size_t> echelon(DenseMatrix<PrimeField>& m, bool reduce_up) {
    const PrimeField f = m.field();
    const auto ker = kernels::select(f.p());
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t piv = nr;
        for (std::size_t i = r; i < nr; ++i)
            if (m.at(i, c) != 0) { piv = i; break; }
        if (piv == nr) continue;
        if (piv != r)
            for (std::size_t j = c; j < nc; ++j) std::swap(m.at(r, j), m.at(piv, j));
        fp_t iv = f.inv(m.at(r, c));
        if (iv != 1) ker.scale(m.row(r) + c, iv, nc - c, f.p());
        for (std::size_t i = reduce_up ? 0 : r + 1; i < nr; ++i) {
            if (i == r) continue;
            fp_t v = m.at(i, c);
            if (v == 0) continue;
            ker.axpy(m.row(i) + c, m.row(r) + c, f.p() - v, nc - c, f.p());
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(DenseMatrix<PrimeField> m) { return echelon(m, false).size(); }

inline std::size_t nullity(const DenseMatrix<PrimeField>& m) { return m.cols() - rank(m); }

// Basis of the right null space (vectors of length cols).
inline std::vector<std::vector<fp_t>> kernel_basis(DenseMatrix<PrimeField> m) {
    const PrimeField f = m.field();
    auto pivots = echelon(m, true);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<fp_t>> basis;
    for (std::size_t free_c = 0; free_c < m.cols(); ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<fp_t> v(m.cols(), 0);
        v[free_c] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = f.neg(m.at(k, free_c));
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of m x = rhs, or nullopt when inconsistent.
inline std::optional<std::vector<fp_t>> solve(DenseMatrix<PrimeField> m, std::vector<fp_t> rhs) {
    const PrimeField f = m.field();
    if (rhs.size() != m.rows()) throw internal_error("solve: rhs size mismatch");
    DenseMatrix<PrimeField> aug(f, m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = rhs[r];
    }
    auto pivots = echelon(aug, true);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<fp_t> x(m.cols(), 0);
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(k, m.cols());
    return x;
}

}  // namespace splitkit
