#pragma once

#include <optional>
#include <vector>

#include "schurlab/eigen_support.hpp"
#include "schurlab/four_squares.hpp"

namespace schurlab {

// Exact rank by fraction-free (Bareiss) elimination over Gaussian rationals.
inline int exact_rank(MatrixXec m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    int rank = 0;
    Eigen::Index row = 0;
    ExactComplex prev(1);
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index pr = -1;
        for (Eigen::Index i = row; i < rows; ++i)
            if (!m(i, col).is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != row) m.row(pr).swap(m.row(row));
        const ExactComplex pivot = m(row, col);
        for (Eigen::Index i = row + 1; i < rows; ++i) {
            for (Eigen::Index j = col + 1; j < cols; ++j)
                m(i, j) = (pivot * m(i, j) - m(i, col) * m(row, j)) / prev;
            m(i, col) = ExactComplex(0);
        }
        prev = pivot;
        ++row;
        ++rank;
    }
    return rank;
}

// x^H M x for Hermitian M; the value is real by symmetry.
inline Rational hermitian_value(const MatrixXec& m, const VectorXec& x) {
    ExactComplex acc(0);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) acc += x(i).conj() * m(i, j) * x(j);
    if (acc.im != 0) throw std::logic_error("hermitian_value: non-real value");
    return acc.re;
}

struct PsdTerm {
    Rational d;     // > 0
    VectorXec ell;  // unit pivot entry
};

// Exact PSD decision for a Hermitian matrix with a constructive certificate
// either way: M = Σ d ℓℓ^H when PSD, or an exact vector with x^H M x < 0.
struct ExactPsd {
    bool psd = false;
    std::vector<PsdTerm> terms;
    std::optional<VectorXec> negative_witness;

    int rank() const { return static_cast<int>(terms.size()); }
    bool positive_definite(Eigen::Index dim) const {
        return psd && static_cast<Eigen::Index>(terms.size()) == dim;
    }
};

inline ExactPsd exact_psd_decompose(MatrixXec m) {
    if (!is_hermitian_exact(m)) throw std::invalid_argument("exact_psd_decompose: not Hermitian");
    const Eigen::Index n = m.rows();
    ExactPsd out;
    std::vector<bool> active(n, true);
    // Eliminated pivot columns, innermost last; used to lift witnesses back.
    std::vector<std::pair<Eigen::Index, VectorXec>> pivots;

    auto lift_witness = [&](VectorXec x) {
        for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
            ExactComplex dot(0);
            for (Eigen::Index i = 0; i < n; ++i) dot += it->second(i).conj() * x(i);
            x(it->first) = x(it->first) - dot;  // ℓ(p) = 1, x(p) was 0
        }
        out.negative_witness = std::move(x);
        out.psd = false;
    };

    while (true) {
        Eigen::Index pivot = -1;
        Rational best(0);
        for (Eigen::Index i = 0; i < n; ++i) {
            if (!active[i]) continue;
            const ExactComplex& d = m(i, i);
            if (d.im != 0) throw std::logic_error("exact_psd_decompose: non-real diagonal");
            if (d.re < 0) {
                VectorXec x = VectorXec::Constant(n, ExactComplex(0));
                x(i) = ExactComplex(1);
                lift_witness(std::move(x));
                return out;
            }
            if (d.re > best) {
                best = d.re;
                pivot = i;
            }
        }
        if (pivot < 0) {
            // all active diagonals are zero: PSD iff the active block is zero
            for (Eigen::Index i = 0; i < n; ++i) {
                if (!active[i]) continue;
                for (Eigen::Index j = 0; j < n; ++j) {
                    if (!active[j] || m(i, j).is_zero()) continue;
                    VectorXec x = VectorXec::Constant(n, ExactComplex(0));
                    x(i) = ExactComplex(1);
                    x(j) = -m(i, j).conj();  // value -2|m_ij|²
                    lift_witness(std::move(x));
                    return out;
                }
            }
            out.psd = true;
            return out;
        }

        const Rational d = m(pivot, pivot).re;
        VectorXec ell = VectorXec::Constant(n, ExactComplex(0));
        const ExactComplex dinv = ExactComplex(1) / ExactComplex(d);
        for (Eigen::Index i = 0; i < n; ++i)
            if (active[i]) ell(i) = m(i, pivot) * dinv;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (!active[i]) continue;
            for (Eigen::Index j = 0; j < n; ++j)
                if (active[j]) m(i, j) -= ExactComplex(d) * ell(i) * ell(j).conj();
        }
        out.terms.push_back(PsdTerm{d, ell});
        pivots.emplace_back(pivot, ell);
        active[pivot] = false;
    }
}

// Columns w_p with Σ w_p w_p^H = M exactly (M must be PSD).  Weights are folded
// away through four-square decompositions of the pivots.
inline std::vector<VectorXec> unit_weight_rank1(const MatrixXec& m) {
    ExactPsd psd = exact_psd_decompose(m);
    if (!psd.psd) throw std::invalid_argument("unit_weight_rank1: matrix is not PSD");
    std::vector<VectorXec> out;
    for (const auto& term : psd.terms) {
        auto sq = four_square_rational(term.d);
        const ExactComplex g1(sq[0], sq[1]), g2(sq[2], sq[3]);
        if (!g1.is_zero()) out.push_back(term.ell * g1);
        if (!g2.is_zero()) out.push_back(term.ell * g2);
    }
    return out;
}

// Basis of the exact null space (reduced row echelon form).
inline std::vector<VectorXec> exact_kernel(MatrixXec m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    std::vector<Eigen::Index> pivot_col;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index pr = -1;
        for (Eigen::Index i = row; i < rows; ++i)
            if (!m(i, col).is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != row) m.row(pr).swap(m.row(row));
        const ExactComplex inv = ExactComplex(1) / m(row, col);
        for (Eigen::Index j = col; j < cols; ++j) m(row, j) *= inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const ExactComplex f = m(i, col);
            for (Eigen::Index j = col; j < cols; ++j) m(i, j) -= f * m(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<VectorXec> basis;
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    for (Eigen::Index free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        VectorXec v = VectorXec::Constant(cols, ExactComplex(0));
        v(free) = ExactComplex(1);
        for (size_t r = 0; r < pivot_col.size(); ++r) v(pivot_col[r]) = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Exact sup-norm normalization for stored witnesses.
inline VectorXec normalize_sup(VectorXec v) {
    Rational m(0);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        Rational s = v(i).sup_norm();
        if (s > m) m = s;
    }
    if (m != 0) {
        const ExactComplex inv(Rational(1) / m);
        for (Eigen::Index i = 0; i < v.size(); ++i) v(i) *= inv;
    }
    return v;
}

}  // namespace schurlab
