#include "schurlab/extract.hpp"

#include <stdexcept>

#include "schurlab/exact_linalg.hpp"

namespace schurlab {

namespace {

std::vector<int> iota_vec(int size) {
    std::vector<int> v(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) v[static_cast<size_t>(i)] = i;
    return v;
}

bool cross_vanish(const CurvatureTensor& R, const std::vector<int>& u_axes,
                  const std::vector<int>& v_axes) {
    for (int i = 0; i < R.r; ++i)
        for (int j = 0; j < R.r; ++j)
            for (int a : u_axes)
                for (int b : v_axes)
                    if (!R.at(i, j, a, b).is_zero() || !R.at(i, j, b, a).is_zero()) return false;
    return true;
}

}  // namespace

ABFactorization extract_ab_factorization(const CurvatureTensor& R, const SplitSpec& split) {
    R.require_hermitian();
    if (split.kind != SplitSpec::Kind::TypeI)
        throw std::invalid_argument("extract_ab_factorization: type I split required");
    const int n = R.n, r = R.r;
    const auto u_axes = split.indices;
    const auto v_axes = complement_indices(u_axes, n);
    for (int a : u_axes)
        if (a < 0 || a >= n) throw std::invalid_argument("extract_ab_factorization: bad split");
    if (!cross_vanish(R, u_axes, v_axes))
        throw std::invalid_argument(
            "extract_ab_factorization: cross curvature terms do not vanish for this split");

    const auto fibers = iota_vec(r);
    std::vector<VectorXec> b_cols, a_cols;
    if (!u_axes.empty()) {
        // Nakano block over U: M[(iα),(jβ)] = Σ_p B̄_{ipᾱ} B_{jpβ̄}
        b_cols = unit_weight_rank1(nakano_matrix(R, fibers, u_axes));
    }
    if (!v_axes.empty()) {
        // dual Nakano block over V: M'[(jα),(iβ)] = Σ_p A_{jpα} Ā_{ipβ}
        a_cols = unit_weight_rank1(dual_nakano_matrix(R, fibers, v_axes));
    }

    const int N = static_cast<int>(std::max(b_cols.size(), a_cols.size()));
    ABFactorization f(n, r, N);
    for (size_t p = 0; p < b_cols.size(); ++p)
        for (int i = 0; i < r; ++i)
            for (size_t ai = 0; ai < u_axes.size(); ++ai)
                f.b(i, static_cast<int>(p), u_axes[ai]) =
                    b_cols[p](static_cast<Eigen::Index>(i * u_axes.size() + ai)).conj();
    for (size_t p = 0; p < a_cols.size(); ++p)
        for (int j = 0; j < r; ++j)
            for (size_t ai = 0; ai < v_axes.size(); ++ai)
                f.a(j, static_cast<int>(p), v_axes[ai]) =
                    a_cols[p](static_cast<Eigen::Index>(j * v_axes.size() + ai));

    if (!(curvature_from_ab(f) == R))
        throw std::logic_error("extract_ab_factorization: reassembly mismatch");
    return f;
}

ABFactorization extract_type2_factorization(const CurvatureTensor& R, const SplitSpec& split) {
    R.require_hermitian();
    if (split.kind != SplitSpec::Kind::TypeII)
        throw std::invalid_argument("extract_type2_factorization: type II split required");
    const int n = R.n, r = R.r;
    const auto e1 = split.indices;
    const auto e2 = complement_indices(e1, r);
    for (int i : e1)
        if (i < 0 || i >= r) throw std::invalid_argument("extract_type2_factorization: bad split");
    for (int i : e1)
        for (int j : e2)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (!R.at(i, j, a, b).is_zero() || !R.at(j, i, a, b).is_zero())
                        throw std::invalid_argument(
                            "extract_type2_factorization: cross fiber blocks do not vanish");

    SplitSpec all_u{SplitSpec::Kind::TypeI, iota_vec(n)};
    SplitSpec all_v{SplitSpec::Kind::TypeI, {}};
    const ABFactorization f1 =
        e1.empty() ? ABFactorization(n, 0, 0)
                   : extract_ab_factorization(restrict_fibers(R, e1), all_u);
    const ABFactorization f2 =
        e2.empty() ? ABFactorization(n, 0, 0)
                   : extract_ab_factorization(restrict_fibers(R, e2), all_v);

    const int N = std::max(f1.N, f2.N);
    ABFactorization f(n, r, N);
    for (size_t li = 0; li < e1.size(); ++li)
        for (int p = 0; p < f1.N; ++p)
            for (int a = 0; a < n; ++a) f.b(e1[li], p, a) = f1.b(static_cast<int>(li), p, a);
    for (size_t li = 0; li < e2.size(); ++li)
        for (int p = 0; p < f2.N; ++p)
            for (int a = 0; a < n; ++a) f.a(e2[li], p, a) = f2.a(static_cast<int>(li), p, a);

    if (!(curvature_from_ab(f) == R))
        throw std::logic_error("extract_type2_factorization: reassembly mismatch");
    return f;
}

}  // namespace schurlab
