#include "schurlab/curvature.hpp"

#include <stdexcept>

#include "schurlab/exact_linalg.hpp"
#include "schurlab/schur_poly.hpp"

namespace schurlab {

bool CurvatureTensor::is_hermitian() const {
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (at(i, j, a, b) != at(j, i, b, a).conj()) return false;
    return true;
}

void CurvatureTensor::require_hermitian() const {
    if (!is_hermitian()) throw std::invalid_argument("curvature: Hermitian symmetry violated");
}

bool CurvatureTensor::is_zero() const {
    for (const auto& e : entries)
        if (!e.is_zero()) return false;
    return true;
}

SplitSpec balanced_split(SplitSpec::Kind kind, int n, int r) {
    SplitSpec s;
    s.kind = kind;
    const int size = kind == SplitSpec::Kind::TypeI ? n : r;
    const int take = (size + 1) / 2;
    for (int i = 0; i < take; ++i) s.indices.push_back(i);
    return s;
}

std::vector<int> complement_indices(const std::vector<int>& subset, int size) {
    std::vector<int> out;
    size_t k = 0;
    for (int i = 0; i < size; ++i) {
        if (k < subset.size() && subset[k] == i) {
            ++k;
        } else {
            out.push_back(i);
        }
    }
    return out;
}

CurvatureTensor curvature_from_ab(const ABFactorization& f) {
    CurvatureTensor R(f.n, f.r);
    for (int i = 0; i < f.r; ++i)
        for (int j = 0; j < f.r; ++j)
            for (int a = 0; a < f.n; ++a)
                for (int b = 0; b < f.n; ++b) {
                    ExactComplex acc(0);
                    for (int p = 0; p < f.N; ++p) {
                        acc += f.a(j, p, a) * f.a(i, p, b).conj();
                        acc += f.b(j, p, b) * f.b(i, p, a).conj();
                    }
                    R.at(i, j, a, b) = std::move(acc);
                }
    return R;
}

namespace {

Form entry_form(const CurvatureTensor& R, int row_j, int col_i) {
    Form f(R.n, 1, 1);
    const ExactComplex unit_i(Rational(0), Rational(1));
    for (int a = 0; a < R.n; ++a)
        for (int b = 0; b < R.n; ++b) f.add_term({a}, {b}, unit_i * R.at(col_i, row_j, a, b));
    return f;
}

}  // namespace

std::vector<Form> chern_forms(const CurvatureTensor& R) {
    R.require_hermitian();
    const int n = R.n, r = R.r;
    std::vector<std::vector<Form>> x(static_cast<size_t>(r), std::vector<Form>());
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < r; ++i) x[static_cast<size_t>(j)].push_back(entry_form(R, j, i));

    std::vector<Form> c;
    c.push_back(Form::one(n));
    auto mul = [](const Form& a, const Form& b) { return wedge(a, b); };
    for (int k = 1; k <= r; ++k) {
        Form ck = Form::zero(n, std::min(k, n), std::min(k, n));
        for (const MultiIndex& subset : multi_indices(r, k)) {
            std::vector<std::vector<Form>> minor(static_cast<size_t>(k),
                                                 std::vector<Form>(static_cast<size_t>(k)));
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b)
                    minor[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                        x[static_cast<size_t>(subset[static_cast<size_t>(a)])]
                         [static_cast<size_t>(subset[static_cast<size_t>(b)])];
            ck += leibniz_det(minor, mul, Form::zero(n));
        }
        c.push_back(std::move(ck));
    }
    return c;
}

Form schur_form(const Partition& lambda, const std::vector<Form>& chern, int n, int r) {
    auto mul = [](const Form& a, const Form& b) { return wedge(a, b); };
    return jacobi_trudi(lambda, r, chern, mul, Form::one(n), Form::zero(n));
}

Form schur_form(const Partition& lambda, const CurvatureTensor& R) {
    return schur_form(lambda, chern_forms(R), R.n, R.r);
}

CurvatureTensor unitary_conjugate_curvature(const CurvatureTensor& R, const MatrixXec& a) {
    if (a.rows() != R.r || a.cols() != R.r)
        throw std::invalid_argument("unitary_conjugate_curvature: size mismatch");
    if (!is_unitary_exact(a))
        throw std::invalid_argument("unitary_conjugate_curvature: matrix is not exactly unitary");
    CurvatureTensor out(R.n, R.r);
    for (int i = 0; i < R.r; ++i)
        for (int j = 0; j < R.r; ++j)
            for (int al = 0; al < R.n; ++al)
                for (int be = 0; be < R.n; ++be) {
                    ExactComplex acc(0);
                    for (int k = 0; k < R.r; ++k)
                        for (int l = 0; l < R.r; ++l)
                            acc += a(l, i) * a(k, j).conj() * R.at(l, k, al, be);
                    out.at(i, j, al, be) = std::move(acc);
                }
    return out;
}

MatrixXec flattened_a(const ABFactorization& f) {
    MatrixXec m(f.N, static_cast<Eigen::Index>(f.r) * f.n);
    for (int p = 0; p < f.N; ++p)
        for (int i = 0; i < f.r; ++i)
            for (int al = 0; al < f.n; ++al) m(p, i * f.n + al) = f.a(i, p, al);
    return m;
}

MatrixXec flattened_b(const ABFactorization& f) {
    MatrixXec m(f.N, static_cast<Eigen::Index>(f.r) * f.n);
    for (int p = 0; p < f.N; ++p)
        for (int i = 0; i < f.r; ++i)
            for (int al = 0; al < f.n; ++al) m(p, i * f.n + al) = f.b(i, p, al);
    return m;
}

std::pair<int, int> flattened_ranks(const ABFactorization& f) {
    return {exact_rank(flattened_a(f)), exact_rank(flattened_b(f))};
}

MatrixXec nakano_matrix(const CurvatureTensor& R, const std::vector<int>& fibers,
                        const std::vector<int>& axes) {
    const Eigen::Index dim = static_cast<Eigen::Index>(fibers.size()) * axes.size();
    MatrixXec m(dim, dim);
    for (size_t fi = 0; fi < fibers.size(); ++fi)
        for (size_t ai = 0; ai < axes.size(); ++ai)
            for (size_t fj = 0; fj < fibers.size(); ++fj)
                for (size_t bj = 0; bj < axes.size(); ++bj)
                    m(static_cast<Eigen::Index>(fi * axes.size() + ai),
                      static_cast<Eigen::Index>(fj * axes.size() + bj)) =
                        R.at(fibers[fi], fibers[fj], axes[ai], axes[bj]);
    return m;
}

MatrixXec dual_nakano_matrix(const CurvatureTensor& R, const std::vector<int>& fibers,
                             const std::vector<int>& axes) {
    const Eigen::Index dim = static_cast<Eigen::Index>(fibers.size()) * axes.size();
    MatrixXec m(dim, dim);
    for (size_t fj = 0; fj < fibers.size(); ++fj)
        for (size_t aj = 0; aj < axes.size(); ++aj)
            for (size_t fi = 0; fi < fibers.size(); ++fi)
                for (size_t bi = 0; bi < axes.size(); ++bi)
                    m(static_cast<Eigen::Index>(fj * axes.size() + aj),
                      static_cast<Eigen::Index>(fi * axes.size() + bi)) =
                        R.at(fibers[fi], fibers[fj], axes[aj], axes[bi]);
    return m;
}

namespace {

std::vector<int> iota_vec(int size) {
    std::vector<int> v(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) v[static_cast<size_t>(i)] = i;
    return v;
}

}  // namespace

MatrixXec nakano_matrix(const CurvatureTensor& R) {
    return nakano_matrix(R, iota_vec(R.r), iota_vec(R.n));
}

MatrixXec dual_nakano_matrix(const CurvatureTensor& R) {
    return dual_nakano_matrix(R, iota_vec(R.r), iota_vec(R.n));
}

Rational griffiths_value(const CurvatureTensor& R, const VectorXec& v, const VectorXec& xi) {
    if (v.size() != R.r || xi.size() != R.n)
        throw std::invalid_argument("griffiths_value: size mismatch");
    ExactComplex acc(0);
    for (int i = 0; i < R.r; ++i)
        for (int j = 0; j < R.r; ++j)
            for (int a = 0; a < R.n; ++a)
                for (int b = 0; b < R.n; ++b)
                    acc += R.at(i, j, a, b) * v(i) * v(j).conj() * xi(a) * xi(b).conj();
    if (acc.im != 0) throw std::logic_error("griffiths_value: non-real value");
    return acc.re;
}

CurvatureTensor restrict_fibers(const CurvatureTensor& R, const std::vector<int>& fibers) {
    CurvatureTensor out(R.n, static_cast<int>(fibers.size()));
    for (size_t i = 0; i < fibers.size(); ++i)
        for (size_t j = 0; j < fibers.size(); ++j)
            for (int a = 0; a < R.n; ++a)
                for (int b = 0; b < R.n; ++b)
                    out.at(static_cast<int>(i), static_cast<int>(j), a, b) =
                        R.at(fibers[i], fibers[j], a, b);
    return out;
}

CurvatureTensor direct_sum(const CurvatureTensor& a, const CurvatureTensor& b) {
    if (a.n != b.n) throw std::invalid_argument("direct_sum: base dimension mismatch");
    CurvatureTensor out(a.n, a.r + b.r);
    for (int i = 0; i < a.r; ++i)
        for (int j = 0; j < a.r; ++j)
            for (int al = 0; al < a.n; ++al)
                for (int be = 0; be < a.n; ++be) out.at(i, j, al, be) = a.at(i, j, al, be);
    for (int i = 0; i < b.r; ++i)
        for (int j = 0; j < b.r; ++j)
            for (int al = 0; al < a.n; ++al)
                for (int be = 0; be < a.n; ++be)
                    out.at(a.r + i, a.r + j, al, be) = b.at(i, j, al, be);
    return out;
}

}  // namespace schurlab
