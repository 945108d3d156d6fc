#pragma once

#include <Eigen/Core>
#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include "schurlab/exact_complex.hpp"

namespace Eigen {

template <>
struct NumTraits<schurlab::ExactComplex> {
    using Real = schurlab::Rational;
    using NonInteger = schurlab::ExactComplex;
    using Literal = schurlab::ExactComplex;
    using Nested = schurlab::ExactComplex;
    enum {
        IsComplex = 1,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 120,
    };
    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};

}  // namespace Eigen

namespace schurlab {

// Note: Eigen matrices of bare Rational break on products (boost's converting
// constructors are not SFINAE-safe against Eigen expression types); ExactComplex
// is shielded by the one-user-conversion rule, so it is the exact matrix scalar.
using MatrixXec = Eigen::Matrix<ExactComplex, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXec = Eigen::Matrix<ExactComplex, Eigen::Dynamic, 1>;

inline MatrixXec adjoint_of(const MatrixXec& m) {
    MatrixXec a(m.cols(), m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) a(j, i) = m(i, j).conj();
    return a;
}

inline bool is_hermitian_exact(const MatrixXec& m) {
    if (m.rows() != m.cols()) return false;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = i; j < m.cols(); ++j)
            if (m(i, j) != m(j, i).conj()) return false;
    return true;
}

inline Eigen::MatrixXcd to_cd(const MatrixXec& m) {
    Eigen::MatrixXcd d(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) d(i, j) = to_cd(m(i, j));
    return d;
}

inline Eigen::VectorXcd to_cd(const VectorXec& v) {
    Eigen::VectorXcd d(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) d(i) = to_cd(v(i));
    return d;
}

// a * a^H == I, entrywise exact.
inline bool is_unitary_exact(const MatrixXec& a) {
    if (a.rows() != a.cols()) return false;
    MatrixXec p = a * adjoint_of(a);
    for (Eigen::Index i = 0; i < p.rows(); ++i)
        for (Eigen::Index j = 0; j < p.cols(); ++j)
            if (p(i, j) != (i == j ? ExactComplex(1) : ExactComplex(0))) return false;
    return true;
}

}  // namespace schurlab
