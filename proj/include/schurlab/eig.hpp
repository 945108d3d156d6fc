#pragma once

#include <Eigen/Eigenvalues>

#include "schurlab/eigen_support.hpp"

namespace schurlab {

// An eigenvalue counts as zero when |λ| <= cutoff_rel * max(1, ||M||_2).
inline constexpr double kDefaultCutoffRel = 1e-9;

struct HermitianEig {
    Eigen::VectorXd values;   // ascending
    Eigen::MatrixXcd vectors;
    double cutoff = 0;

    double min_value() const { return values.size() ? values(0) : 0.0; }
    double max_abs() const {
        double m = 0;
        for (Eigen::Index i = 0; i < values.size(); ++i) m = std::max(m, std::abs(values(i)));
        return m;
    }
    bool positive_definite() const { return values.size() == 0 || min_value() > cutoff; }
    bool positive_semidefinite() const { return values.size() == 0 || min_value() >= -cutoff; }
    Eigen::VectorXcd min_vector() const { return vectors.col(0); }
};

inline HermitianEig hermitian_eig(const Eigen::MatrixXcd& m,
                                  double cutoff_rel = kDefaultCutoffRel) {
    HermitianEig out;
    if (m.rows() == 0) {
        out.cutoff = cutoff_rel;
        return out;
    }
    Eigen::MatrixXcd sym = (m + m.adjoint()) / 2.0;  // strip conversion noise
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
    if (solver.info() != Eigen::Success) throw std::runtime_error("hermitian_eig failed");
    out.values = solver.eigenvalues();
    out.vectors = solver.eigenvectors();
    out.cutoff = cutoff_rel * std::max(1.0, out.max_abs());
    return out;
}

}  // namespace schurlab
