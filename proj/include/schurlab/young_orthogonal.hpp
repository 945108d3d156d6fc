#pragma once

#include <Eigen/Core>
#include <map>

#include "schurlab/partition.hpp"
#include "schurlab/permutation.hpp"

namespace schurlab {

inline constexpr int kDefaultIrrepBound = 5;

// Unitary (real orthogonal) irreducible representation of S_k in Young's
// orthogonal form, indexed by standard tableaux.
struct IrrepMatrixSet {
    Partition lambda;
    int dim = 0;
    std::map<Perm, Eigen::MatrixXd> matrices;  // all k! elements

    const Eigen::MatrixXd& at(const Perm& sigma) const { return matrices.at(sigma); }
    double character(const Perm& sigma) const { return matrices.at(sigma).trace(); }
};

IrrepMatrixSet young_orthogonal_irrep(const Partition& lambda, int bound = kDefaultIrrepBound);

// Shared read-only cache; tables are built once per shape.
const IrrepMatrixSet& young_orthogonal_cached(const Partition& lambda,
                                              int bound = kDefaultIrrepBound);

}  // namespace schurlab
