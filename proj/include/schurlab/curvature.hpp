#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "schurlab/eigen_support.hpp"
#include "schurlab/form.hpp"
#include "schurlab/partition.hpp"

namespace schurlab {

// Coefficients R_{i j̄ α β̄} of a Chern curvature at a point, in a unitary
// frame.  Fiber indices i,j in [0,r), base indices α,β in [0,n); all 0-based.
struct CurvatureTensor {
    int n = 0;
    int r = 0;
    std::vector<ExactComplex> entries;

    CurvatureTensor() = default;
    CurvatureTensor(int n_, int r_)
        : n(n_), r(r_), entries(static_cast<size_t>(n_) * n_ * r_ * r_) {}

    size_t idx(int i, int j, int a, int b) const {
        return ((static_cast<size_t>(i) * r + j) * n + a) * n + b;
    }
    ExactComplex& at(int i, int j, int a, int b) { return entries[idx(i, j, a, b)]; }
    const ExactComplex& at(int i, int j, int a, int b) const { return entries[idx(i, j, a, b)]; }

    bool is_hermitian() const;      // R_{i j̄ α β̄} == conj(R_{j ī β ᾱ})
    void require_hermitian() const;
    bool is_zero() const;

    friend bool operator==(const CurvatureTensor& a, const CurvatureTensor& b) {
        return a.n == b.n && a.r == b.r && a.entries == b.entries;
    }
};

// Matrices A (of (1,0)-forms) and B (of (0,1)-forms) with
// R = -B ∧ B̄^T + A ∧ Ā^T.  A_{ipα} is the dz^α coefficient of A_{ip};
// B_{ipᾱ} the dz̄^α coefficient of B_{ip}.
struct ABFactorization {
    int n = 0;
    int r = 0;
    int N = 0;
    std::vector<ExactComplex> A;
    std::vector<ExactComplex> B;

    ABFactorization() = default;
    ABFactorization(int n_, int r_, int N_)
        : n(n_),
          r(r_),
          N(N_),
          A(static_cast<size_t>(r_) * N_ * n_),
          B(static_cast<size_t>(r_) * N_ * n_) {}

    size_t idx(int i, int p, int a) const { return (static_cast<size_t>(i) * N + p) * n + a; }
    ExactComplex& a(int i, int p, int alpha) { return A[idx(i, p, alpha)]; }
    const ExactComplex& a(int i, int p, int alpha) const { return A[idx(i, p, alpha)]; }
    ExactComplex& b(int i, int p, int beta) { return B[idx(i, p, beta)]; }
    const ExactComplex& b(int i, int p, int beta) const { return B[idx(i, p, beta)]; }
};

// Base split (type I: indices span U ⊆ [0,n)) or fiber split (type II:
// indices span E_1 ⊆ [0,r)); the complement spans the partner subspace.
struct SplitSpec {
    enum class Kind { TypeI, TypeII };
    Kind kind = Kind::TypeI;
    std::vector<int> indices;

    friend bool operator==(const SplitSpec& a, const SplitSpec& b) {
        return a.kind == b.kind && a.indices == b.indices;
    }
};

SplitSpec balanced_split(SplitSpec::Kind kind, int n, int r);

// R_{i j̄ α β̄} = Σ_p A_{jpα} Ā_{ipβ} + Σ_p B_{jpβ̄} B̄_{ipᾱ}; Hermitian by
// construction, and the Nakano form of the B part is a sum of |·|².
CurvatureTensor curvature_from_ab(const ABFactorization& f);

// ĉ_0..ĉ_r of X = i R (the 1/2π factor is dropped; Schur forms are
// homogeneous in the ĉ's, so positivity verdicts are unaffected).
std::vector<Form> chern_forms(const CurvatureTensor& R);

// det(ĉ_{λ_i-i+j}) under wedge; real (k,k)-form, identically zero when k > n.
Form schur_form(const Partition& lambda, const CurvatureTensor& R);
Form schur_form(const Partition& lambda, const std::vector<Form>& chern, int n, int r);

// Frame change R̃ = a⁻¹ R a for exact unitary a; Chern forms are invariant.
CurvatureTensor unitary_conjugate_curvature(const CurvatureTensor& R, const MatrixXec& a);

// Flattened matrices: rows p, columns (i,α) flattened as i*n+α.
MatrixXec flattened_a(const ABFactorization& f);
MatrixXec flattened_b(const ABFactorization& f);
std::pair<int, int> flattened_ranks(const ABFactorization& f);  // (rank A, rank B)

// Hermitian form matrices of the positivity definitions, optionally restricted
// to a fiber subset and a base-axis subset (0-based, strictly increasing).
MatrixXec nakano_matrix(const CurvatureTensor& R, const std::vector<int>& fibers,
                        const std::vector<int>& axes);
MatrixXec dual_nakano_matrix(const CurvatureTensor& R, const std::vector<int>& fibers,
                             const std::vector<int>& axes);
MatrixXec nakano_matrix(const CurvatureTensor& R);
MatrixXec dual_nakano_matrix(const CurvatureTensor& R);

// ⟨R(ξ,ξ̄)v, v⟩ = R_{i j̄ α β̄} v_i v̄_j ξ_α ξ̄_β, exact.
Rational griffiths_value(const CurvatureTensor& R, const VectorXec& v, const VectorXec& xi);

// Fiber restriction / block-diagonal direct sum.
CurvatureTensor restrict_fibers(const CurvatureTensor& R, const std::vector<int>& fibers);
CurvatureTensor direct_sum(const CurvatureTensor& a, const CurvatureTensor& b);

std::vector<int> complement_indices(const std::vector<int>& subset, int size);

}  // namespace schurlab
