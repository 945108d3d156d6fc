#pragma once

#include "schurlab/curvature.hpp"
#include "schurlab/partition.hpp"
#include "schurlab/young_orthogonal.hpp"

namespace schurlab {

// The (|ε|, k-|ε|)-forms
//   ψ_{ρtcε} = Σ_σ q_{σt} ⋀_j (B̄_{ρ_{σ(j)} c_j})^{ε_j} ∧ (Ā_{ρ_{σ(j)} c_j})^{1-ε_j}
// with q_{σt} = conj(a_t(σ)) taken from the orthogonal representation of the
// conjugate shape λ' (the convention under which the assembled sum reproduces
// the Jacobi-Trudi Schur form).
FormD psi_form(const std::vector<int>& rho, int t1, int t2, const std::vector<int>& c,
               const std::vector<int>& eps, const ABFactorization& f, const IrrepMatrixSet& irrep);

// (1/k!)² i^{k²} Σ_{ρ,t,c,ε} (-1)^{|ε|+k} ψ ∧ ψ̄, in the 2π-free normalization
// of chern_forms/schur_form.
FormD schur_form_via_psi(const Partition& lambda, const ABFactorization& f,
                         int irrep_bound = kDefaultIrrepBound);

// With A = 0, every ψ with ε different from (1,...,1) vanishes identically.
bool psi_single_eps_collapse(const Partition& lambda, const ABFactorization& f,
                             int irrep_bound = kDefaultIrrepBound);

}  // namespace schurlab
