#pragma once

#include <vector>

#include "schurlab/characters.hpp"
#include "schurlab/form.hpp"
#include "schurlab/partition.hpp"
#include "schurlab/permutation.hpp"
#include "schurlab/schur_poly.hpp"
#include "schurlab/young_orthogonal.hpp"

namespace schurlab {

// Schur polynomial of an r x r matrix through the symmetric-group expansion
//
//   P_λ(B) = (1/k!)² Σ_{σ,τ} Σ_{ρ∈[1,r]^k} (Σ_t q_{σt} q̄_{τt}) B_{ρ_{σ(1)}ρ_{τ(1)}} ⋯
//
// evaluated with the basis-free contraction Σ_t q_{σt} q̄_{τt} = χ(τσ⁻¹).
// The character belongs to the conjugate shape λ': that is the choice under
// which the expansion agrees with the Jacobi-Trudi determinant in the c_i(B)
// (the trivial character reproduces the complete homogeneous polynomial, which
// is the single-column Schur polynomial of the c's).
//
// T is any commutative coefficient ring with T(long) and *, +, -.
template <class T>
T fl_expand(const Partition& lambda, int r, const std::vector<std::vector<T>>& b,
            int irrep_bound = kDefaultIrrepBound) {
    const int k = lambda.weight();
    if (lambda.max_part() > r) throw std::invalid_argument("fl_expand: part exceeds rank");
    if (k > irrep_bound) throw std::invalid_argument("fl_expand: weight exceeds bound");
    if (static_cast<int>(b.size()) != r)
        throw std::invalid_argument("fl_expand: matrix size mismatch");
    if (k == 0) return T(1);

    const Partition conj = conjugate_partition(lambda, k);
    const auto perms = all_permutations(k);

    // character lookup per permutation
    std::vector<long long> chi(perms.size());
    std::map<Perm, size_t> index;
    for (size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], i);
    for (size_t i = 0; i < perms.size(); ++i) chi[i] = mn_character(conj, perms[i]);

    T total(0);
    std::vector<int> rho(static_cast<size_t>(k), 0);
    while (true) {
        for (const Perm& sigma : perms) {
            const Perm sigma_inv = perm_inverse(sigma);
            for (const Perm& tau : perms) {
                const long long weight = chi[index.at(perm_compose(tau, sigma_inv))];
                if (weight == 0) continue;
                T prod(1);
                for (int j = 0; j < k; ++j) {
                    const int row = rho[static_cast<size_t>(sigma[static_cast<size_t>(j)])];
                    const int col = rho[static_cast<size_t>(tau[static_cast<size_t>(j)])];
                    prod = prod * b[static_cast<size_t>(row)][static_cast<size_t>(col)];
                }
                total = total + T(weight) * prod;
            }
        }
        int pos = k - 1;
        while (pos >= 0 && rho[static_cast<size_t>(pos)] == r - 1) {
            rho[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++rho[static_cast<size_t>(pos)];
    }
    const long kf = factorial(k);
    return total / T(kf * kf);
}

// Same expansion over a matrix of commuting (1,1)-forms under wedge.
template <class S>
FormT<S> fl_expand_forms(const Partition& lambda, int r,
                         const std::vector<std::vector<FormT<S>>>& b, int n,
                         int irrep_bound = kDefaultIrrepBound) {
    const int k = lambda.weight();
    if (lambda.max_part() > r) throw std::invalid_argument("fl_expand_forms: part exceeds rank");
    if (k > irrep_bound) throw std::invalid_argument("fl_expand_forms: weight exceeds bound");
    if (k == 0) return FormT<S>::one(n);

    const Partition conj = conjugate_partition(lambda, k);
    const auto perms = all_permutations(k);
    std::map<Perm, long long> chi;
    for (const Perm& p : perms) chi.emplace(p, mn_character(conj, p));

    FormT<S> total = FormT<S>::zero(n);
    std::vector<int> rho(static_cast<size_t>(k), 0);
    while (true) {
        for (const Perm& sigma : perms) {
            const Perm sigma_inv = perm_inverse(sigma);
            for (const Perm& tau : perms) {
                const long long weight = chi.at(perm_compose(tau, sigma_inv));
                if (weight == 0) continue;
                FormT<S> prod = FormT<S>::one(n);
                for (int j = 0; j < k; ++j) {
                    const int row = rho[static_cast<size_t>(sigma[static_cast<size_t>(j)])];
                    const int col = rho[static_cast<size_t>(tau[static_cast<size_t>(j)])];
                    prod = wedge(prod, b[static_cast<size_t>(row)][static_cast<size_t>(col)]);
                }
                total += prod * S(weight);
            }
        }
        int pos = k - 1;
        while (pos >= 0 && rho[static_cast<size_t>(pos)] == r - 1) {
            rho[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++rho[static_cast<size_t>(pos)];
    }
    const long kf = factorial(k);
    return total * (S(1) / S(kf * kf));
}

}  // namespace schurlab
