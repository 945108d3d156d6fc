#pragma once

#include <functional>
#include <vector>

#include "schurlab/partition.hpp"
#include "schurlab/permutation.hpp"
#include "schurlab/rational.hpp"

namespace schurlab {

// Leibniz determinant over any commutative ring given by (mul, zero).
// Entries of mixed grading are fine as long as they commute pairwise.
template <class T, class Mul>
T leibniz_det(const std::vector<std::vector<T>>& m, Mul mul, T zero) {
    const int k = static_cast<int>(m.size());
    T acc = std::move(zero);
    if (k == 0) return acc;
    for (const Perm& sigma : all_permutations(k)) {
        T prod = m[0][static_cast<size_t>(sigma[0])];
        for (int i = 1; i < k; ++i) prod = mul(prod, m[static_cast<size_t>(i)][static_cast<size_t>(sigma[static_cast<size_t>(i)])]);
        if (perm_sign(sigma) > 0)
            acc = acc + prod;
        else
            acc = acc - prod;
    }
    return acc;
}

// det(c_{λ_i - i + j})_{1<=i,j<=k} with c_0 = one and c_i = zero outside [0,r].
// c must hold c_0..c_r; works identically over exact scalars, floats, and
// even-degree forms under wedge.  For λ_1 > r the first row is entirely out of
// range and the determinant vanishes, matching s_{λ'} in r variables.
template <class T, class Mul>
T jacobi_trudi(const Partition& lambda, int r, const std::vector<T>& c, Mul mul, const T& one,
               const T& zero) {
    if (static_cast<int>(c.size()) != r + 1)
        throw std::invalid_argument("jacobi_trudi: need c_0..c_r");
    const int k = lambda.weight();
    if (k == 0) return one;
    std::vector<std::vector<T>> m(static_cast<size_t>(k), std::vector<T>(static_cast<size_t>(k), zero));
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
            const int e = lambda.part(i) - i + j;
            if (e < 0 || e > r) continue;
            m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = (e == 0) ? one : c[static_cast<size_t>(e)];
        }
    }
    return leibniz_det(m, mul, zero);
}

template <class T>
T jacobi_trudi(const Partition& lambda, int r, const std::vector<T>& c) {
    return jacobi_trudi(lambda, r, c, std::multiplies<T>(), T(1), T(0));
}

// Elementary symmetric polynomials e_0..e_r of the given values.
template <class T>
std::vector<T> elementary_symmetric(const std::vector<T>& x) {
    std::vector<T> e(x.size() + 1, T(0));
    e[0] = T(1);
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = std::min(i + 1, x.size()); j >= 1; --j) e[j] = e[j] + x[i] * e[j - 1];
    return e;
}

// Sum over semistandard tableaux of the given shape with entries in [1, vars]
// of the content monomial.  Always defined; the bialternant fallback.
Rational ssyt_monomial_sum(const Partition& shape, const std::vector<Rational>& x);

// s_{λ'}(x_1..x_r) as alternant / Vandermonde when the points are distinct,
// by tableau enumeration otherwise.
Rational schur_bialternant(const Partition& lambda_conj, const std::vector<Rational>& x);

}  // namespace schurlab
