#pragma once

#include "schurlab/eigen_support.hpp"
#include "schurlab/form.hpp"

namespace schurlab {

enum class GramMode { Coefficient, Complement };

// Hermitian Gram matrix of a real (k,k)-form u.
//
// Coefficient mode: G indexed by k-multi-indices (lexicographic) with
//   u = i^{k²} Σ G_{IJ} e^I ∧ ē^J.
// Complement mode: H indexed by q-multi-indices, q = n-k, with
//   H_{KL} = volume_coefficient(u ∧ i^{q²} e^K ∧ ē^L).
//
// u is non-negative iff G ⪰ 0, and positive iff H ≻ 0.
inline MatrixXec hermitian_gram(const Form& u, GramMode mode) {
    const int n = u.n;
    if (u.p != u.q) throw std::invalid_argument("hermitian_gram: form is not of bidegree (k,k)");
    const int k = u.p;
    if (k > n) throw std::invalid_argument("hermitian_gram: k > n");
    if (!is_real_form(u)) throw std::invalid_argument("hermitian_gram: form is not real");

    if (mode == GramMode::Coefficient) {
        const auto idx = multi_indices(n, k);
        const ExactComplex scale = ExactComplex(1) / i_pow(static_cast<long>(k) * k);
        MatrixXec g(idx.size(), idx.size());
        for (size_t a = 0; a < idx.size(); ++a)
            for (size_t b = 0; b < idx.size(); ++b) g(a, b) = u.coeff(idx[a], idx[b]) * scale;
        if (!is_hermitian_exact(g)) throw std::logic_error("hermitian_gram: G not Hermitian");
        return g;
    }

    const int q = n - k;
    const auto idx = multi_indices(n, q);
    const ExactComplex iq2 = i_pow(static_cast<long>(q) * q);
    MatrixXec h(idx.size(), idx.size());
    for (size_t a = 0; a < idx.size(); ++a) {
        for (size_t b = 0; b < idx.size(); ++b) {
            Form beta(n, q, 0);
            beta.add_term(idx[a], {}, iq2);
            Form betabar(n, 0, q);
            betabar.add_term({}, idx[b], ExactComplex(1));
            h(a, b) = volume_coefficient_complex(wedge(u, wedge(beta, betabar)));
        }
    }
    if (!is_hermitian_exact(h)) throw std::logic_error("hermitian_gram: H not Hermitian");
    return h;
}

inline Eigen::MatrixXcd hermitian_gram_d(const Form& u, GramMode mode) {
    return to_cd(hermitian_gram(u, mode));
}

}  // namespace schurlab
