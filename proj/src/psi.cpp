#include "schurlab/psi.hpp"

#include <stdexcept>

namespace schurlab {

namespace {

// conj(B_{ic}) as a (1,0)-form and conj(A_{ic}) as a (0,1)-form, floats.
struct OneFormCache {
    std::vector<FormD> conj_b;  // index i*N+c
    std::vector<FormD> conj_a;
    int N;

    explicit OneFormCache(const ABFactorization& f) : N(f.N) {
        for (int i = 0; i < f.r; ++i)
            for (int c = 0; c < f.N; ++c) {
                FormD cb(f.n, 1, 0);
                FormD ca(f.n, 0, 1);
                for (int a = 0; a < f.n; ++a) {
                    cb.add_term({a}, {}, std::conj(to_cd(f.b(i, c, a))));
                    ca.add_term({}, {a}, std::conj(to_cd(f.a(i, c, a))));
                }
                conj_b.push_back(std::move(cb));
                conj_a.push_back(std::move(ca));
            }
    }

    const FormD& b(int i, int c) const { return conj_b[static_cast<size_t>(i) * N + c]; }
    const FormD& a(int i, int c) const { return conj_a[static_cast<size_t>(i) * N + c]; }
};

FormD psi_from_cache(const std::vector<int>& rho, int t1, int t2, const std::vector<int>& c,
                     const std::vector<int>& eps, const OneFormCache& cache,
                     const IrrepMatrixSet& irrep, const std::vector<Perm>& perms) {
    const int k = static_cast<int>(rho.size());
    FormD acc = FormD::zero(cache.conj_b.front().n);
    for (const Perm& sigma : perms) {
        const double q = irrep.at(sigma)(t1, t2);  // real orthogonal: conj is itself
        if (q == 0.0) continue;
        FormD prod = FormD::one(cache.conj_b.front().n);
        for (int j = 0; j < k; ++j) {
            const int fiber = rho[static_cast<size_t>(sigma[static_cast<size_t>(j)])];
            const int col = c[static_cast<size_t>(j)];
            prod = wedge(prod, eps[static_cast<size_t>(j)] ? cache.b(fiber, col)
                                                           : cache.a(fiber, col));
            if (prod.is_zero()) break;
        }
        acc += prod * std::complex<double>(q, 0);
    }
    return acc;
}

bool advance(std::vector<int>& tuple, int base) {
    int pos = static_cast<int>(tuple.size()) - 1;
    while (pos >= 0 && tuple[static_cast<size_t>(pos)] == base - 1) {
        tuple[static_cast<size_t>(pos)] = 0;
        --pos;
    }
    if (pos < 0) return false;
    ++tuple[static_cast<size_t>(pos)];
    return true;
}

}  // namespace

FormD psi_form(const std::vector<int>& rho, int t1, int t2, const std::vector<int>& c,
               const std::vector<int>& eps, const ABFactorization& f,
               const IrrepMatrixSet& irrep) {
    if (f.N == 0 || f.r == 0) return FormD::zero(f.n);
    OneFormCache cache(f);
    return psi_from_cache(rho, t1, t2, c, eps, cache, irrep,
                          all_permutations(static_cast<int>(rho.size())));
}

FormD schur_form_via_psi(const Partition& lambda, const ABFactorization& f, int irrep_bound) {
    const int k = lambda.weight();
    const int n = f.n, r = f.r, N = f.N;
    if (k == 0) return FormD::one(n);
    if (N == 0 || r == 0) return FormD::zero(n, std::min(k, n), std::min(k, n));
    const Partition conj_shape = conjugate_partition(lambda, k);
    const IrrepMatrixSet& irrep = young_orthogonal_cached(conj_shape, irrep_bound);
    const auto perms = all_permutations(k);
    OneFormCache cache(f);

    FormD acc = FormD::zero(n, std::min(k, n), std::min(k, n));
    std::vector<int> rho(static_cast<size_t>(k), 0);
    do {
        std::vector<int> c(static_cast<size_t>(k), 0);
        do {
            std::vector<int> eps(static_cast<size_t>(k), 0);
            do {
                int abs_eps = 0;
                for (int e : eps) abs_eps += e;
                for (int t1 = 0; t1 < irrep.dim; ++t1)
                    for (int t2 = 0; t2 < irrep.dim; ++t2) {
                        FormD psi = psi_from_cache(rho, t1, t2, c, eps, cache, irrep, perms);
                        if (psi.is_zero()) continue;
                        FormD sq = wedge(psi, conjugate(psi));
                        if ((abs_eps + k) % 2 != 0) sq = -sq;
                        acc += sq;
                    }
            } while (advance(eps, 2));
        } while (advance(c, N));
    } while (advance(rho, r));

    const double kf = static_cast<double>(factorial(k));
    acc *= scalar_i_pow<std::complex<double>>(static_cast<long>(k) * k) / (kf * kf);
    return acc;
}

bool psi_single_eps_collapse(const Partition& lambda, const ABFactorization& f, int irrep_bound) {
    const int k = lambda.weight();
    if (k == 0 || f.N == 0 || f.r == 0) return true;
    const Partition conj_shape = conjugate_partition(lambda, k);
    const IrrepMatrixSet& irrep = young_orthogonal_cached(conj_shape, irrep_bound);
    const auto perms = all_permutations(k);
    OneFormCache cache(f);

    std::vector<int> rho(static_cast<size_t>(k), 0);
    do {
        std::vector<int> c(static_cast<size_t>(k), 0);
        do {
            std::vector<int> eps(static_cast<size_t>(k), 0);
            do {
                bool all_one = true;
                for (int e : eps) all_one &= (e == 1);
                if (all_one) continue;
                for (int t1 = 0; t1 < irrep.dim; ++t1)
                    for (int t2 = 0; t2 < irrep.dim; ++t2)
                        if (!psi_from_cache(rho, t1, t2, c, eps, cache, irrep, perms).is_zero())
                            return false;
            } while (advance(eps, 2));
        } while (advance(c, f.N));
    } while (advance(rho, f.r));
    return true;
}

}  // namespace schurlab
