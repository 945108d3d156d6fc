#include "schurlab/positivity.hpp"

#include <algorithm>
#include <stdexcept>

#include "schurlab/exact_linalg.hpp"
#include "schurlab/rng.hpp"

namespace schurlab {

const char* to_string(PosLevel level) {
    switch (level) {
        case PosLevel::Positive: return "positive";
        case PosLevel::NonNegativeDegenerate: return "nonnegative-degenerate";
        case PosLevel::NotNonNegative: return "not-nonnegative";
        case PosLevel::WeaklyPositiveSampled: return "weakly-positive-sampled";
        default: return "weak-counterexample";
    }
}

Rational pairing_value(const Form& u, const Form& beta) {
    if (beta.q != 0) throw std::invalid_argument("pairing_value: beta must be a (q,0)-form");
    const long q = beta.p;
    Form scaled = beta;
    scaled *= i_pow(q * q);
    return volume_coefficient(wedge(u, wedge(scaled, conjugate(beta)))).tau;
}

namespace {

Form form_from_vector(const VectorXec& v, const std::vector<MultiIndex>& idx, int n, int deg) {
    Form out(n, deg, 0);
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out.add_term(idx[static_cast<size_t>(i)], {}, v(i));
    return out;
}

// witness (q,0)-form from a Gram direction x with x^H H x < 0: the pairing
// Σ H_KL b_K b̄_L equals x^H H x at b = conj(x).
Form witness_from_gram_direction(const VectorXec& x, const std::vector<MultiIndex>& idx, int n,
                                 int q) {
    VectorXec b(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) b(i) = x(i).conj();
    return form_from_vector(normalize_sup(b), idx, n, q);
}

}  // namespace

PositivityVerdict is_positive(const Form& u, double cutoff_rel) {
    const int n = u.n;
    if (u.p != u.q) throw std::invalid_argument("is_positive: form is not of bidegree (k,k)");
    const int q = n - u.p;
    const MatrixXec h = hermitian_gram(u, GramMode::Complement);
    const auto eig = hermitian_eig(to_cd(h), cutoff_rel);

    PositivityVerdict out;
    out.margin = eig.min_value();
    const ExactPsd psd = exact_psd_decompose(h);
    if (psd.positive_definite(h.rows())) {
        out.level = PosLevel::Positive;
        return out;
    }
    const auto idx = multi_indices(n, q);
    if (psd.psd) {
        out.level = PosLevel::NonNegativeDegenerate;
        return out;
    }
    out.level = PosLevel::NotNonNegative;
    out.witness = witness_from_gram_direction(*psd.negative_witness, idx, n, q);
    out.witness_value = pairing_value(u, *out.witness);
    if (!(out.witness_value < 0))
        throw std::logic_error("is_positive: witness does not evaluate negative");
    return out;
}

std::pair<PositivityVerdict, std::optional<NonnegDecomposition>> is_nonnegative(
    const Form& u, double cutoff_rel) {
    const int n = u.n;
    if (u.p != u.q) throw std::invalid_argument("is_nonnegative: form is not of bidegree (k,k)");
    const int k = u.p;
    const MatrixXec g = hermitian_gram(u, GramMode::Coefficient);
    const ExactPsd psd = exact_psd_decompose(g);
    if (!psd.psd) {
        // Not expressible as Σ i^{k²} α∧ᾱ; the complement Gram then fails as
        // well, and its witness is the (q,0)-form the verdict must carry.
        PositivityVerdict out = is_positive(u, cutoff_rel);
        if (out.level != PosLevel::NotNonNegative)
            throw std::logic_error("is_nonnegative: Gram equivalence violated");
        return {std::move(out), std::nullopt};
    }
    NonnegDecomposition dec;
    const auto idx = multi_indices(n, k);
    Form reassembled = Form::zero(n, k, k);
    const ExactComplex ik2 = i_pow(static_cast<long>(k) * k);
    for (const auto& term : psd.terms) {
        NonnegDecomposition::Term t;
        t.weight = term.d;
        t.alpha = form_from_vector(term.ell, idx, n, k);
        reassembled += wedge(t.alpha, conjugate(t.alpha)) * (ik2 * ExactComplex(term.d));
        dec.terms.push_back(std::move(t));
    }
    if (!(reassembled == u)) throw std::logic_error("is_nonnegative: reassembly mismatch");
    PositivityVerdict out = is_positive(u, cutoff_rel);
    if (out.level == PosLevel::NotNonNegative)
        throw std::logic_error("is_nonnegative: Gram equivalence violated");
    return {std::move(out), std::move(dec)};
}

namespace {

Eigen::VectorXcd random_unit_vec(int dim, RngStream& rng) {
    Eigen::VectorXcd v(dim);
    for (int i = 0; i < dim; ++i) v(i) = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const double norm = v.norm();
    return norm == 0 ? Eigen::VectorXcd::Unit(dim, 0) : Eigen::VectorXcd(v / norm);
}

struct WeakSearch {
    const Form& u;
    int n, k, q;
    std::vector<MultiIndex> idx;  // q-multi-indices
    Eigen::MatrixXcd h;

    explicit WeakSearch(const Form& form)
        : u(form), n(form.n), k(form.p), q(form.n - form.p), idx(multi_indices(form.n, q)) {
        h = hermitian_gram_d(u, GramMode::Complement);
    }

    Eigen::VectorXcd plucker(const Eigen::MatrixXcd& rows) const {
        Eigen::VectorXcd b(idx.size());
        for (size_t s = 0; s < idx.size(); ++s) {
            Eigen::MatrixXcd minor(q, q);
            for (int i = 0; i < q; ++i)
                for (int j = 0; j < q; ++j) minor(i, j) = rows(i, idx[s][static_cast<size_t>(j)]);
            b(static_cast<Eigen::Index>(s)) = minor.determinant();
        }
        return b;
    }

    // Rayleigh-normalized pairing φ(β)/|β|²; β degenerates to zero along unit
    // rows with dependent directions, so the raw pairing alone is not a
    // meaningful margin.  NaN for degenerate configurations.
    double value(const Eigen::MatrixXcd& rows) const {
        const Eigen::VectorXcd b = plucker(rows);
        const double norm2 = b.squaredNorm();
        if (norm2 < 1e-280) return std::numeric_limits<double>::quiet_NaN();
        return (b.transpose() * h * b.conjugate())(0).real() / norm2;
    }

    // cof[s][a]: derivative of the s-th Plücker coordinate by rows(slot,a)
    Eigen::MatrixXcd cofactors(const Eigen::MatrixXcd& rows, int slot) const {
        Eigen::MatrixXcd cof = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(idx.size()), n);
        for (size_t s = 0; s < idx.size(); ++s) {
            for (size_t t = 0; t < idx[s].size(); ++t) {
                const int axis = idx[s][t];
                Eigen::MatrixXcd minor(q - 1, q - 1);
                int mi = 0;
                for (int i = 0; i < q; ++i) {
                    if (i == slot) continue;
                    int mj = 0;
                    for (size_t j = 0; j < idx[s].size(); ++j) {
                        if (j == t) continue;
                        minor(mi, mj) = rows(i, idx[s][j]);
                        ++mj;
                    }
                    ++mi;
                }
                const double sign = ((slot + static_cast<int>(t)) % 2 == 0) ? 1.0 : -1.0;
                cof(static_cast<Eigen::Index>(s), axis) =
                    sign * (q > 1 ? minor.determinant() : std::complex<double>(1, 0));
            }
        }
        return cof;
    }
};

// Smallest generalized eigenvector of (Q, N) over the range of the PSD metric
// N, in the x-pairs-with-x̄ convention shared by the quadratic forms here.
std::optional<Eigen::VectorXcd> generalized_min_direction(const Eigen::MatrixXcd& qm,
                                                          const Eigen::MatrixXcd& nm) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> en(nm);
    const Eigen::VectorXd sv = en.eigenvalues();
    const double smax = sv.size() ? sv.maxCoeff() : 0.0;
    if (!(smax > 0)) return std::nullopt;
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > 1e-12 * smax) keep.push_back(i);
    Eigen::MatrixXcd w(nm.rows(), static_cast<Eigen::Index>(keep.size()));
    for (size_t j = 0; j < keep.size(); ++j)
        w.col(static_cast<Eigen::Index>(j)) =
            en.eigenvectors().col(keep[j]) / std::sqrt(sv(keep[j]));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> em(w.adjoint() * qm * w);
    if (em.info() != Eigen::Success) return std::nullopt;
    const Eigen::VectorXcd x = w * em.eigenvectors().col(0);
    const double norm = x.norm();
    if (!(norm > 0)) return std::nullopt;
    return Eigen::VectorXcd(x / norm);
}

}  // namespace

PositivityVerdict is_weakly_positive(const Form& u, const SearchBudget& budget) {
    const int n = u.n;
    if (u.p != u.q) throw std::invalid_argument("is_weakly_positive: form is not of bidegree (k,k)");
    if (!is_real_form(u)) throw std::invalid_argument("is_weakly_positive: form is not real");
    const int k = u.p;
    const int q = n - k;

    if (q == 0) {
        const Rational tau = volume_coefficient(u).tau;
        PositivityVerdict out;
        out.margin = to_double(tau);
        if (tau > 0) {
            out.level = PosLevel::WeaklyPositiveSampled;
        } else if (tau == 0) {
            out.level = PosLevel::NonNegativeDegenerate;
        } else {
            out.level = PosLevel::WeakCounterexample;
            out.witness = Form::one(n);  // the empty decomposable form
            out.witness_value = tau;
        }
        return out;
    }
    if (q == 1 || q == n - 1 || q == n) {
        // every (q,0)-form is decomposable in these degrees
        PositivityVerdict out = is_positive(u, budget.cutoff_rel);
        if (out.level == PosLevel::Positive) out.level = PosLevel::WeaklyPositiveSampled;
        if (out.level == PosLevel::NotNonNegative) out.level = PosLevel::WeakCounterexample;
        return out;
    }
    if (budget.restarts <= 0 && budget.samples <= 0)
        throw std::invalid_argument("is_weakly_positive: zero budget");

    WeakSearch search(u);
    RngStream rng = RngStream(budget.seed).substream("weak-positivity");
    PositivityVerdict out;
    out.stats.seed = budget.seed;

    double best = std::numeric_limits<double>::infinity();
    Eigen::MatrixXcd best_rows;
    auto consider = [&](const Eigen::MatrixXcd& rows) {
        const double val = search.value(rows);
        if (val == val && val < best) {  // skip degenerate (NaN) configurations
            best = val;
            best_rows = rows;
        }
        return val;
    };

    Eigen::MatrixXcd rows(q, n);
    for (int restart = 0; restart < budget.restarts; ++restart) {
        ++out.stats.restarts;
        for (int i = 0; i < q; ++i) rows.row(i) = random_unit_vec(n, rng).transpose();
        double prev = consider(rows);
        for (int sweep = 0; sweep < budget.sweeps; ++sweep) {
            for (int slot = 0; slot < q; ++slot) {
                // minimize the normalized pairing over row `slot`: a
                // generalized eigenproblem with the Plücker-norm metric
                const Eigen::MatrixXcd cof = search.cofactors(rows, slot);
                const Eigen::MatrixXcd qm = cof.transpose() * search.h * cof.conjugate();
                const Eigen::MatrixXcd nm = cof.transpose() * cof.conjugate();
                const auto dir = generalized_min_direction(qm, nm);
                if (dir) rows.row(slot) = dir->conjugate().transpose();
            }
            const double val = consider(rows);
            if (!(val == val) || prev - val < budget.improve_tol) break;
            prev = val;
        }
    }
    for (long s = 0; s < budget.samples; ++s) {
        ++out.stats.samples;
        for (int i = 0; i < q; ++i) rows.row(i) = random_unit_vec(n, rng).transpose();
        consider(rows);
    }

    out.margin = std::isfinite(best) ? best : 0.0;
    if (best < 0) {
        // exact recheck of the candidate counterexample
        for (const Int& max_den : {Int(1) << 32, Int(1) << 48}) {
            std::vector<Form> covectors;
            Form beta = Form::one(n);
            for (int i = 0; i < q; ++i) {
                VectorXec row(n);
                for (int a = 0; a < n; ++a)
                    row(a) = rationalize(std::complex<double>(best_rows(i, a)), max_den);
                row = normalize_sup(row);
                Form cov(n, 1, 0);
                for (int a = 0; a < n; ++a) cov.add_term({a}, {}, row(a));
                beta = wedge(beta, cov);
                covectors.push_back(std::move(cov));
            }
            if (beta.is_zero()) continue;
            const Rational val = pairing_value(u, beta);
            if (val < 0) {
                out.level = PosLevel::WeakCounterexample;
                out.witness_covectors = std::move(covectors);
                out.witness = std::move(beta);
                out.witness_value = val;
                return out;
            }
        }
    }
    out.level = PosLevel::WeaklyPositiveSampled;
    return out;
}

std::pair<Form, StrongDecomposition> build_strongly_positive(
    int n, const std::vector<std::pair<Rational, std::vector<Form>>>& terms) {
    StrongDecomposition dec;
    int k = -1;
    Form sum(n, 0, 0);
    for (const auto& [coeff, covectors] : terms) {
        if (coeff < 0) throw std::invalid_argument("build_strongly_positive: negative coefficient");
        if (k < 0) k = static_cast<int>(covectors.size());
        if (static_cast<int>(covectors.size()) != k)
            throw std::invalid_argument("build_strongly_positive: mixed degrees among terms");
        Form alpha = Form::one(n);
        for (const Form& c : covectors) {
            if (c.n != n || c.p != 1 || c.q != 0)
                throw std::invalid_argument("build_strongly_positive: term is not a (1,0)-form");
            alpha = wedge(alpha, c);
        }
        if (k >= 0) {
            if (sum.is_zero()) sum = Form::zero(n, std::min(k, n), std::min(k, n));
            sum += wedge(alpha, conjugate(alpha)) *
                   (i_pow(static_cast<long>(k) * k) * ExactComplex(coeff));
        }
        dec.terms.push_back({coeff, covectors});
    }
    if (k < 0) k = 0;
    if (sum.is_zero()) sum = Form::zero(n, std::min(k, n), std::min(k, n));
    return {std::move(sum), std::move(dec)};
}

WedgeCheckResult wedge_positivity_check(const Form& u, const Form& v, double cutoff_rel) {
    PositivityVerdict pu = is_positive(u, cutoff_rel);
    if (pu.level != PosLevel::Positive) return {u, std::move(pu)};
    PositivityVerdict pv = is_positive(v, cutoff_rel);
    if (pv.level != PosLevel::Positive) return {v, std::move(pv)};
    Form product = wedge(u, v);
    PositivityVerdict verdict = is_positive(product, cutoff_rel);
    return {std::move(product), std::move(verdict)};
}

}  // namespace schurlab
