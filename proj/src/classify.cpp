#include "schurlab/classify.hpp"

#include <algorithm>

#include "schurlab/exact_linalg.hpp"
#include "schurlab/rng.hpp"

namespace schurlab {

const char* to_string(Status s) {
    switch (s) {
        case Status::Holds: return "holds";
        case Status::Fails: return "fails";
        default: return "unknown";
    }
}

namespace {

std::vector<int> iota_vec(int size) {
    std::vector<int> v(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) v[static_cast<size_t>(i)] = i;
    return v;
}

Eigen::VectorXcd random_unit(int dim, RngStream& rng) {
    Eigen::VectorXcd v(dim);
    for (int i = 0; i < dim; ++i) v(i) = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const double norm = v.norm();
    return norm == 0 ? Eigen::VectorXcd::Unit(dim, 0) : Eigen::VectorXcd(v / norm);
}

// Positive-definiteness of an exact Hermitian matrix, decided exactly; the
// float margin is reported alongside.  Returns Holds/Fails only.
ClassResult definite_verdict(const MatrixXec& m) {
    ClassResult out;
    const auto eig = hermitian_eig(to_cd(m));
    out.margin = eig.min_value();
    const ExactPsd psd = exact_psd_decompose(m);
    if (psd.positive_definite(m.rows())) {
        out.status = Status::Holds;
        return out;
    }
    out.status = Status::Fails;
    if (!psd.psd) {
        out.witness = normalize_sup(*psd.negative_witness);
    } else {
        const auto kernel = exact_kernel(m);
        if (kernel.empty()) throw std::logic_error("definite_verdict: degenerate without kernel");
        out.witness = normalize_sup(kernel.front());
    }
    out.witness_value = hermitian_value(m, *out.witness);
    if (out.witness_value > 0) throw std::logic_error("definite_verdict: witness value positive");
    return out;
}

// Exact vanishing of all cross entries R_{i j̄ α β̄}, α in one base block and
// β in the other (type I).
bool cross_terms_vanish_type1(const CurvatureTensor& R, const std::vector<int>& u_axes,
                              const std::vector<int>& v_axes) {
    for (int i = 0; i < R.r; ++i)
        for (int j = 0; j < R.r; ++j)
            for (int a : u_axes)
                for (int b : v_axes)
                    if (!R.at(i, j, a, b).is_zero() || !R.at(i, j, b, a).is_zero()) return false;
    return true;
}

// Exact vanishing of the cross fiber blocks (type II).
bool cross_blocks_vanish_type2(const CurvatureTensor& R, const std::vector<int>& e1,
                               const std::vector<int>& e2) {
    for (int i : e1)
        for (int j : e2)
            for (int a = 0; a < R.n; ++a)
                for (int b = 0; b < R.n; ++b)
                    if (!R.at(i, j, a, b).is_zero() || !R.at(j, i, a, b).is_zero()) return false;
    return true;
}

// Verifies a type I split: cross terms vanish exactly, Nakano block over U and
// dual Nakano block over V positive definite.
std::optional<ClassResult> try_type1_split(const CurvatureTensor& R,
                                           const std::vector<int>& u_axes) {
    const auto v_axes = complement_indices(u_axes, R.n);
    if (!cross_terms_vanish_type1(R, u_axes, v_axes)) return std::nullopt;
    const auto fibers = iota_vec(R.r);
    double margin = std::numeric_limits<double>::infinity();
    if (!u_axes.empty()) {
        ClassResult nak = definite_verdict(nakano_matrix(R, fibers, u_axes));
        if (nak.status != Status::Holds) return std::nullopt;
        margin = std::min(margin, nak.margin);
    }
    if (!v_axes.empty()) {
        ClassResult dual = definite_verdict(dual_nakano_matrix(R, fibers, v_axes));
        if (dual.status != Status::Holds) return std::nullopt;
        margin = std::min(margin, dual.margin);
    }
    ClassResult out;
    out.status = Status::Holds;
    out.margin = margin;
    out.split = SplitSpec{SplitSpec::Kind::TypeI, u_axes};
    return out;
}

std::optional<ClassResult> try_type2_split(const CurvatureTensor& R, const std::vector<int>& e1) {
    const auto e2 = complement_indices(e1, R.r);
    if (!cross_blocks_vanish_type2(R, e1, e2)) return std::nullopt;
    const auto axes = iota_vec(R.n);
    double margin = std::numeric_limits<double>::infinity();
    if (!e1.empty()) {
        ClassResult nak = definite_verdict(nakano_matrix(R, e1, axes));
        if (nak.status != Status::Holds) return std::nullopt;
        margin = std::min(margin, nak.margin);
    }
    if (!e2.empty()) {
        ClassResult dual = definite_verdict(dual_nakano_matrix(R, e2, axes));
        if (dual.status != Status::Holds) return std::nullopt;
        margin = std::min(margin, dual.margin);
    }
    ClassResult out;
    out.status = Status::Holds;
    out.margin = margin;
    out.split = SplitSpec{SplitSpec::Kind::TypeII, e1};
    return out;
}

std::vector<int> mask_to_indices(unsigned mask, int size) {
    std::vector<int> out;
    for (int i = 0; i < size; ++i)
        if (mask & (1u << i)) out.push_back(i);
    return out;
}

}  // namespace

GriffithsSearch griffiths_minimize(const CurvatureTensor& R, const SearchBudget& budget) {
    const int n = R.n, r = R.r;
    GriffithsSearch out;
    out.stats.seed = budget.seed;
    RngStream rng = RngStream(budget.seed).substream("griffiths");
    const Eigen::MatrixXcd nak = to_cd(nakano_matrix(R));

    auto value_of = [&](const Eigen::VectorXcd& v, const Eigen::VectorXcd& xi) {
        // Nakano form on the rank-one tensor x_{iα} = v_i ξ_α: Σ M_pq x_p x̄_q
        Eigen::VectorXcd x(r * n);
        for (int i = 0; i < r; ++i)
            for (int a = 0; a < n; ++a) x(i * n + a) = v(i) * xi(a);
        return (x.transpose() * nak * x.conjugate())(0).real();
    };
    // fixed v: Hermitian n×n form in ξ; fixed ξ: r×r form in v
    auto xi_matrix = [&](const Eigen::VectorXcd& v) {
        Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(n, n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                std::complex<double> acc = 0;
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < r; ++j)
                        acc += to_cd(R.at(i, j, a, b)) * v(i) * std::conj(v(j));
                g(a, b) = acc;
            }
        return g;
    };
    auto v_matrix = [&](const Eigen::VectorXcd& xi) {
        Eigen::MatrixXcd f = Eigen::MatrixXcd::Zero(r, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                std::complex<double> acc = 0;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        acc += to_cd(R.at(i, j, a, b)) * xi(a) * std::conj(xi(b));
                f(i, j) = acc;
            }
        return f;
    };

    bool first = true;
    auto consider = [&](const Eigen::VectorXcd& v, const Eigen::VectorXcd& xi) {
        const double val = value_of(v, xi);
        if (first || val < out.min_value) {
            first = false;
            out.min_value = val;
            out.best_v = v;
            out.best_xi = xi;
        }
    };

    for (int restart = 0; restart < budget.restarts; ++restart) {
        ++out.stats.restarts;
        Eigen::VectorXcd v = random_unit(r, rng);
        Eigen::VectorXcd xi = random_unit(n, rng);
        double prev = value_of(v, xi);
        consider(v, xi);
        for (int sweep = 0; sweep < budget.sweeps; ++sweep) {
            // Σ G_ab ξ_a ξ̄_b = w^H G w with w = ξ̄, so the minimizer is the
            // conjugate of the smallest eigenvector.
            xi = hermitian_eig(xi_matrix(v)).min_vector().conjugate();
            v = hermitian_eig(v_matrix(xi)).min_vector().conjugate();
            const double val = value_of(v, xi);
            consider(v, xi);
            if (prev - val < budget.improve_tol) break;
            prev = val;
        }
    }
    for (long s = 0; s < budget.samples; ++s) {
        ++out.stats.samples;
        consider(random_unit(r, rng), random_unit(n, rng));
    }

    if (!first) {
        // certify candidate minima exactly
        VectorXec v_exact(r), xi_exact(n);
        for (int i = 0; i < r; ++i) v_exact(i) = rationalize(std::complex<double>(out.best_v(i)));
        for (int a = 0; a < n; ++a) xi_exact(a) = rationalize(std::complex<double>(out.best_xi(a)));
        bool zero_v = true, zero_xi = true;
        for (int i = 0; i < r; ++i) zero_v &= v_exact(i).is_zero();
        for (int a = 0; a < n; ++a) zero_xi &= xi_exact(a).is_zero();
        if (!zero_v && !zero_xi) {
            const Rational val = griffiths_value(R, v_exact, xi_exact);
            if (val <= 0) {
                out.exact_value = val;
                out.exact_v = normalize_sup(v_exact);
                out.exact_xi = normalize_sup(xi_exact);
                out.exact_value = griffiths_value(R, out.exact_v, out.exact_xi);
            }
        }
    }
    return out;
}

ClassVerdict classify(const CurvatureTensor& R, std::optional<SplitSpec> hint,
                      const SearchBudget& budget) {
    R.require_hermitian();
    ClassVerdict verdict;
    const int n = R.n, r = R.r;

    verdict.nakano = definite_verdict(nakano_matrix(R));
    verdict.dual_nakano = definite_verdict(dual_nakano_matrix(R));

    // Griffiths: implied by Nakano or dual Nakano; otherwise only exact
    // counterexamples are conclusive.
    GriffithsSearch search = griffiths_minimize(R, budget);
    verdict.griffiths.stats = search.stats;
    verdict.griffiths.margin = search.min_value;
    if (verdict.nakano.status == Status::Holds) {
        verdict.griffiths.status = Status::Holds;
        verdict.griffiths.note = "implied by Nakano positivity";
    } else if (verdict.dual_nakano.status == Status::Holds) {
        verdict.griffiths.status = Status::Holds;
        verdict.griffiths.note = "implied by dual Nakano positivity";
    } else if (search.exact_value && *search.exact_value <= 0) {
        verdict.griffiths.status = Status::Fails;
        verdict.griffiths.witness_pair = std::make_pair(search.exact_v, search.exact_xi);
        verdict.griffiths.witness_value = *search.exact_value;
    } else {
        verdict.griffiths.status = Status::Unknown;
        verdict.griffiths.note = "no counterexample found within budget";
    }

    // Type I / type II: verify the hint first, then search coordinate-axis
    // splits.  Absence of an axis-aligned split is not a refutation; a
    // Griffiths counterexample is.
    auto search_type1 = [&]() -> ClassResult {
        if (hint && hint->kind == SplitSpec::Kind::TypeI)
            if (auto res = try_type1_split(R, hint->indices)) return *res;
        if (n <= 12) {
            for (unsigned mask = 0; mask < (1u << n); ++mask)
                if (auto res = try_type1_split(R, mask_to_indices(mask, n))) return *res;
        }
        ClassResult out;
        if (verdict.griffiths.status == Status::Fails) {
            out.status = Status::Fails;
            out.witness_pair = verdict.griffiths.witness_pair;
            out.witness_value = verdict.griffiths.witness_value;
            out.note = "Griffiths counterexample excludes every split";
        } else {
            out.status = Status::Unknown;
            out.note = "no coordinate-axis split found; general splits undecided";
            out.stats = search.stats;
        }
        return out;
    };
    auto search_type2 = [&]() -> ClassResult {
        if (hint && hint->kind == SplitSpec::Kind::TypeII)
            if (auto res = try_type2_split(R, hint->indices)) return *res;
        if (r <= 12) {
            for (unsigned mask = 0; mask < (1u << r); ++mask)
                if (auto res = try_type2_split(R, mask_to_indices(mask, r))) return *res;
        }
        ClassResult out;
        if (verdict.griffiths.status == Status::Fails) {
            out.status = Status::Fails;
            out.witness_pair = verdict.griffiths.witness_pair;
            out.witness_value = verdict.griffiths.witness_value;
            out.note = "Griffiths counterexample excludes every split";
        } else {
            out.status = Status::Unknown;
            out.note = "no fiber-axis split found; general splits undecided";
            out.stats = search.stats;
        }
        return out;
    };
    verdict.strongly_type1 = search_type1();
    verdict.strongly_type2 = search_type2();

    // Decomposable positivity: implied by any of the stronger classes;
    // refuted by a Griffiths counterexample; otherwise sampled only.
    if (verdict.nakano.status == Status::Holds || verdict.dual_nakano.status == Status::Holds ||
        verdict.strongly_type1.status == Status::Holds ||
        verdict.strongly_type2.status == Status::Holds) {
        verdict.decomposable.status = Status::Holds;
        verdict.decomposable.note = "implied by a stronger positivity class";
        verdict.decomposable.margin = search.min_value;
    } else if (verdict.griffiths.status == Status::Fails) {
        verdict.decomposable.status = Status::Fails;
        verdict.decomposable.witness_pair = verdict.griffiths.witness_pair;
        verdict.decomposable.witness_value = verdict.griffiths.witness_value;
    } else {
        verdict.decomposable.status = Status::Unknown;
        verdict.decomposable.note = "sampled Griffiths minimum only";
        verdict.decomposable.margin = search.min_value;
        verdict.decomposable.stats = search.stats;
    }
    return verdict;
}

}  // namespace schurlab
