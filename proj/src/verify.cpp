#include "schurlab/verify.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "schurlab/classify.hpp"
#include "schurlab/exact_linalg.hpp"
#include "schurlab/extract.hpp"
#include "schurlab/fl_expand.hpp"
#include "schurlab/generate.hpp"
#include "schurlab/lr.hpp"
#include "schurlab/parallel.hpp"
#include "schurlab/positivity.hpp"
#include "schurlab/psi.hpp"

namespace schurlab {

Json to_json(const SuiteReport& r) {
    Json failures = Json::array();
    for (const auto& f : r.failures) {
        Json entry{{"seed", f.seed}, {"discrepancy", f.discrepancy}};
        if (!f.instance.empty()) entry["instance"] = Json::parse(f.instance);
        failures.push_back(std::move(entry));
    }
    Json tolerances = Json::object();
    for (const auto& [k, v] : r.tolerances) tolerances[k] = v;
    Json metrics = Json::object();
    for (const auto& [k, v] : r.metrics) metrics[k] = v;
    Json warnings = Json::array();
    for (const auto& w : r.warnings) warnings.push_back(w);
    return Json{{"suite", r.suite},       {"trials", r.trials},   {"passes", r.passes},
                {"failures", failures},   {"tolerances", tolerances},
                {"wall_ms", r.wall_ms},   {"warnings", warnings}, {"metrics", metrics},
                {"aborted", r.aborted}};
}

namespace {

struct TrialOutcome {
    bool pass = true;
    bool falsification = false;
    std::string discrepancy;
    std::string instance;
    std::vector<std::string> warnings;
    std::map<std::string, double> metrics;  // merged with min()

    void fail(std::string what, std::string bundle = {}, bool falsified = false) {
        if (pass) {
            pass = false;
            discrepancy = std::move(what);
            instance = std::move(bundle);
            falsification = falsified;
        }
    }
    void metric_min(const std::string& key, double value) {
        auto it = metrics.find(key);
        if (it == metrics.end() || value < it->second) metrics[key] = value;
    }
    // err <= tol passes; anything within a decade of the tolerance is logged.
    bool check_tol(const std::string& what, double err, double tol) {
        if (err >= 0.1 * tol && err <= 10 * tol) {
            std::ostringstream os;
            os << what << ": error " << err << " within decade of tolerance " << tol;
            warnings.push_back(os.str());
        }
        if (err <= tol) return true;
        std::ostringstream os;
        os << what << ": error " << err << " exceeds tolerance " << tol;
        fail(os.str());
        return false;
    }
};

template <class TrialFn>
SuiteReport run_trials(const std::string& suite, int trials, uint64_t seed, int threads,
                       TrialFn fn) {
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.suite = suite;
    report.trials = trials;
    std::vector<TrialOutcome> outcomes(static_cast<size_t>(std::max(trials, 0)));
    std::vector<uint64_t> seeds(outcomes.size());
    RngStream root(seed);
    for (size_t t = 0; t < outcomes.size(); ++t)
        seeds[t] = root.substream(static_cast<uint64_t>(t)).state;
    parallel_for(trials, threads, [&](int t) {
        fn(seeds[static_cast<size_t>(t)], outcomes[static_cast<size_t>(t)]);
    });
    for (size_t t = 0; t < outcomes.size(); ++t) {
        const TrialOutcome& o = outcomes[t];
        if (o.pass) {
            ++report.passes;
        } else {
            report.failures.push_back(SuiteFailure{seeds[t], o.discrepancy, o.instance});
            if (o.falsification) report.aborted = true;
        }
        for (const auto& w : o.warnings) report.warnings.push_back(w);
        for (const auto& [k, v] : o.metrics) {
            auto it = report.metrics.find(k);
            if (it == report.metrics.end() || v < it->second) report.metrics[k] = v;
        }
    }
    report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return report;
}

std::string bundle(std::initializer_list<std::pair<std::string, Json>> parts) {
    Json j = Json::object();
    for (const auto& [k, v] : parts) j[k] = v;
    return j.dump();
}

std::string describe(const Partition& p) { return p.to_string(); }

}  // namespace

SuiteReport suite_lr_product(int trials, uint64_t seed, int threads, int r_e_fixed, int r_f_fixed) {
    SuiteReport report =
        run_trials("lr", trials, seed, threads, [&](uint64_t tseed, TrialOutcome& out) {
            RngStream rng(tseed);
            const int n = static_cast<int>(rng.uniform_int(1, 3));
            const int r_e = r_e_fixed > 0 ? r_e_fixed : static_cast<int>(rng.uniform_int(1, 2));
            const int r_f = r_f_fixed > 0 ? r_f_fixed : static_cast<int>(rng.uniform_int(1, 2));
            const CurvatureTensor re = random_hermitian_curvature(n, r_e, rng);
            const CurvatureTensor rf = random_hermitian_curvature(n, r_f, rng);
            const CurvatureTensor sum = direct_sum(re, rf);
            const auto chern_e = chern_forms(re);
            const auto chern_f = chern_forms(rf);
            for (int k = 1; k <= 3; ++k) {
                for (const Partition& lambda : partitions_in(k, r_e + r_f)) {
                    const Form lhs = schur_form(lambda, sum);
                    Form rhs = Form::zero(n, std::min(k, n), std::min(k, n));
                    const LRTable table = lr_coefficients(lambda);
                    for (const auto& [pair, coeff] : table.entries) {
                        const Form pm = schur_form(pair.first, chern_e, n, r_e);
                        if (pm.is_zero()) continue;
                        const Form pn = schur_form(pair.second, chern_f, n, r_f);
                        if (pn.is_zero()) continue;
                        rhs += wedge(pm, pn) * ExactComplex(coeff);
                    }
                    if (!(lhs == rhs)) {
                        out.fail("LR product rule violated at lambda=" + describe(lambda),
                                 bundle({{"curvature_e", to_json(re)},
                                         {"curvature_f", to_json(rf)},
                                         {"lambda", Json(lambda.parts())}}),
                                 true);
                        return;
                    }
                }
            }
        });
    report.tolerances["exact"] = 0.0;
    return report;
}

SuiteReport suite_fl_expansion(int trials, uint64_t seed, int threads) {
    constexpr double kTol = 1e-9;
    SuiteReport report =
        run_trials("fl", trials, seed, threads, [&](uint64_t tseed, TrialOutcome& out) {
            RngStream rng(tseed);
            for (int r = 1; r <= 3; ++r) {
                for (int k = 1; k <= 3; ++k) {
                    for (const Partition& lambda : partitions_in(k, r)) {
                        std::vector<std::vector<std::complex<double>>> b(
                            static_cast<size_t>(r),
                            std::vector<std::complex<double>>(static_cast<size_t>(r)));
                        Eigen::MatrixXcd bm(r, r);
                        for (int i = 0; i < r; ++i)
                            for (int j = 0; j < r; ++j) {
                                b[static_cast<size_t>(i)][static_cast<size_t>(j)] = {
                                    rng.uniform(-1, 1), rng.uniform(-1, 1)};
                                bm(i, j) = b[static_cast<size_t>(i)][static_cast<size_t>(j)];
                            }
                        const std::complex<double> lhs = fl_expand(lambda, r, b);
                        // c_i(B): sums of principal minors
                        std::vector<std::complex<double>> c(static_cast<size_t>(r) + 1);
                        c[0] = 1.0;
                        for (int i = 1; i <= r; ++i) {
                            std::complex<double> acc = 0;
                            for (const MultiIndex& s : multi_indices(r, i)) {
                                Eigen::MatrixXcd minor(i, i);
                                for (int a = 0; a < i; ++a)
                                    for (int bcol = 0; bcol < i; ++bcol)
                                        minor(a, bcol) = bm(s[static_cast<size_t>(a)],
                                                            s[static_cast<size_t>(bcol)]);
                                acc += minor.determinant();
                            }
                            c[static_cast<size_t>(i)] = acc;
                        }
                        const std::complex<double> rhs = jacobi_trudi(lambda, r, c);
                        if (!out.check_tol("fl vs jacobi-trudi at lambda=" + describe(lambda),
                                           std::abs(lhs - rhs), kTol))
                            return;
                        // B = I_r: exact agreement with the hook content product
                        std::vector<std::vector<Rational>> eye(
                            static_cast<size_t>(r),
                            std::vector<Rational>(static_cast<size_t>(r), Rational(0)));
                        for (int i = 0; i < r; ++i)
                            eye[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
                        const Rational exact = fl_expand(lambda, r, eye);
                        const Rational hook = hook_content_eval(conjugate_partition(lambda, k), r);
                        if (exact != hook) {
                            out.fail("fl at identity disagrees with hook content at lambda=" +
                                     describe(lambda));
                            return;
                        }
                    }
                }
            }
        });
    report.tolerances["fl_vs_jt"] = kTol;
    report.tolerances["identity_exact"] = 0.0;
    return report;
}

SuiteReport suite_psi_decomposition(int trials, uint64_t seed, int threads, bool include_k3) {
    constexpr double kTol = 1e-8;
    SuiteReport report =
        run_trials("psi", trials, seed, threads, [&](uint64_t tseed, TrialOutcome& out) {
            RngStream rng(tseed);
            const int n = static_cast<int>(rng.uniform_int(1, 3));
            const int r = static_cast<int>(rng.uniform_int(1, 2));
            const int N = static_cast<int>(rng.uniform_int(1, 2));
            ABFactorization f(n, r, N);
            for (int i = 0; i < r; ++i)
                for (int p = 0; p < N; ++p)
                    for (int a = 0; a < n; ++a) {
                        f.a(i, p, a) = rng.gaussian_rational(2, 2);
                        f.b(i, p, a) = rng.gaussian_rational(2, 2);
                    }
            const CurvatureTensor R = curvature_from_ab(f);
            std::vector<int> ks{2};
            if (include_k3) ks.push_back(3);
            for (int k : ks) {
                for (const Partition& lambda : partitions_in(k, r)) {
                    const FormD via_psi = schur_form_via_psi(lambda, f);
                    const FormD direct = to_double(schur_form(lambda, R));
                    if (!out.check_tol("psi decomposition at lambda=" + describe(lambda),
                                       sup_distance(via_psi, direct), kTol))
                        return;
                }
            }
            // Nakano specialization: A = 0 forces the single-ε collapse exactly
            ABFactorization fb = f;
            std::fill(fb.A.begin(), fb.A.end(), ExactComplex(0));
            const CurvatureTensor rb = curvature_from_ab(fb);
            for (const Partition& lambda : partitions_in(2, r)) {
                if (!psi_single_eps_collapse(lambda, fb)) {
                    out.fail("psi single-eps collapse violated at lambda=" + describe(lambda),
                             bundle({{"factorization", to_json(fb)}}), true);
                    return;
                }
                const FormD via_psi = schur_form_via_psi(lambda, fb);
                const FormD direct = to_double(schur_form(lambda, rb));
                if (!out.check_tol("psi (A=0) at lambda=" + describe(lambda),
                                   sup_distance(via_psi, direct), kTol))
                    return;
            }
        });
    report.tolerances["componentwise"] = kTol;
    return report;
}

SuiteReport suite_nakano_positive_schur(int trials, uint64_t seed, int threads) {
    SuiteReport report =
        run_trials("nakano", trials, seed, threads, [&](uint64_t tseed, TrialOutcome& out) {
            RngStream rng(tseed);
            const int n = static_cast<int>(rng.uniform_int(1, 3));
            const int r = static_cast<int>(rng.uniform_int(1, 2));
            for (PositivityClass cls : {PositivityClass::Nakano, PositivityClass::DualNakano}) {
                const GenResult gen = generate(cls, n, r, tseed);
                const auto chern = chern_forms(gen.R);
                for (int k = 1; k <= std::min(3, n); ++k) {
                    for (const Partition& lambda : partitions_in(k, r)) {
                        const Form p = schur_form(lambda, chern, n, r);
                        const PositivityVerdict v = is_positive(p);
                        out.metric_min("min_gram_eigenvalue", v.margin);
                        if (v.level != PosLevel::Positive) {
                            Json witness = v.witness ? to_json(*v.witness) : Json();
                            out.fail("Schur form not positive: class=" +
                                         std::string(to_string(cls)) +
                                         " lambda=" + describe(lambda) +
                                         " level=" + to_string(v.level),
                                     bundle({{"curvature", to_json(gen.R)},
                                             {"lambda", Json(lambda.parts())},
                                             {"witness", witness}}),
                                     v.level == PosLevel::NotNonNegative);
                            return;
                        }
                    }
                }
            }
        });
    report.tolerances["eigenvalue_cutoff_rel"] = kDefaultCutoffRel;
    return report;
}

SuiteReport suite_type1_weakly_positive(int trials, uint64_t seed, const SearchBudget& budget,
                                        int threads) {
    SuiteReport report =
        run_trials("type1", trials, seed, threads, [&](uint64_t tseed, TrialOutcome& out) {
            RngStream rng(tseed);
            const int n = static_cast<int>(rng.uniform_int(2, 4));
            const int r = static_cast<int>(rng.uniform_int(1, 2));
            const int n0 = static_cast<int>(rng.uniform_int(1, n - 1));
            SplitSpec split{SplitSpec::Kind::TypeI, {}};
            for (int i = 0; i < n0; ++i) split.indices.push_back(i);
            const GenResult gen = generate(PositivityClass::TypeI, n, r, tseed, split);
            const auto chern = chern_forms(gen.R);
            int positive_count = 0, total = 0;
            for (int k = 1; k <= std::min(3, n); ++k) {
                for (const Partition& lambda : partitions_in(k, r)) {
                    const Form p = schur_form(lambda, chern, n, r);
                    SearchBudget b = budget;
                    b.seed = RngStream(tseed).substream(describe(lambda)).state;
                    const PositivityVerdict v = is_weakly_positive(p, b);
                    out.metric_min("min_weak_margin", v.margin);
                    if (v.level == PosLevel::WeakCounterexample ||
                        v.level == PosLevel::NotNonNegative) {
                        out.fail(
                            "type I Schur form has exact weak counterexample at lambda=" +
                                describe(lambda),
                            bundle({{"curvature", to_json(gen.R)},
                                    {"lambda", Json(lambda.parts())},
                                    {"witness",
                                     v.witness ? to_json(*v.witness) : Json()}}),
                            true);
                        return;
                    }
                    // the open question: record, never assert
                    ++total;
                    if (is_positive(p).level == PosLevel::Positive) ++positive_count;
                }
            }
            if (total > 0)
                out.metric_min("positive_fraction_observed",
                               static_cast<double>(positive_count) / total);
        });
    report.tolerances["improve_tol"] = budget.improve_tol;
    return report;
}

SuiteReport suite_type2_positive_schur(int trials, uint64_t seed, int threads) {
    SuiteReport report =
        run_trials("type2", trials, seed, threads, [&](uint64_t tseed, TrialOutcome& out) {
            RngStream rng(tseed);
            const int n = static_cast<int>(rng.uniform_int(1, 3));
            const int r = static_cast<int>(rng.uniform_int(2, 3));
            const int r1 = static_cast<int>(rng.uniform_int(1, r - 1));
            SplitSpec split{SplitSpec::Kind::TypeII, {}};
            for (int i = 0; i < r1; ++i) split.indices.push_back(i);
            const GenResult gen = generate(PositivityClass::TypeII, n, r, tseed, split);
            const auto e1 = gen.split.indices;
            const auto e2 = complement_indices(e1, r);
            const CurvatureTensor r_1 = restrict_fibers(gen.R, e1);
            const CurvatureTensor r_2 = restrict_fibers(gen.R, e2);
            const auto chern = chern_forms(gen.R);
            const auto chern_1 = chern_forms(r_1);
            const auto chern_2 = chern_forms(r_2);
            for (int k = 1; k <= std::min(3, n); ++k) {
                for (const Partition& lambda : partitions_in(k, r)) {
                    const Form p = schur_form(lambda, chern, n, r);
                    const PositivityVerdict v = is_positive(p);
                    out.metric_min("min_gram_eigenvalue", v.margin);
                    if (v.level != PosLevel::Positive) {
                        out.fail("type II Schur form not positive at lambda=" + describe(lambda),
                                 bundle({{"curvature", to_json(gen.R)},
                                         {"lambda", Json(lambda.parts())}}),
                                 v.level == PosLevel::NotNonNegative);
                        return;
                    }
                    // exact block decomposition of the proof
                    Form rhs = Form::zero(n, std::min(k, n), std::min(k, n));
                    for (const auto& [pair, coeff] : lr_coefficients(lambda).entries) {
                        const Form pm =
                            schur_form(pair.first, chern_1, n, static_cast<int>(e1.size()));
                        if (pm.is_zero()) continue;
                        const Form pn =
                            schur_form(pair.second, chern_2, n, static_cast<int>(e2.size()));
                        if (pn.is_zero()) continue;
                        rhs += wedge(pm, pn) * ExactComplex(coeff);
                    }
                    if (!(p == rhs)) {
                        out.fail("type II block decomposition not exact at lambda=" +
                                     describe(lambda),
                                 bundle({{"curvature", to_json(gen.R)},
                                         {"lambda", Json(lambda.parts())}}),
                                 true);
                        return;
                    }
                }
            }
        });
    report.tolerances["eigenvalue_cutoff_rel"] = kDefaultCutoffRel;
    report.tolerances["block_decomposition"] = 0.0;
    return report;
}

SuiteReport suite_criteria_roundtrip(int trials, uint64_t seed, int threads) {
    SuiteReport report =
        run_trials("criteria", trials, seed, threads, [&](uint64_t tseed, TrialOutcome& out) {
            RngStream rng(tseed);
            SearchBudget budget;
            budget.restarts = 8;
            budget.sweeps = 50;
            budget.samples = 200;
            budget.seed = tseed;

            // negative control: zero curvature fails every strict class and
            // satisfies every non-strict one
            {
                const CurvatureTensor zero(2, 2);
                const ClassVerdict v = classify(zero, std::nullopt, budget);
                if (v.nakano.status != Status::Fails || v.dual_nakano.status != Status::Fails ||
                    v.griffiths.status != Status::Fails ||
                    v.strongly_type1.status != Status::Fails ||
                    v.strongly_type2.status != Status::Fails ||
                    v.decomposable.status != Status::Fails) {
                    out.fail("zero curvature not classified as failing all strict classes");
                    return;
                }
                if (!exact_psd_decompose(nakano_matrix(zero)).psd ||
                    !exact_psd_decompose(dual_nakano_matrix(zero)).psd) {
                    out.fail("zero curvature fails non-strict PSD checks");
                    return;
                }
            }

            const int n = static_cast<int>(rng.uniform_int(1, 3));
            const int r = static_cast<int>(rng.uniform_int(1, 2));
            std::vector<int> all_axes, no_axes;
            for (int i = 0; i < n; ++i) all_axes.push_back(i);

            for (PositivityClass cls :
                 {PositivityClass::Nakano, PositivityClass::DualNakano, PositivityClass::TypeI,
                  PositivityClass::TypeII, PositivityClass::Decomposable}) {
                const int use_r = cls == PositivityClass::TypeII ? std::max(r, 2) : r;
                const GenResult gen = generate(cls, n, use_r, tseed);
                const std::string name = to_string(cls);

                // Eq.-level reassembly of the generated factorization
                if (!(curvature_from_ab(gen.F) == gen.R)) {
                    out.fail(name + ": generated factorization does not reassemble");
                    return;
                }

                const ClassVerdict v = classify(gen.R, gen.split, budget);
                const auto [rank_a, rank_b] = flattened_ranks(gen.F);
                switch (cls) {
                    case PositivityClass::Nakano:
                        if (v.nakano.status != Status::Holds) {
                            out.fail("nakano: classifier does not confirm",
                                     bundle({{"curvature", to_json(gen.R)}}), true);
                            return;
                        }
                        if (rank_b != use_r * n) {
                            out.fail("nakano: flattened B rank off contract");
                            return;
                        }
                        break;
                    case PositivityClass::DualNakano:
                        if (v.dual_nakano.status != Status::Holds) {
                            out.fail("dual-nakano: classifier does not confirm",
                                     bundle({{"curvature", to_json(gen.R)}}), true);
                            return;
                        }
                        if (rank_a != use_r * n) {
                            out.fail("dual-nakano: flattened A rank off contract");
                            return;
                        }
                        break;
                    case PositivityClass::TypeI: {
                        if (v.strongly_type1.status != Status::Holds) {
                            out.fail("type1: classifier does not confirm",
                                     bundle({{"curvature", to_json(gen.R)}}), true);
                            return;
                        }
                        const int n0 = static_cast<int>(gen.split.indices.size());
                        if (rank_b != use_r * n0 || rank_a != use_r * (n - n0)) {
                            out.fail("type1: flattened ranks off contract");
                            return;
                        }
                        // exact cross-term vanishing
                        const auto v_axes = complement_indices(gen.split.indices, n);
                        for (int i = 0; i < use_r; ++i)
                            for (int j = 0; j < use_r; ++j)
                                for (int a : gen.split.indices)
                                    for (int b : v_axes)
                                        if (!gen.R.at(i, j, a, b).is_zero()) {
                                            out.fail("type1: cross terms do not vanish");
                                            return;
                                        }
                        break;
                    }
                    case PositivityClass::TypeII:
                        if (v.strongly_type2.status != Status::Holds ||
                            !v.strongly_type2.split || !(*v.strongly_type2.split == gen.split)) {
                            out.fail("type2: classifier does not confirm the generator split",
                                     bundle({{"curvature", to_json(gen.R)}}), true);
                            return;
                        }
                        break;
                    case PositivityClass::Decomposable:
                        if (v.decomposable.status == Status::Fails) {
                            out.fail("decomposable: classifier refutes a generated instance",
                                     bundle({{"curvature", to_json(gen.R)}}), true);
                            return;
                        }
                        break;
                }

                // extractor round trip (the extractors verify reassembly exactly)
                try {
                    switch (cls) {
                        case PositivityClass::Nakano: {
                            const ABFactorization e = extract_ab_factorization(
                                gen.R, SplitSpec{SplitSpec::Kind::TypeI, all_axes});
                            bool a_empty = true;
                            for (const auto& c : e.A) a_empty &= c.is_zero();
                            const auto ranks = flattened_ranks(e);
                            if (!a_empty || ranks.second != use_r * n) {
                                out.fail("nakano: extracted factorization off contract");
                                return;
                            }
                            break;
                        }
                        case PositivityClass::DualNakano:
                            extract_ab_factorization(gen.R,
                                                     SplitSpec{SplitSpec::Kind::TypeI, no_axes});
                            break;
                        case PositivityClass::TypeI:
                            extract_ab_factorization(gen.R, gen.split);
                            break;
                        case PositivityClass::TypeII:
                            extract_type2_factorization(gen.R, gen.split);
                            break;
                        case PositivityClass::Decomposable:
                            break;  // no split-based extraction is defined here
                    }
                } catch (const std::exception& e) {
                    out.fail(name + ": extraction failed: " + e.what(),
                             bundle({{"curvature", to_json(gen.R)}}), true);
                    return;
                }
            }
        });
    report.tolerances["exact"] = 0.0;
    return report;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"lr",     "fl",    "psi",     "nakano",
                                                "type1",  "type2", "criteria"};
    return names;
}

SuiteReport run_suite(const std::string& name, int trials, uint64_t seed,
                      const SearchBudget& budget, int threads) {
    if (name == "lr") return suite_lr_product(trials, seed, threads);
    if (name == "fl") return suite_fl_expansion(trials, seed, threads);
    if (name == "psi") return suite_psi_decomposition(trials, seed, threads);
    if (name == "nakano") return suite_nakano_positive_schur(trials, seed, threads);
    if (name == "type1") return suite_type1_weakly_positive(trials, seed, budget, threads);
    if (name == "type2") return suite_type2_positive_schur(trials, seed, threads);
    if (name == "criteria") return suite_criteria_roundtrip(trials, seed, threads);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace schurlab
