// Acceptance battery: one criterion per line, pass/fail, nonzero exit on any
// failure.  Tolerances and instance counts are pinned here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "schurlab/exact_linalg.hpp"
#include "schurlab/parallel.hpp"
#include "schurlab/positivity.hpp"
#include "schurlab/generate.hpp"
#include "schurlab/rng.hpp"
#include "schurlab/schur_poly.hpp"
#include "schurlab/verify.hpp"

using namespace schurlab;

namespace {

constexpr uint64_t kSeed = 20260809;

struct Criterion {
    std::string label;
    std::function<bool(std::string&)> run;
};

bool run_suite_criterion(const SuiteReport& report, std::string& detail) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%d/%d trials green", report.passes, report.trials);
    detail = buf;
    if (!report.failures.empty()) detail += "; first: " + report.failures.front().discrepancy;
    return report.green();
}

Form random_covector(int n, RngStream& rng) {
    Form c(n, 1, 0);
    for (int a = 0; a < n; ++a) c.add_term({a}, {}, rng.gaussian_rational());
    return c;
}

}  // namespace

int main() {
    const int threads = resolve_threads(0);
    std::vector<Criterion> criteria;

    criteria.push_back({"1 exact LR product rule (20 trials, rank 2 + 2, zero tolerance)",
                        [&](std::string& d) {
                            return run_suite_criterion(suite_lr_product(20, kSeed, threads, 2, 2),
                                                       d);
                        }});
    criteria.push_back({"2 FL expansion matches Jacobi-Trudi (k<=3, r<=3, 10 matrices each, 1e-9)",
                        [&](std::string& d) {
                            return run_suite_criterion(suite_fl_expansion(10, kSeed, threads), d);
                        }});
    criteria.push_back(
        {"3 psi decomposition reproduces Schur forms (k=2, 5 seeds, 1e-8; exact collapse at A=0)",
         [&](std::string& d) {
             return run_suite_criterion(suite_psi_decomposition(5, kSeed, threads), d);
         }});
    criteria.push_back(
        {"4 Nakano and dual Nakano Schur positivity (20 seeds, eigenvalue cutoff 1e-9)",
         [&](std::string& d) {
             const SuiteReport r = suite_nakano_positive_schur(20, kSeed, threads);
             const bool ok = run_suite_criterion(r, d);
             char buf[96];
             std::snprintf(buf, sizeof(buf), "; min eigenvalue %.3g",
                           r.metrics.count("min_gram_eigenvalue")
                               ? r.metrics.at("min_gram_eigenvalue")
                               : 0.0);
             d += buf;
             return ok;
         }});
    criteria.push_back(
        {"5 type II Schur positivity with exact block decomposition (20 seeds)",
         [&](std::string& d) {
             return run_suite_criterion(suite_type2_positive_schur(20, kSeed, threads), d);
         }});
    criteria.push_back(
        {"6 type I weak positivity, default budget, no exact counterexamples (10 seeds)",
         [&](std::string& d) {
             const SuiteReport r =
                 suite_type1_weakly_positive(10, kSeed, SearchBudget{}, threads);
             const bool ok = run_suite_criterion(r, d);
             char buf[96];
             std::snprintf(buf, sizeof(buf), "; min sampled margin %.3g",
                           r.metrics.count("min_weak_margin") ? r.metrics.at("min_weak_margin")
                                                              : 0.0);
             d += buf;
             return ok;
         }});
    criteria.push_back({"7 hook content product formula, exhaustive k,r <= 6, exact",
                        [&](std::string& d) {
                            int checked = 0;
                            for (int k = 1; k <= 6; ++k)
                                for (int r = 1; r <= 6; ++r)
                                    for (const Partition& lambda : partitions_in(k, r)) {
                                        const Partition conj = conjugate_partition(lambda, r);
                                        const Rational hook = hook_content_eval(conj, r);
                                        // P_lambda(I_r): Jacobi-Trudi at c_i = C(r, i)
                                        std::vector<Rational> c(static_cast<size_t>(r) + 1);
                                        Rational binom(1);
                                        c[0] = 1;
                                        for (int i = 1; i <= r; ++i) {
                                            binom = binom * Rational(r - i + 1) / Rational(i);
                                            c[static_cast<size_t>(i)] = binom;
                                        }
                                        const Rational jt = jacobi_trudi(lambda, r, c);
                                        if (jt != hook || hook < 1 || denominator(hook) != 1) {
                                            d = "mismatch at lambda=" + lambda.to_string() +
                                                " r=" + std::to_string(r);
                                            return false;
                                        }
                                        ++checked;
                                    }
                            d = std::to_string(checked) + " identities exact";
                            return true;
                        }});
    criteria.push_back({"8 criteria round trips: generate, classify, extract, reassemble (10 seeds)",
                        [&](std::string& d) {
                            return run_suite_criterion(suite_criteria_roundtrip(10, kSeed, threads),
                                                       d);
                        }});
    criteria.push_back(
        {"9 Gram equivalence G psd iff H psd (100 mixed forms, n <= 4, exact)",
         [&](std::string& d) {
             RngStream rng(kSeed);
             int agree = 0;
             for (int trial = 0; trial < 100; ++trial) {
                 const int n = 2 + static_cast<int>(rng.uniform_int(0, 2));
                 const int k = 1 + static_cast<int>(rng.uniform_int(0, n - 1));
                 Form u;
                 if (trial % 3 == 0) {
                     // constructed non-negative instance
                     std::vector<std::pair<Rational, std::vector<Form>>> terms;
                     const int count = 1 + static_cast<int>(rng.uniform_int(0, 2));
                     for (int s = 0; s < count; ++s) {
                         std::vector<Form> covs;
                         for (int j = 0; j < k; ++j) covs.push_back(random_covector(n, rng));
                         Rational cc = rng.rational(3, 2);
                         terms.push_back({cc * cc, covs});
                     }
                     u = build_strongly_positive(n, terms).first;
                     if (u.is_zero()) u = Form::zero(n, k, k);
                 } else {
                     u = random_real_form(n, k, rng);
                 }
                 const bool g_psd = exact_psd_decompose(hermitian_gram(u, GramMode::Coefficient)).psd;
                 const bool h_psd = exact_psd_decompose(hermitian_gram(u, GramMode::Complement)).psd;
                 if (g_psd != h_psd) {
                     d = "disagreement at trial " + std::to_string(trial);
                     return false;
                 }
                 ++agree;
             }
             d = std::to_string(agree) + "/100 agree exactly";
             return true;
         }});
    criteria.push_back(
        {"10 positive wedge closure (50 random Gram-positive pairs, n = 4)",
         [&](std::string& d) {
             RngStream rng(kSeed + 1);
             auto gram_positive = [&]() {
                 while (true) {
                     Form u = Form::zero(4, 1, 1);
                     for (int p = 0; p < 5; ++p) {
                         const Form c = random_covector(4, rng);
                         u += wedge(c, conjugate(c)) * ExactComplex(Rational(0), Rational(1));
                     }
                     if (is_positive(u).level == PosLevel::Positive) return u;
                 }
             };
             for (int trial = 0; trial < 50; ++trial) {
                 const Form u = gram_positive();
                 const Form v = gram_positive();
                 const WedgeCheckResult res = wedge_positivity_check(u, v);
                 if (res.verdict.level != PosLevel::Positive) {
                     d = "product not positive at trial " + std::to_string(trial);
                     return false;
                 }
             }
             d = "50/50 products positive";
             return true;
         }});

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
        std::printf("[%s] criterion %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", c.label.c_str(), ms,
                    detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures == 0) {
        std::printf("ALL ACCEPTANCE CRITERIA PASS\n");
        return 0;
    }
    std::printf("%d ACCEPTANCE CRITERIA FAILED\n", failures);
    return 1;
}
