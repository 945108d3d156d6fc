#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "schurlab/budget.hpp"
#include "schurlab/form.hpp"
#include "schurlab/gram.hpp"

namespace schurlab {

enum class PosLevel {
    Positive,
    NonNegativeDegenerate,
    NotNonNegative,
    WeaklyPositiveSampled,
    WeakCounterexample,
};
const char* to_string(PosLevel level);

// A NotNonNegative or WeakCounterexample verdict always carries a witness
// whose exact rational evaluation is strictly negative.
struct PositivityVerdict {
    PosLevel level = PosLevel::Positive;
    double margin = 0;  // smallest eigenvalue, or smallest sampled value
    std::optional<Form> witness;                       // (q,0)-form
    std::optional<std::vector<Form>> witness_covectors;  // decomposable witness as (1,0)-forms
    Rational witness_value;
    SampleStats stats;
};

// Weighted exact decomposition u = Σ w_s i^{k²} α_s ∧ ᾱ_s (α_s general).
struct NonnegDecomposition {
    struct Term {
        Rational weight;  // > 0
        Form alpha;       // (k,0)-form
    };
    std::vector<Term> terms;
};

// Decomposable terms only: α_s = α_{s,1} ∧ ... ∧ α_{s,k}.
struct StrongDecomposition {
    struct Term {
        Rational coeff;               // >= 0
        std::vector<Form> covectors;  // k (1,0)-forms
    };
    std::vector<Term> terms;
};

// Positive iff the complement Gram matrix is positive definite.  The verdict
// is decided exactly; the margin is the float minimum eigenvalue.
PositivityVerdict is_positive(const Form& u, double cutoff_rel = kDefaultCutoffRel);

// PSD test on the coefficient Gram; when PSD also returns the exact
// decomposition read off a pivoted LDL^H factorization.
std::pair<PositivityVerdict, std::optional<NonnegDecomposition>> is_nonnegative(
    const Form& u, double cutoff_rel = kDefaultCutoffRel);

// Minimizes vol(u ∧ i^{q²} β∧β̄) over decomposable β = β_1∧...∧β_q by cyclic
// alternating Rayleigh minimization with random restarts plus pure sampling.
// Counterexamples are certified exactly; their absence is sampled evidence.
// Degrees with automatic decomposability (q in {0,1,n-1,n}) are delegated to
// the exact positive test.
PositivityVerdict is_weakly_positive(const Form& u, const SearchBudget& budget = SearchBudget{});

// Assembles Σ c_s i^{k²} α_s ∧ ᾱ_s exactly from decomposable pieces.
std::pair<Form, StrongDecomposition> build_strongly_positive(
    int n, const std::vector<std::pair<Rational, std::vector<Form>>>& terms);

// Checks u, v, then their product; the product of two positive forms is
// positive, so a non-positive outcome here falsifies that and is surfaced by
// the calling suite as a test failure.
struct WedgeCheckResult {
    Form product;
    PositivityVerdict verdict;
};
WedgeCheckResult wedge_positivity_check(const Form& u, const Form& v,
                                        double cutoff_rel = kDefaultCutoffRel);

// Exact pairing vol(u ∧ i^{q²} β ∧ β̄) for a (q,0)-form β.
Rational pairing_value(const Form& u, const Form& beta);

}  // namespace schurlab
