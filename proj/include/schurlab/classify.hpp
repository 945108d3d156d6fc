#pragma once

#include <optional>
#include <string>

#include "schurlab/budget.hpp"
#include "schurlab/curvature.hpp"

namespace schurlab {

enum class Status { Holds, Fails, Unknown };
const char* to_string(Status s);

// Per-class outcome.  A Fails verdict always carries a witness whose exact
// rational evaluation is <= 0 (strict positivity refuted); Holds carries
// eigenvalue margins, ranks, or the split used; Unknown carries sampling
// statistics.  Budget exhaustion yields Unknown, never a false Holds/Fails.
struct ClassResult {
    Status status = Status::Unknown;
    double margin = 0;
    std::optional<SplitSpec> split;
    std::optional<VectorXec> witness;                             // Nakano/dual-Nakano style
    std::optional<std::pair<VectorXec, VectorXec>> witness_pair;  // Griffiths (v, ξ)
    Rational witness_value;                                       // exact value at witness
    SampleStats stats;
    std::string note;
};

struct ClassVerdict {
    ClassResult griffiths;
    ClassResult nakano;
    ClassResult dual_nakano;
    ClassResult decomposable;
    ClassResult strongly_type1;
    ClassResult strongly_type2;
};

// Outcome of the rank-one-restricted Rayleigh minimization of the Griffiths
// form over ξ⊗v, with random restarts.
struct GriffithsSearch {
    double min_value = 0;
    Eigen::VectorXcd best_v;
    Eigen::VectorXcd best_xi;
    std::optional<Rational> exact_value;  // set when the candidate rechecks <= 0 exactly
    VectorXec exact_v;
    VectorXec exact_xi;
    SampleStats stats;
};

GriffithsSearch griffiths_minimize(const CurvatureTensor& R, const SearchBudget& budget);

ClassVerdict classify(const CurvatureTensor& R, std::optional<SplitSpec> hint = std::nullopt,
                      const SearchBudget& budget = SearchBudget{});

}  // namespace schurlab
