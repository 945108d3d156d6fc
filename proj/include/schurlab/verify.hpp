#pragma once

#include <map>
#include <string>
#include <vector>

#include "schurlab/budget.hpp"
#include "schurlab/json_io.hpp"

namespace schurlab {

struct SuiteFailure {
    uint64_t seed = 0;
    std::string discrepancy;
    std::string instance;  // serialized reproduction bundle
};

struct SuiteReport {
    std::string suite;
    int trials = 0;
    int passes = 0;
    std::vector<SuiteFailure> failures;
    std::map<std::string, double> tolerances;
    long long wall_ms = 0;
    std::vector<std::string> warnings;   // near-miss band: 0.1x..10x tolerance
    std::map<std::string, double> metrics;  // observed minima (margins etc.)
    bool aborted = false;                // a falsification event stops the suite

    bool green() const { return failures.empty(); }
};

Json to_json(const SuiteReport& r);

// Each suite realizes one identity or positivity statement as a reproducible
// property test over seeded random instances.  Deterministic given
// (trials, seed, budget); trials run in parallel with per-trial sub-seeds.
// r_e / r_f: 0 draws each rank from {1,2} per trial, otherwise fixed.
SuiteReport suite_lr_product(int trials, uint64_t seed, int threads = 1, int r_e = 0, int r_f = 0);
SuiteReport suite_fl_expansion(int trials, uint64_t seed, int threads = 1);
SuiteReport suite_psi_decomposition(int trials, uint64_t seed, int threads = 1,
                                    bool include_k3 = false);
SuiteReport suite_nakano_positive_schur(int trials, uint64_t seed, int threads = 1);
SuiteReport suite_type1_weakly_positive(int trials, uint64_t seed,
                                        const SearchBudget& budget = SearchBudget{},
                                        int threads = 1);
SuiteReport suite_type2_positive_schur(int trials, uint64_t seed, int threads = 1);
SuiteReport suite_criteria_roundtrip(int trials, uint64_t seed, int threads = 1);

const std::vector<std::string>& suite_names();  // lr fl psi nakano type1 type2 criteria
SuiteReport run_suite(const std::string& name, int trials, uint64_t seed,
                      const SearchBudget& budget = SearchBudget{}, int threads = 1);

}  // namespace schurlab
