#pragma once

#include <cstdint>

#include "schurlab/eig.hpp"

namespace schurlab {

// Shared knobs for the sampled minimizations (Griffiths directions, weak
// positivity).  Counterexamples found within a budget are certified exactly;
// their absence is only ever reported as sampled evidence.
struct SearchBudget {
    int restarts = 64;
    int sweeps = 200;
    long samples = 1000;
    uint64_t seed = 0;
    double improve_tol = 1e-12;
    double cutoff_rel = kDefaultCutoffRel;
};

struct SampleStats {
    int restarts = 0;
    long samples = 0;
    uint64_t seed = 0;
};

}  // namespace schurlab
