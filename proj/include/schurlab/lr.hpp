#pragma once

#include <map>
#include <utility>

#include "schurlab/partition.hpp"

namespace schurlab {

inline constexpr int kDefaultLrBound = 8;

// Littlewood-Richardson coefficients c^λ_{μν} for a fixed λ: the number of
// LR skew tableaux of shape λ/μ and content ν.  Only nonzero entries are
// stored; coeff() returns 0 for everything else.
struct LRTable {
    Partition lambda;
    std::map<std::pair<Partition, Partition>, long long> entries;

    long long coeff(const Partition& mu, const Partition& nu) const {
        auto it = entries.find({mu, nu});
        return it == entries.end() ? 0 : it->second;
    }
};

LRTable lr_coefficients(const Partition& lambda, int bound = kDefaultLrBound);

// Direct counter (lattice-word backtracking over the skew shape).
long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace schurlab
