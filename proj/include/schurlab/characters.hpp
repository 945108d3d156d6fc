#pragma once

#include "schurlab/partition.hpp"
#include "schurlab/permutation.hpp"

namespace schurlab {

// Exact S_k character χ_λ evaluated on a cycle type (Murnaghan-Nakayama).
long long mn_character(const Partition& lambda, const Partition& cycle_type);

inline long long mn_character(const Partition& lambda, const Perm& sigma) {
    return mn_character(lambda, cycle_type(sigma));
}

// k! / ∏ (i^{m_i} m_i!) — size of the conjugacy class with the given type.
long long conjugacy_class_size(const Partition& cycle_type);

}  // namespace schurlab
