#pragma once

#include <vector>

#include "schurlab/partition.hpp"

namespace schurlab {

// One-line notation, 0-based: perm[i] is the image of i.
using Perm = std::vector<int>;

Perm perm_identity(int k);
Perm perm_compose(const Perm& s, const Perm& t);  // (s∘t)(i) = s(t(i))
Perm perm_inverse(const Perm& s);
int perm_sign(const Perm& s);
Partition cycle_type(const Perm& s);

// All k! permutations in lexicographic order of one-line notation.
std::vector<Perm> all_permutations(int k);

// Decomposition into adjacent transpositions s_i = (i, i+1), leftmost factor
// applied first:  s = s_{w_0} ∘ s_{w_1} ∘ ... read right-to-left as functions.
std::vector<int> adjacent_word(const Perm& s);

long factorial(int k);

}  // namespace schurlab
