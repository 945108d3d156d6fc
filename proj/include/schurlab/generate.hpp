#pragma once

#include <cstdint>
#include <optional>

#include "schurlab/curvature.hpp"
#include "schurlab/rng.hpp"

namespace schurlab {

enum class PositivityClass { Nakano, DualNakano, TypeI, TypeII, Decomposable };

const char* to_string(PositivityClass c);
std::optional<PositivityClass> positivity_class_from_string(const std::string& s);

struct GenResult {
    CurvatureTensor R;
    ABFactorization F;
    SplitSpec split;
};

// Seeded constructors for each positivity class.
//
// Nakano: A = 0, rank(B flattened) = r n.  DualNakano: B = 0, rank(A) = r n.
// TypeI: B supported on the U axes, A on the complement, both flattened
// matrices of full restricted rank; the span condition holds by coordinate
// disjointness.  TypeII: block curvature, Nakano block on the chosen fibers,
// dual Nakano on the complement, zero cross blocks.  Decomposable: free A and
// B, resampled until the sampled Griffiths minimum is strictly positive.
GenResult generate(PositivityClass cls, int n, int r, uint64_t seed,
                   std::optional<SplitSpec> split = std::nullopt);

// Hermitian curvature with unconstrained random entries (identity suites).
CurvatureTensor random_hermitian_curvature(int n, int r, RngStream& rng);

// Random real (k,k)-form: a rational combination of i^{k²} α∧ᾱ pieces and
// Hermitian-symmetrized noise.  Not positive in general.
Form random_real_form(int n, int k, RngStream& rng);

}  // namespace schurlab
