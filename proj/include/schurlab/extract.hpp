#pragma once

#include "schurlab/curvature.hpp"

namespace schurlab {

// Choi-style factor extraction for a type I split: verifies the cross terms
// vanish and the two block Gram matrices are PSD, then PSD-factorizes each
// block into unit-weight rank-one pieces.  The returned factorization
// reassembles R exactly through curvature_from_ab.
//
// U = [0,n) recovers the Nakano direction (A empty); U = {} the dual one.
ABFactorization extract_ab_factorization(const CurvatureTensor& R, const SplitSpec& split);

// Per-block extraction for a type II fiber split; A and B are embedded as in
// the block construction, so the reassembly closes exactly as well.
ABFactorization extract_type2_factorization(const CurvatureTensor& R, const SplitSpec& split);

}  // namespace schurlab
