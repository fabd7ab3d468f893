#pragma once

#include "wbinom/poly.hpp"

namespace wbinom {

// Contiguous block a_lo, ..., a_hi of kind-A variables; hi < lo means the
// empty variable set.
struct SymVarSet {
    int lo = 0;
    int hi = -1;

    int size() const { return hi < lo ? 0 : hi - lo + 1; }
};

// Complete homogeneous symmetric polynomial h_k(a_lo..a_hi), built by the
// two-term recursion in the number of variables. h_0 = 1 on any set (the
// empty one included); h_k vanishes on the empty set for k > 0.
SymPoly complete_h(int k, SymVarSet vars);

// Elementary symmetric polynomial e_k(a_lo..a_hi), same conventions; e_k
// vanishes whenever k exceeds the number of variables.
SymPoly elementary_e(int k, SymVarSet vars);

// Which of the six symmetric-function convolution identities to check.
enum class SymIdentity { H1, H2, SchurH, SchurE, E1, E2 };

// Compare every column of the CompleteSym ('h') or ElementarySym ('e')
// binomial row n against its symmetric-function closed form; returns the
// first nonzero difference (the zero polynomial on success).
SymPoly sym_binom_check(char family, int n);

// LHS - RHS of one convolution identity at the given sizes. The third
// parameter is the split point: the summation index cap k for H1/SchurE and
// the fixed line l or k for the other four.
SymPoly sym_identity_check(SymIdentity which, int n, int m, int k_or_l);

} // namespace wbinom
