#pragma once

#include <utility>

#include "wbinom/binomial.hpp"

namespace wbinom {

// Parameter set of the terminating very-well-poised elliptic summation;
// termination index n, balancing condition a^2 q^{n+1} = bcde.
struct EllipticParams {
    Cplx a, b, c, d, e, q, p;
    int n = 0;
};

// The e determined by the balancing condition from the other parameters.
Cplx balancing_e(Cplx a, Cplx b, Cplx c, Cplx d, Cplx q, int n);

// Throws BalancingViolation when a^2 q^{n+1} differs from bcde by more than
// tol relatively.
void check_balancing(const EllipticParams& P, double tol = 1e-12);

// (sum side, product side) of the terminating summation. p = 0 evaluates the
// basic (q-series) specialization. When term_scale is given it receives the
// sum of the term magnitudes: the scale that summation roundoff lives on,
// which callers use to reject draws too ill-conditioned to certify.
std::pair<Cplx, Cplx> v109_sides(const EllipticParams& P, double* term_scale = nullptr);

// LHS - RHS of one elliptic convolution identity, built entirely from the
// closed binomial form and the closed big-weight form (no recursion), with
// the far factor's parameters substituted for the table shift:
//   (ds,dt)  ~  a -> a q^{ds+2 dt},  b -> b q^{2 ds+dt}.
// term_scale (optional) receives |LHS| plus the sum of the RHS term
// magnitudes.
Cplx v109_convolution_delta(Cut which, Cplx a, Cplx b, Cplx q, Cplx p, int n, int m, int k_or_l,
                            double* term_scale = nullptr);

// The summation parameters whose v109_sides evaluation is the diagonal
// convolution at column k (cross-check substitution); balanced by
// construction.
EllipticParams v109_from_diagonal(Cplx a, Cplx b, Cplx q, Cplx p, int n, int m, int k);

// Draw-rejection screens: the smallest |theta| over every denominator
// argument the corresponding evaluation touches.
double v109_degeneracy_floor(const EllipticParams& P);
double elliptic_binom_degeneracy_floor(Cplx a, Cplx b, Cplx q, Cplx p, int n_max);
double elliptic_table_degeneracy_floor(Cplx a, Cplx b, Cplx q, Cplx p, int s_max, int t_max);

} // namespace wbinom
