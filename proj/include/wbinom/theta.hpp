#pragma once

#include <initializer_list>
#include <span>

#include "wbinom/types.hpp"

namespace wbinom {

// Denominator theta factors with modulus below this raise EllipticDegenerate.
inline constexpr double kThetaDegeneracyEps = 1e-13;

// Truncation order for the modified theta product at nome modulus |p|:
// the tail is O(|p|^N), so N = ceil(ln(eps)/ln|p|) + 2 with eps = 1e-17.
int theta_truncation_terms(double abs_p, double eps = 1e-17);

// theta(x; p) = prod_{k>=0} (1 - x p^k)(1 - p^{k+1}/x), truncated as above.
// Requires x != 0 and |p| < 1; theta(x; 0) = 1 - x exactly.
Cplx theta(Cplx x, Cplx p);
// Same product stopped after a caller-chosen number of terms (exposed so the
// truncation rule itself can be validated).
Cplx theta_truncated(Cplx x, Cplx p, int terms);
// Shorthand for a product of theta values at the same nome.
Cplx theta(std::initializer_list<Cplx> args, Cplx p);

// prod theta(num_i) / prod theta(den_i), multiplied factor-ratio-wise to keep
// intermediate magnitudes tame. Raises EllipticDegenerate when a denominator
// theta has modulus below kThetaDegeneracyEps.
Cplx theta_ratio(std::span<const Cplx> num, std::span<const Cplx> den, Cplx p);

// Relative residual of the three-term addition rule
//   theta(xy, x/y, uv, u/v) - theta(xv, x/v, uy, u/y) - (u/y) theta(yv, y/v, xu, x/u),
// normalized by max(1, |first product|).
double theta_addition_residual(Cplx x, Cplx y, Cplx u, Cplx v, Cplx p);

// Theta-shifted factorial (a; q, p)_n for any integer n:
//   n > 0 : prod_{k=0}^{n-1} theta(a q^k)
//   n = 0 : 1
//   n < 0 : 1 / prod_{k=0}^{-n-1} theta(a q^{n+k})  (DegenerateParameter if a
//           denominator factor vanishes)
// At p = 0 the theta factors reduce to (1 - a q^k), and a = 0 is legal.
Cplx qp_factorial(Cplx a, Cplx q, Cplx p, int n);
Cplx qp_factorial(std::initializer_list<Cplx> args, Cplx q, Cplx p, int n);

// prod (num_i; q, p)_n / prod (den_i; q, p)_n evaluated ratio-wise.
Cplx qp_factorial_ratio(std::span<const Cplx> num, std::span<const Cplx> den, Cplx q, Cplx p,
                        int n);

} // namespace wbinom
