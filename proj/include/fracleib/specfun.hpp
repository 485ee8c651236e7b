#pragma once

namespace fracleib {

// Gamma function for real x, x not a non-positive integer.
// Lanczos approximation, relative error below 1e-13 on [-50, 50] away from
// the poles. Throws DomainError at 0, -1, -2, ...
double gamma(double x);

// Reciprocal Gamma, total on the reals: returns exactly 0 at the poles of
// Gamma (x = 0, -1, -2, ...). Every formula whose integer-order limit must
// vanish is routed through this function.
double rgamma(double x);

// log |Gamma(x)|, defined for x not a non-positive integer. Used where the
// Gamma factors would over- or underflow individually.
double log_abs_gamma(double x);

// sin(pi*x) with exact range reduction, accurate near integer x.
double sinpi(double x);

// Generalized binomial coefficient Gamma(alpha+1)/(Gamma(k+1)*Gamma(alpha-k+1)).
// Requires alpha > -1 and k >= 0. Exactly 1 at k = 0, exactly 0 when
// alpha - k + 1 is a non-positive integer (integer alpha truncation).
double gen_binom(double alpha, int k);

}  // namespace fracleib
