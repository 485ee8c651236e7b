#pragma once

#include "fracleib/power_sum.hpp"

namespace fracleib {

// Riemann-Liouville derivative with lower terminal 0, term-wise power rule
//   D^alpha x^beta = Gamma(beta+1)/Gamma(beta-alpha+1) * x^(beta-alpha).
// alpha in (0, 2); every exponent of f must satisfy beta > -1. At alpha = 1
// this reproduces classical_derivative through the rgamma zeros.
PowerSum rl_derivative(const PowerSum& f, double alpha);

// Riemann-Liouville integral of order mu > 0 from terminal 0:
//   I^mu x^beta = Gamma(beta+1)/Gamma(beta+mu+1) * x^(beta+mu), beta > -1.
PowerSum rl_integral(const PowerSum& f, double mu);

// Signed differintegral: nu > 0 differentiates, nu < 0 integrates by -nu,
// nu = 0 is the identity.
PowerSum frac_diffint(const PowerSum& f, double nu);

// Caputo derivative of order alpha in (0, 1]. Constant terms map to 0;
// exponents beta > 0 follow the RL power rule. Exponents in (-1, 0) are
// rejected as unsupported.
PowerSum caputo_derivative(const PowerSum& f, double alpha);

// Gruenwald-Letnikov discretization on the sample grid, alpha in (0, 2):
//   output[n] = h^(-alpha) * sum_{k=0}^{n} (-1)^k C(alpha,k) f[n-k].
GridFunction gl_derivative(const GridFunction& f, double alpha);

}  // namespace fracleib
