#include "fracleib/fracops.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "fracleib/errors.hpp"
#include "fracleib/specfun.hpp"

namespace fracleib {

namespace {

void check_derivative_order(double alpha, const char* who) {
    if (!(alpha > 0.0 && alpha < 2.0)) {
        throw DomainError(std::string(who) + ": order alpha = " + std::to_string(alpha) +
                          " is outside the supported range (0, 2)");
    }
}

std::string term_label(const PowerTerm& t) {
    return "coeff " + std::to_string(t.coeff) + ", exponent " + std::to_string(t.exponent);
}

// Shared power rule: x^beta -> Gamma(beta+1) rgamma(beta+shift+1) x^(beta+shift)
// with shift = -alpha for derivatives, +mu for integrals.
PowerSum power_rule(const PowerSum& f, double shift, const char* who) {
    std::vector<PowerTerm> terms;
    terms.reserve(f.terms().size());
    for (const PowerTerm& t : f.terms()) {
        if (!(t.exponent > -1.0)) {
            throw DomainError(std::string(who) + ": term (" + term_label(t) +
                              ") has exponent <= -1");
        }
        const double c = t.coeff * gamma(t.exponent + 1.0) * rgamma(t.exponent + shift + 1.0);
        terms.push_back({c, t.exponent + shift});
    }
    return PowerSum(std::move(terms));
}

}  // namespace

PowerSum rl_derivative(const PowerSum& f, double alpha) {
    check_derivative_order(alpha, "rl_derivative");
    return power_rule(f, -alpha, "rl_derivative");
}

PowerSum rl_integral(const PowerSum& f, double mu) {
    if (!(mu > 0.0)) {
        throw DomainError("rl_integral: order mu = " + std::to_string(mu) +
                          " must be positive");
    }
    return power_rule(f, mu, "rl_integral");
}

PowerSum frac_diffint(const PowerSum& f, double nu) {
    if (nu > 0.0) {
        return rl_derivative(f, nu);
    }
    if (nu < 0.0) {
        return rl_integral(f, -nu);
    }
    return f;
}

PowerSum caputo_derivative(const PowerSum& f, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw DomainError("caputo_derivative: order alpha = " + std::to_string(alpha) +
                          " is outside the supported range (0, 1]");
    }
    std::vector<PowerTerm> terms;
    terms.reserve(f.terms().size());
    for (const PowerTerm& t : f.terms()) {
        if (std::fabs(t.exponent) <= kExponentMergeTol) {
            continue;  // constants are annihilated
        }
        if (t.exponent < 0.0) {
            throw DomainError("caputo_derivative: term (" + term_label(t) +
                              ") has exponent in (-1, 0), unsupported for Caputo");
        }
        const double c = t.coeff * gamma(t.exponent + 1.0) * rgamma(t.exponent - alpha + 1.0);
        terms.push_back({c, t.exponent - alpha});
    }
    return PowerSum(std::move(terms));
}

GridFunction gl_derivative(const GridFunction& f, double alpha) {
    check_derivative_order(alpha, "gl_derivative");
    const int N = f.last_index();
    if (N < 2) {
        throw DomainError("gl_derivative: grid needs N >= 2");
    }
    // w[k] = (-1)^k C(alpha,k) via the standard recurrence; identical to the
    // gen_binom product but stable and O(1) per weight for long grids.
    std::vector<double> w(static_cast<size_t>(N) + 1);
    w[0] = 1.0;
    for (int k = 1; k <= N; ++k) {
        w[static_cast<size_t>(k)] =
            w[static_cast<size_t>(k) - 1] * (1.0 - (alpha + 1.0) / k);
    }
    const double scale = std::pow(f.h, -alpha);
    std::vector<double> out(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        double s = 0.0;
        for (int k = n; k >= 0; --k) {
            s += w[static_cast<size_t>(k)] * f.values[static_cast<size_t>(n - k)];
        }
        out[static_cast<size_t>(n)] = scale * s;
    }
    return GridFunction(f.h, std::move(out), f.origin_clamped);
}

}  // namespace fracleib
