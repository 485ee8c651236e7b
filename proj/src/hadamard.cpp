#include "fracleib/hadamard.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "fracleib/errors.hpp"

namespace fracleib {

namespace {

// Dense synthetic division keeps this bounded; parsed inputs can carry large
// integer exponents that belong on the quadrature path instead.
constexpr int kMaxExactDegree = 4096;

bool exact_eligible(const PowerSum& f) {
    return f.is_polynomial() && f.degree() <= kMaxExactDegree;
}

// Quotient of (f(x) - f(x0)) / (x - x0) for polynomial f, by synthetic
// division on dense coefficients.
PowerSum quotient_about(const PowerSum& f, double x0) {
    const int d = f.degree();
    if (d == 0) {
        return PowerSum();
    }
    std::vector<double> c(static_cast<size_t>(d) + 1, 0.0);
    for (const PowerTerm& t : f.terms()) {
        c[static_cast<size_t>(std::llround(t.exponent))] += t.coeff;
    }
    std::vector<double> b(static_cast<size_t>(d), 0.0);
    b[static_cast<size_t>(d) - 1] = c[static_cast<size_t>(d)];
    for (int k = d - 2; k >= 0; --k) {
        b[static_cast<size_t>(k)] = c[static_cast<size_t>(k) + 1] + x0 * b[static_cast<size_t>(k) + 1];
    }
    std::vector<PowerTerm> terms;
    terms.reserve(b.size());
    for (int k = 0; k < d; ++k) {
        terms.push_back({b[static_cast<size_t>(k)], static_cast<double>(k)});
    }
    return PowerSum(std::move(terms));
}

bool choose_exact(HadamardPath path, const PowerSum& f, const char* who) {
    switch (path) {
        case HadamardPath::Exact:
            if (!f.is_polynomial()) {
                throw DomainError(std::string(who) + ": exact path requires a polynomial");
            }
            if (f.degree() > kMaxExactDegree) {
                throw DomainError(std::string(who) + ": polynomial degree exceeds " +
                                  std::to_string(kMaxExactDegree) + " for the exact path");
            }
            return true;
        case HadamardPath::Quadrature:
            return false;
        case HadamardPath::Auto:
        default:
            return exact_eligible(f);
    }
}

void check_anchor(double x0, const Domain& domain, const char* who) {
    if (!domain.contains_interior(x0)) {
        throw DomainError(std::string(who) + ": anchor x0 = " + std::to_string(x0) +
                          " is not interior to [" + std::to_string(domain.lo) + ", " +
                          std::to_string(domain.hi) + "]");
    }
}

}  // namespace

Remainder Remainder::exact(PowerSum g) {
    Remainder r;
    r.exact_path_ = true;
    r.payload_ = std::move(g);
    return r;
}

Remainder Remainder::quadrature(PowerSum derivative, double x0, int order, double abs_tol) {
    if (order != 1 && order != 2) {
        throw DomainError("Remainder: order must be 1 or 2");
    }
    Remainder r;
    r.exact_path_ = false;
    r.payload_ = std::move(derivative);
    r.x0_ = x0;
    r.order_ = order;
    r.abs_tol_ = abs_tol;
    return r;
}

const PowerSum& Remainder::exact_form() const {
    if (!exact_path_) {
        throw DomainError("Remainder::exact_form: remainder is quadrature-backed");
    }
    return payload_;
}

double Remainder::eval(double x) const {
    if (exact_path_) {
        return payload_.eval(x);
    }
    if (x == x0_) {
        // The integral degenerates: order 1 gives f'(x0), order 2 gives
        // f''(x0) * int_0^1 (1-t) dt.
        return order_ == 1 ? payload_.eval(x0_) : 0.5 * payload_.eval(x0_);
    }
    const auto integrand = [this, x](double t) {
        const double arg = x0_ + (x - x0_) * t;
        const double v = payload_.eval(arg);
        return order_ == 1 ? v : (1.0 - t) * v;
    };
    const QuadratureResult r = integrate(integrand, 0.0, 1.0, abs_tol_);
    if (!r.converged) {
        throw ToleranceError("Hadamard remainder quadrature did not reach tolerance " +
                                 std::to_string(abs_tol_),
                             r.error_estimate);
    }
    return r.value;
}

double HadamardDecomposition::reconstruct(double x) const {
    const double d = x - x0;
    if (order == 1) {
        return f_at_x0 + d * remainder.eval(x);
    }
    return f_at_x0 + d * deriv_at_x0 + d * d * remainder.eval(x);
}

HadamardDecomposition hadamard_first(const PowerSum& f, double x0, const Domain& domain,
                                     HadamardPath path) {
    check_anchor(x0, domain, "hadamard_first");
    Remainder rem = choose_exact(path, f, "hadamard_first")
                        ? Remainder::exact(quotient_about(f, x0))
                        : Remainder::quadrature(classical_derivative(f), x0, 1);
    return {x0, f.eval(x0), 1, 0.0, std::move(rem)};
}

HadamardDecomposition hadamard_second(const PowerSum& f, double x0, const Domain& domain,
                                      HadamardPath path) {
    check_anchor(x0, domain, "hadamard_second");
    Remainder rem =
        choose_exact(path, f, "hadamard_second")
            // Decompose the first remainder again, exactly as the construction
            // prescribes: g(x) = g(x0) + (x - x0) g2(x) with g(x0) = f'(x0).
            ? Remainder::exact(quotient_about(quotient_about(f, x0), x0))
            // Collapsed form of the same two-step construction:
            // g2(x) = int_0^1 (1-t) f''(x0 + (x-x0)t) dt.
            : Remainder::quadrature(classical_derivative(f, 2), x0, 2);
    return {x0, f.eval(x0), 2, classical_derivative(f).eval(x0), std::move(rem)};
}

}  // namespace fracleib
