#pragma once

#include "fracleib/power_sum.hpp"
#include "fracleib/quadrature.hpp"

namespace fracleib {

enum class HadamardPath { Auto, Exact, Quadrature };

// Remainder factor of a decomposition: an exact PowerSum when the input was
// polynomial, otherwise an integral evaluated on demand. Immutable, reentrant.
class Remainder {
public:
    static Remainder exact(PowerSum g);
    // order 1 integrates f'(x0 + (x-x0)t) over t in [0,1];
    // order 2 integrates (1-t) f''(x0 + (x-x0)t).
    static Remainder quadrature(PowerSum derivative, double x0, int order,
                                double abs_tol = kQuadAbsTol);

    bool is_exact() const noexcept { return exact_path_; }
    const PowerSum& exact_form() const;  // throws unless is_exact()

    double eval(double x) const;

private:
    Remainder() = default;

    bool exact_path_ = false;
    PowerSum payload_;  // g itself (exact) or the needed derivative (quadrature)
    double x0_ = 0.0;
    int order_ = 1;
    double abs_tol_ = kQuadAbsTol;
};

struct HadamardDecomposition {
    double x0 = 0.0;
    double f_at_x0 = 0.0;
    int order = 1;
    double deriv_at_x0 = 0.0;  // meaningful when order == 2
    Remainder remainder;

    // Rebuilds f(x) from the pieces; used to check the defining identity.
    double reconstruct(double x) const;
};

// f(x) = f(x0) + (x - x0) g(x); g exact by synthetic division for polynomial
// f, otherwise the integral form. x0 must lie in the interior of domain.
HadamardDecomposition hadamard_first(const PowerSum& f, double x0, const Domain& domain,
                                     HadamardPath path = HadamardPath::Auto);

// f(x) = f(x0) + (x - x0) f'(x0) + (x - x0)^2 g2(x), obtained by decomposing
// the first remainder again.
HadamardDecomposition hadamard_second(const PowerSum& f, double x0, const Domain& domain,
                                      HadamardPath path = HadamardPath::Auto);

}  // namespace fracleib
