#pragma once

#include <vector>

namespace fracleib {

// One monomial c * x^beta with real exponent beta.
struct PowerTerm {
    double coeff = 0.0;
    double exponent = 0.0;

    bool operator==(const PowerTerm&) const = default;
};

// Exponents closer than this are treated as equal when canonicalizing;
// Gamma-factor arithmetic reproduces exponents like beta - alpha + alpha
// with round-off.
inline constexpr double kExponentMergeTol = 1e-12;

// Finite sum of real-power monomials, kept canonical: exponents strictly
// increasing, near-equal exponents merged, zero coefficients dropped.
// The empty sum is the zero function. Immutable after construction.
class PowerSum {
public:
    PowerSum() = default;
    explicit PowerSum(std::vector<PowerTerm> terms);

    static PowerSum constant(double c);
    static PowerSum monomial(double coeff, double exponent);

    const std::vector<PowerTerm>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    // True when every exponent is a non-negative integer (within merge
    // tolerance). The zero sum counts as a polynomial of degree 0.
    bool is_polynomial() const;
    int degree() const;  // requires is_polynomial()

    bool is_constant() const;        // zero or a single exponent-0 term
    double constant_value() const;   // requires is_constant()

    // True when some term has a strictly negative exponent.
    bool has_negative_exponent() const;

    // Evaluates at x > 0; throws DomainError otherwise.
    double eval(double x) const;

    bool operator==(const PowerSum&) const = default;

private:
    std::vector<PowerTerm> terms_;
};

PowerSum add(const PowerSum& f, const PowerSum& g);
PowerSum scale(double c, const PowerSum& f);
PowerSum multiply(const PowerSum& f, const PowerSum& g);

// n-fold first derivative, term-wise beta * x^(beta-1). Constant terms vanish.
PowerSum classical_derivative(const PowerSum& f, int n = 1);

// Uniform samples at x_n = n*h, n = 0..N (so N+1 values), origin fixed at 0.
struct GridFunction {
    double h = 0.0;
    std::vector<double> values;
    // Set when the sample at x = 0 was recorded as 0 because the function
    // has a negative exponent there.
    bool origin_clamped = false;

    GridFunction() = default;
    GridFunction(double step, std::vector<double> vals, bool clamped = false);

    int last_index() const noexcept { return static_cast<int>(values.size()) - 1; }
    double x_at(int n) const noexcept { return n * h; }

    // Value at arbitrary x in [0, N*h] by linear interpolation between nodes.
    double value_at(double x) const;
};

// Samples f on the grid n*h, n = 0..N. Requires h > 0 and N >= 2. The value
// at n = 0 is 0 (and the grid flagged) when f has a negative exponent.
GridFunction sample(const PowerSum& f, double h, int N);

// Evaluation interval U contained in (0, inf).
struct Domain {
    double lo;
    double hi;

    Domain(double lo_, double hi_);
    bool contains_interior(double x) const noexcept { return lo < x && x < hi; }
};

// n points geometrically spaced from lo to hi inclusive; requires
// 0 < lo < hi and n >= 2.
std::vector<double> geometric_grid(double lo, double hi, int n);

}  // namespace fracleib
