#include "fracleib/quadrature.hpp"

#include <cmath>

#include "fracleib/errors.hpp"

namespace fracleib {

namespace {

class AdaptiveSimpson {
public:
    AdaptiveSimpson(const std::function<double(double)>& f, int max_splits)
        : f_(f), splits_left_(max_splits) {}

    double run(double a, double b, double tol) {
        const double m = 0.5 * (a + b);
        const double fa = f_(a);
        const double fm = f_(m);
        const double fb = f_(b);
        const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        return refine(a, b, fa, fm, fb, whole, tol);
    }

    double error() const noexcept { return err_; }
    bool converged() const noexcept { return ok_; }

private:
    double refine(double a, double b, double fa, double fm, double fb, double whole,
                  double tol) {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const double flm = f_(lm);
        const double frm = f_(rm);
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        const double halves = left + right;
        const double delta = halves - whole;
        // Richardson estimate: |halves - exact| ~= |delta| / 15 for Simpson.
        const bool at_resolution = !(a < lm && lm < m && m < rm && rm < b);
        if (std::fabs(delta) <= 15.0 * tol || at_resolution) {
            err_ += std::fabs(delta) / 15.0;
            if (at_resolution && std::fabs(delta) > 15.0 * tol) {
                ok_ = false;
            }
            return halves + delta / 15.0;
        }
        if (splits_left_ <= 0) {
            err_ += std::fabs(delta) / 15.0;
            ok_ = false;
            return halves + delta / 15.0;
        }
        --splits_left_;
        const double half_tol = 0.5 * tol;
        return refine(a, m, fa, flm, fm, left, half_tol) +
               refine(m, b, fm, frm, fb, right, half_tol);
    }

    const std::function<double(double)>& f_;
    int splits_left_;
    double err_ = 0.0;
    bool ok_ = true;
};

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol, int max_subdivisions) {
    if (!(abs_tol > 0.0)) {
        throw DomainError("integrate: absolute tolerance must be positive");
    }
    if (!(a <= b)) {
        throw DomainError("integrate: require a <= b");
    }
    if (a == b) {
        return {0.0, 0.0, true};
    }
    AdaptiveSimpson engine(f, max_subdivisions);
    const double value = engine.run(a, b, abs_tol);
    return {value, engine.error(), engine.converged()};
}

}  // namespace fracleib
