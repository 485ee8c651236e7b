#include "fracleib/power_sum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracleib/errors.hpp"

namespace fracleib {

namespace {

std::vector<PowerTerm> canonicalize(std::vector<PowerTerm> terms) {
    std::sort(terms.begin(), terms.end(), [](const PowerTerm& a, const PowerTerm& b) {
        return a.exponent < b.exponent;
    });
    std::vector<PowerTerm> out;
    out.reserve(terms.size());
    for (const PowerTerm& t : terms) {
        if (!std::isfinite(t.coeff) || !std::isfinite(t.exponent)) {
            throw DomainError("PowerSum: non-finite coefficient or exponent");
        }
        if (!out.empty() && std::fabs(t.exponent - out.back().exponent) <= kExponentMergeTol) {
            out.back().coeff += t.coeff;
            if (!std::isfinite(out.back().coeff)) {
                throw DomainError("PowerSum: non-finite coefficient or exponent");
            }
        } else {
            out.push_back(t);
        }
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const PowerTerm& t) { return t.coeff == 0.0; }),
              out.end());
    return out;
}

bool is_nonneg_integer(double e) {
    return e > -kExponentMergeTol && std::fabs(e - std::round(e)) <= kExponentMergeTol;
}

}  // namespace

PowerSum::PowerSum(std::vector<PowerTerm> terms) : terms_(canonicalize(std::move(terms))) {}

PowerSum PowerSum::constant(double c) { return PowerSum({{c, 0.0}}); }

PowerSum PowerSum::monomial(double coeff, double exponent) {
    return PowerSum({{coeff, exponent}});
}

bool PowerSum::is_polynomial() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const PowerTerm& t) { return is_nonneg_integer(t.exponent); });
}

int PowerSum::degree() const {
    if (!is_polynomial()) {
        throw DomainError("PowerSum::degree: not a polynomial");
    }
    if (terms_.empty()) {
        return 0;
    }
    return static_cast<int>(std::round(terms_.back().exponent));
}

bool PowerSum::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && std::fabs(terms_[0].exponent) <= kExponentMergeTol);
}

double PowerSum::constant_value() const {
    if (!is_constant()) {
        throw DomainError("PowerSum::constant_value: not a constant");
    }
    return terms_.empty() ? 0.0 : terms_[0].coeff;
}

bool PowerSum::has_negative_exponent() const {
    return !terms_.empty() && terms_.front().exponent < -kExponentMergeTol;
}

double PowerSum::eval(double x) const {
    if (!(x > 0.0)) {
        throw DomainError("PowerSum::eval: x = " + std::to_string(x) +
                          " is outside the domain (0, inf)");
    }
    double s = 0.0;
    for (const PowerTerm& t : terms_) {
        s += t.coeff * std::pow(x, t.exponent);
    }
    return s;
}

PowerSum add(const PowerSum& f, const PowerSum& g) {
    std::vector<PowerTerm> terms = f.terms();
    terms.insert(terms.end(), g.terms().begin(), g.terms().end());
    return PowerSum(std::move(terms));
}

PowerSum scale(double c, const PowerSum& f) {
    std::vector<PowerTerm> terms = f.terms();
    for (PowerTerm& t : terms) {
        t.coeff *= c;
    }
    return PowerSum(std::move(terms));
}

PowerSum multiply(const PowerSum& f, const PowerSum& g) {
    std::vector<PowerTerm> terms;
    terms.reserve(f.terms().size() * g.terms().size());
    for (const PowerTerm& a : f.terms()) {
        for (const PowerTerm& b : g.terms()) {
            terms.push_back({a.coeff * b.coeff, a.exponent + b.exponent});
        }
    }
    return PowerSum(std::move(terms));
}

PowerSum classical_derivative(const PowerSum& f, int n) {
    if (n < 0) {
        throw DomainError("classical_derivative: order must be non-negative");
    }
    PowerSum out = f;
    for (int i = 0; i < n; ++i) {
        std::vector<PowerTerm> terms;
        terms.reserve(out.terms().size());
        for (const PowerTerm& t : out.terms()) {
            if (std::fabs(t.exponent) <= kExponentMergeTol) {
                continue;  // constant term
            }
            terms.push_back({t.coeff * t.exponent, t.exponent - 1.0});
        }
        out = PowerSum(std::move(terms));
    }
    return out;
}

GridFunction::GridFunction(double step, std::vector<double> vals, bool clamped)
    : h(step), values(std::move(vals)), origin_clamped(clamped) {
    if (!(h > 0.0)) {
        throw DomainError("GridFunction: step h must be positive");
    }
    if (values.size() < 3) {
        throw DomainError("GridFunction: need at least 3 samples (N >= 2)");
    }
}

double GridFunction::value_at(double x) const {
    const double upper = last_index() * h;
    if (x < 0.0 || x > upper * (1.0 + 1e-12)) {
        throw DomainError("GridFunction::value_at: x = " + std::to_string(x) +
                          " is outside [0, " + std::to_string(upper) + "]");
    }
    const double u = std::min(x / h, static_cast<double>(last_index()));
    const int n = std::min(static_cast<int>(u), last_index() - 1);
    const double w = u - n;
    return (1.0 - w) * values[n] + w * values[n + 1];
}

GridFunction sample(const PowerSum& f, double h, int N) {
    if (!(h > 0.0)) {
        throw DomainError("sample: step h must be positive");
    }
    if (N < 2) {
        throw DomainError("sample: need N >= 2");
    }
    std::vector<double> vals(static_cast<size_t>(N) + 1);
    bool clamped = false;
    if (f.has_negative_exponent()) {
        vals[0] = 0.0;
        clamped = true;
    } else {
        // Only non-negative exponents: x^0 -> 1, x^(beta>0) -> 0 at x = 0.
        double v = 0.0;
        for (const PowerTerm& t : f.terms()) {
            if (std::fabs(t.exponent) <= kExponentMergeTol) {
                v += t.coeff;
            }
        }
        vals[0] = v;
    }
    for (int n = 1; n <= N; ++n) {
        vals[static_cast<size_t>(n)] = f.eval(n * h);
    }
    return GridFunction(h, std::move(vals), clamped);
}

Domain::Domain(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!(0.0 < lo && lo < hi)) {
        throw DomainError("Domain: require 0 < lo < hi, got [" + std::to_string(lo) +
                          ", " + std::to_string(hi) + "]");
    }
}

std::vector<double> geometric_grid(double lo, double hi, int n) {
    if (!(0.0 < lo && lo < hi)) {
        throw DomainError("geometric_grid: require 0 < lo < hi");
    }
    if (n < 2) {
        throw DomainError("geometric_grid: need at least 2 points");
    }
    std::vector<double> pts(static_cast<size_t>(n));
    const double ratio = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) {
        pts[static_cast<size_t>(i)] = lo * std::exp(ratio * i);
    }
    pts.front() = lo;
    pts.back() = hi;
    return pts;
}

}  // namespace fracleib
