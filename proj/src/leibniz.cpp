#include "fracleib/leibniz.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracleib/errors.hpp"
#include "fracleib/fracops.hpp"
#include "fracleib/specfun.hpp"

namespace fracleib {

SeriesEvaluation leibniz_series(const PowerSum& f, const PowerSum& g, double alpha, int K) {
    if (!(alpha > 0.0 && alpha < 2.0)) {
        throw DomainError("leibniz_series: order alpha = " + std::to_string(alpha) +
                          " is outside the supported range (0, 2)");
    }
    if (K < 0) {
        throw DomainError("leibniz_series: truncation K must be non-negative");
    }
    SeriesEvaluation out;
    out.alpha = alpha;
    out.K = K;
    out.terms.reserve(static_cast<size_t>(K) + 1);
    PowerSum dg = g;  // k-th classical derivative of g
    for (int k = 0; k <= K; ++k) {
        try {
            const PowerSum df = frac_diffint(f, alpha - k);
            const PowerSum term = scale(gen_binom(alpha, k), multiply(df, dg));
            out.terms.push_back(term);
            out.partial = add(out.partial, term);
        } catch (const DomainError& e) {
            throw DomainError("leibniz_series: term k = " + std::to_string(k) + ": " +
                              e.what());
        }
        dg = classical_derivative(dg);
    }
    out.terminated = g.is_polynomial() && g.degree() <= K;
    return out;
}

int default_truncation(const PowerSum& g, double alpha) {
    if (g.is_polynomial()) {
        return std::max(g.degree(), static_cast<int>(std::ceil(alpha)) + 2);
    }
    return 16;
}

DefectReport leibniz_defect(const OperatorSpec& op, const PowerSum& f, const PowerSum& g,
                            const std::vector<double>& points) {
    if (points.empty()) {
        throw DomainError("leibniz_defect: need at least one evaluation point");
    }
    for (double x : points) {
        if (!(x > 0.0)) {
            throw DomainError("leibniz_defect: point x = " + std::to_string(x) +
                              " must be positive");
        }
    }
    const double max_point = *std::max_element(points.begin(), points.end());
    const OpResult op_fg = apply_operator(op, multiply(f, g), max_point);
    const OpResult op_f = apply_operator(op, f, max_point);
    const OpResult op_g = apply_operator(op, g, max_point);

    DefectReport r;
    r.alpha = single_order(op);
    r.f = f;
    r.g = g;
    r.points = points;
    r.delta.reserve(points.size());
    for (double x : points) {
        const double d = op_fg.eval(x) - op_f.eval(x) * g.eval(x) - f.eval(x) * op_g.eval(x);
        r.delta.push_back(d);
        r.max_abs = std::max(r.max_abs, std::fabs(d));
    }
    return r;
}

std::vector<double> default_defect_points() { return geometric_grid(0.2, 5.0, 20); }

}  // namespace fracleib
