#pragma once

#include <utility>
#include <vector>

#include "fracleib/operator_spec.hpp"
#include "fracleib/power_sum.hpp"

namespace fracleib {

// Truncated generalized Leibniz series
//   sum_{k=0}^{K} C(alpha,k) (D^{alpha-k} f) (D^k g),
// where D^{alpha-k} integrates once alpha - k < 0.
struct SeriesEvaluation {
    double alpha = 0.0;
    int K = 0;
    std::vector<PowerSum> terms;  // k-th summand
    PowerSum partial;             // sum of terms[0..K]
    // True when g is a polynomial of degree <= K, so every later term is 0.
    bool terminated = false;
};

SeriesEvaluation leibniz_series(const PowerSum& f, const PowerSum& g, double alpha, int K);

// K = max(deg g, ceil(alpha) + 2) for polynomial g, otherwise 16; the series
// does not terminate for non-polynomial g and callers see the tail honestly.
int default_truncation(const PowerSum& g, double alpha);

// Pointwise residual of the product rule for a given operator:
//   Delta(x) = op(fg)(x) - op(f)(x) g(x) - f(x) op(g)(x).
struct DefectReport {
    double alpha = 0.0;  // NaN when the operator is composite
    PowerSum f;
    PowerSum g;
    std::vector<double> points;
    std::vector<double> delta;
    double max_abs = 0.0;
};

DefectReport leibniz_defect(const OperatorSpec& op, const PowerSum& f, const PowerSum& g,
                            const std::vector<double>& points);

// 20 geometrically spaced points in [0.2, 5]: covers the singular region
// near 0 and the growth region without touching the terminal.
std::vector<double> default_defect_points();

}  // namespace fracleib
