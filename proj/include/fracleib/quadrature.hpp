#pragma once

#include <functional>

namespace fracleib {

inline constexpr double kQuadAbsTol = 1e-10;
inline constexpr int kQuadMaxSubdivisions = 1 << 15;

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = true;
};

// Adaptive Simpson integration of f over [a, b] to absolute tolerance.
// Stops refining once max_subdivisions interval splits have been spent and
// reports converged = false in that case.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol = kQuadAbsTol,
                           int max_subdivisions = kQuadMaxSubdivisions);

}  // namespace fracleib
