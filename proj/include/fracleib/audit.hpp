#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fracleib/leibniz.hpp"
#include "fracleib/operator_spec.hpp"
#include "fracleib/power_sum.hpp"

namespace fracleib {

enum class Classification { FirstOrderLocal, NonLeibniz };

// "FIRST_ORDER_LOCAL" or "NON_LEIBNIZ"
std::string to_string(Classification c);

struct Witness {
    std::string kind;    // "pair" or "probe"
    std::string detail;  // e.g. "(x, x) at x = 1"
    // Signed defect for a pair witness; local-form residual for a probe
    // witness. |value| always equals the corresponding reported max.
    double value = 0.0;
};

struct SkippedCase {
    std::string what;
    std::string reason;
};

// b(x) = op(1) and a(x) = op(x) - x * op(1); exact for any operator of the
// form a(x) D^1 + b(x) (multiplication).
struct LocalFormExtract {
    OpResult op_one;
    OpResult op_x;

    double b_at(double x) const;
    double a_at(double x) const;

    bool exact() const;       // both parts grid-free
    PowerSum b_exact() const; // requires exact()
    PowerSum a_exact() const;
};

struct AuditReport {
    OperatorSpec spec;
    std::vector<PowerSum> probes;
    std::vector<std::pair<PowerSum, PowerSum>> pairs;
    std::vector<double> points;
    LocalFormExtract extract;
    double b_max = 0.0;
    double linearity_max_residual = 0.0;
    double local_form_max_residual = 0.0;
    double defect_max = 0.0;
    Classification classification = Classification::NonLeibniz;
    Witness witness;
    double tolerance = 0.0;
    std::vector<SkippedCase> skipped;
};

// Max over points of |op(c1 f + c2 g) - c1 op(f) - c2 op(g)|.
double check_linearity(const OperatorSpec& spec, const PowerSum& f, const PowerSum& g,
                       double c1, double c2, const std::vector<double>& points);

LocalFormExtract extract_local_form(const OperatorSpec& spec, const Domain& domain,
                                    const std::vector<double>& points);

std::vector<PowerSum> default_probes();                             // {1, x, x^2, x^3, x^0.5, x^1.5}
std::vector<std::pair<PowerSum, PowerSum>> default_pairs();         // unordered pairs of {1, x, x^2, x^0.5}
Domain default_audit_domain();                                      // [0.1, 6]
inline constexpr double kDefaultAuditTolerance = 1e-8;

// The decision procedure: linearity residual, local-form residual against
// the extracted a and b, Leibniz defect over the pairs, classification with
// a witness. Probes must include 1 and x. The verdict is scoped to the
// probe/pair/point sets recorded in the report. Probes a constituent
// operator rejects are recorded as skipped, never dropped silently.
// Grid-backed specs are judged with tolerance max(tol, 10 * finest step).
AuditReport classify(const OperatorSpec& spec, const std::vector<PowerSum>& probes,
                     const std::vector<std::pair<PowerSum, PowerSum>>& pairs,
                     const Domain& domain, const std::vector<double>& points, double tol);

// Defaults throughout.
AuditReport classify(const OperatorSpec& spec, double tol = kDefaultAuditTolerance);

}  // namespace fracleib
