#include "fracleib/audit.hpp"

#include <algorithm>
#include <cmath>

#include "fracleib/errors.hpp"
#include "fracleib/parser.hpp"

namespace fracleib {

std::string to_string(Classification c) {
    return c == Classification::FirstOrderLocal ? "FIRST_ORDER_LOCAL" : "NON_LEIBNIZ";
}

double LocalFormExtract::b_at(double x) const { return op_one.eval(x); }

double LocalFormExtract::a_at(double x) const { return op_x.eval(x) - x * op_one.eval(x); }

bool LocalFormExtract::exact() const { return op_one.pure_exact() && op_x.pure_exact(); }

PowerSum LocalFormExtract::b_exact() const {
    if (!exact()) {
        throw DomainError("LocalFormExtract: extraction is grid-backed, no exact form");
    }
    return op_one.exact_part();
}

PowerSum LocalFormExtract::a_exact() const {
    if (!exact()) {
        throw DomainError("LocalFormExtract: extraction is grid-backed, no exact form");
    }
    return add(op_x.exact_part(),
               scale(-1.0, multiply(PowerSum::monomial(1.0, 1.0), op_one.exact_part())));
}

double check_linearity(const OperatorSpec& spec, const PowerSum& f, const PowerSum& g,
                       double c1, double c2, const std::vector<double>& points) {
    if (points.empty()) {
        throw DomainError("check_linearity: need at least one evaluation point");
    }
    const double max_point = *std::max_element(points.begin(), points.end());
    const PowerSum comb = add(scale(c1, f), scale(c2, g));
    const OpResult op_comb = apply_operator(spec, comb, max_point);
    const OpResult op_f = apply_operator(spec, f, max_point);
    const OpResult op_g = apply_operator(spec, g, max_point);
    double worst = 0.0;
    for (double x : points) {
        const double r = std::fabs(op_comb.eval(x) - c1 * op_f.eval(x) - c2 * op_g.eval(x));
        worst = std::max(worst, r);
    }
    return worst;
}

LocalFormExtract extract_local_form(const OperatorSpec& spec, const Domain& domain,
                                    const std::vector<double>& points) {
    for (double x : points) {
        if (!(domain.lo <= x && x <= domain.hi)) {
            throw DomainError("extract_local_form: point " + format_real(x) +
                              " lies outside the domain");
        }
    }
    LocalFormExtract e;
    e.op_one = apply_operator(spec, PowerSum::constant(1.0), domain.hi);
    e.op_x = apply_operator(spec, PowerSum::monomial(1.0, 1.0), domain.hi);
    return e;
}

std::vector<PowerSum> default_probes() {
    return {PowerSum::constant(1.0),       PowerSum::monomial(1.0, 1.0),
            PowerSum::monomial(1.0, 2.0),  PowerSum::monomial(1.0, 3.0),
            PowerSum::monomial(1.0, 0.5),  PowerSum::monomial(1.0, 1.5)};
}

std::vector<std::pair<PowerSum, PowerSum>> default_pairs() {
    const std::vector<PowerSum> base = {PowerSum::constant(1.0), PowerSum::monomial(1.0, 1.0),
                                        PowerSum::monomial(1.0, 2.0),
                                        PowerSum::monomial(1.0, 0.5)};
    std::vector<std::pair<PowerSum, PowerSum>> out;
    for (size_t i = 0; i < base.size(); ++i) {
        for (size_t j = i; j < base.size(); ++j) {
            out.emplace_back(base[i], base[j]);
        }
    }
    return out;
}

Domain default_audit_domain() { return Domain(0.1, 6.0); }

namespace {

bool contains_probe(const std::vector<PowerSum>& probes, const PowerSum& p) {
    return std::any_of(probes.begin(), probes.end(),
                       [&p](const PowerSum& q) { return q == p; });
}

std::string pair_label(const std::pair<PowerSum, PowerSum>& pr) {
    return "(" + format_power_sum(pr.first) + ", " + format_power_sum(pr.second) + ")";
}

}  // namespace

AuditReport classify(const OperatorSpec& spec, const std::vector<PowerSum>& probes,
                     const std::vector<std::pair<PowerSum, PowerSum>>& pairs,
                     const Domain& domain, const std::vector<double>& points, double tol) {
    if (points.empty()) {
        throw DomainError("classify: need at least one evaluation point");
    }
    if (!(tol > 0.0)) {
        throw DomainError("classify: tolerance must be positive");
    }
    if (!contains_probe(probes, PowerSum::constant(1.0)) ||
        !contains_probe(probes, PowerSum::monomial(1.0, 1.0))) {
        throw DomainError("classify: probe set must include 1 and x");
    }

    AuditReport rep;
    rep.spec = spec;
    rep.probes = probes;
    rep.pairs = pairs;
    rep.points = points;
    rep.tolerance = uses_grid(spec) ? std::max(tol, 10.0 * finest_step(spec)) : tol;
    rep.extract = extract_local_form(spec, domain, points);

    for (double x : points) {
        rep.b_max = std::max(rep.b_max, std::fabs(rep.extract.b_at(x)));
    }

    for (const auto& pr : pairs) {
        try {
            const double r = check_linearity(spec, pr.first, pr.second, 2.0, -3.0, points);
            rep.linearity_max_residual = std::max(rep.linearity_max_residual, r);
        } catch (const DomainError& e) {
            rep.skipped.push_back({"linearity pair " + pair_label(pr), e.what()});
        }
    }

    const double max_point = *std::max_element(points.begin(), points.end());
    Witness probe_witness;
    bool have_probe = false;
    for (const PowerSum& f : probes) {
        try {
            const OpResult op_f = apply_operator(spec, f, max_point);
            const PowerSum df = classical_derivative(f);
            for (double x : points) {
                const double r = std::fabs(op_f.eval(x) - rep.extract.a_at(x) * df.eval(x) -
                                           rep.extract.b_at(x) * f.eval(x));
                if (!have_probe || r > rep.local_form_max_residual) {
                    probe_witness = {"probe",
                                     format_power_sum(f) + " at x = " + format_real(x), r};
                    have_probe = true;
                }
                rep.local_form_max_residual = std::max(rep.local_form_max_residual, r);
            }
        } catch (const DomainError& e) {
            rep.skipped.push_back({"probe " + format_power_sum(f), e.what()});
        }
    }

    Witness pair_witness;
    bool have_pair = false;
    for (const auto& pr : pairs) {
        try {
            const DefectReport d = leibniz_defect(spec, pr.first, pr.second, points);
            for (size_t i = 0; i < d.points.size(); ++i) {
                if (!have_pair || std::fabs(d.delta[i]) > std::fabs(pair_witness.value)) {
                    pair_witness = {"pair",
                                    pair_label(pr) + " at x = " + format_real(d.points[i]),
                                    d.delta[i]};
                    have_pair = true;
                }
            }
        } catch (const DomainError& e) {
            rep.skipped.push_back({"pair " + pair_label(pr), e.what()});
        }
    }
    if (have_pair) {
        rep.defect_max = std::fabs(pair_witness.value);
    }

    rep.classification = rep.local_form_max_residual < rep.tolerance
                             ? Classification::FirstOrderLocal
                             : Classification::NonLeibniz;
    if (rep.classification == Classification::NonLeibniz && have_pair) {
        rep.witness = pair_witness;
    } else {
        rep.witness = probe_witness;
        rep.witness.value = rep.local_form_max_residual;
    }
    return rep;
}

AuditReport classify(const OperatorSpec& spec, double tol) {
    return classify(spec, default_probes(), default_pairs(), default_audit_domain(),
                    default_defect_points(), tol);
}

}  // namespace fracleib
