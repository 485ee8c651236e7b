#include "fracleib/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fracleib/audit.hpp"
#include "fracleib/errors.hpp"
#include "fracleib/fracops.hpp"
#include "fracleib/hadamard.hpp"
#include "fracleib/leibniz.hpp"
#include "fracleib/operator_spec.hpp"
#include "fracleib/parser.hpp"
#include "fracleib/power_sum.hpp"

namespace fracleib {

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

std::string json_str(const std::string& s) { return "\"" + json_escape(s) + "\""; }

std::string json_num(double v) {
    if (!std::isfinite(v)) {
        return "null";
    }
    return format_real(v);
}

std::string json_array(const std::vector<double>& v) {
    std::string out = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) {
            out += ", ";
        }
        out += json_num(v[i]);
    }
    return out + "]";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') {
            out += "\"\"";
        }
        out += ch;
    }
    return out + "\"";
}

std::vector<double> parse_point_list(const std::vector<double>& pts, const char* who) {
    if (pts.empty()) {
        throw DomainError(std::string(who) + ": need at least one point");
    }
    for (double x : pts) {
        if (!(x > 0.0)) {
            throw DomainError(std::string(who) + ": point " + format_real(x) +
                              " must be positive");
        }
    }
    return pts;
}

struct Config {
    std::string op_text;
    std::string fn_text;
    std::string f_text;
    std::string g_text;
    std::vector<double> points;
    std::string grid_text;
    double alpha = 0.5;
    int K = -1;  // -1 = use default truncation
    double x0 = 1.0;
    int order = 1;
    std::string path_text = "auto";
    std::string domain_text = "0.1,6";
    double x = 1.0;
    std::vector<double> h_ladder;
    std::vector<std::string> extra_probes;
    double tol = -1.0;  // -1 = unset (env or built-in default)
    std::string format = "text";
    std::string out_path;
};

double resolve_tolerance(const Config& cfg) {
    if (cfg.tol > 0.0) {
        return cfg.tol;
    }
    if (const char* env = std::getenv("FRACLEIB_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
            throw DomainError(std::string("FRACLEIB_TOL is not a positive number: '") + env +
                              "'");
        }
        return v;
    }
    return kDefaultAuditTolerance;
}

std::pair<double, double> parse_two_reals(const std::string& text, const char* who) {
    const size_t comma = text.find(',');
    if (comma == std::string::npos) {
        throw DomainError(std::string(who) + ": expected 'A,B', got '" + text + "'");
    }
    char* end = nullptr;
    const std::string first = text.substr(0, comma);
    const std::string second = text.substr(comma + 1);
    const double a = std::strtod(first.c_str(), &end);
    if (end != first.c_str() + first.size() || first.empty()) {
        throw DomainError(std::string(who) + ": bad number '" + first + "'");
    }
    const double b = std::strtod(second.c_str(), &end);
    if (end != second.c_str() + second.size() || second.empty()) {
        throw DomainError(std::string(who) + ": bad number '" + second + "'");
    }
    return {a, b};
}

void emit(const Config& cfg, const std::string& payload, std::ostream& out) {
    if (cfg.out_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
        throw DomainError("cannot open output file '" + cfg.out_path + "'");
    }
    file << payload;
    if (!file.good()) {
        throw DomainError("failed writing output file '" + cfg.out_path + "'");
    }
}

// ---- deriv ----------------------------------------------------------------

void run_deriv(const Config& cfg, std::ostream& out) {
    const OperatorSpec op = parse_operator(cfg.op_text);
    const PowerSum fn = parse_function(cfg.fn_text);

    std::vector<double> points;
    if (!cfg.grid_text.empty()) {
        const auto [h, n_real] = parse_two_reals(cfg.grid_text, "--grid");
        const int n = static_cast<int>(n_real);
        if (!(h > 0.0) || n < 1 || static_cast<double>(n) != n_real) {
            throw DomainError("--grid: expected positive step and integer count 'H,N'");
        }
        if (n > 1000000) {
            throw DomainError("--grid: more than 1000000 points requested");
        }
        points.reserve(static_cast<size_t>(n));
        for (int k = 1; k <= n; ++k) {
            points.push_back(k * h);
        }
    } else {
        points = parse_point_list(cfg.points.empty() ? std::vector<double>{0.5, 1.0, 2.0}
                                                     : cfg.points,
                                  "deriv");
    }

    const double max_point = *std::max_element(points.begin(), points.end());
    const OpResult result = apply_operator(op, fn, max_point);
    std::vector<double> values;
    values.reserve(points.size());
    for (double x : points) {
        values.push_back(result.eval(x));
    }
    const bool exact = result.pure_exact();
    const std::string result_text = exact ? format_power_sum(result.exact_part()) : "";

    std::ostringstream s;
    if (cfg.format == "json") {
        s << "{\n";
        s << "  \"op\": " << json_str(format_operator(op)) << ",\n";
        s << "  \"fn\": " << json_str(format_power_sum(fn)) << ",\n";
        s << "  \"result\": " << (exact ? json_str(result_text) : std::string("null")) << ",\n";
        s << "  \"points\": " << json_array(points) << ",\n";
        s << "  \"values\": " << json_array(values) << "\n";
        s << "}\n";
    } else if (cfg.format == "csv") {
        s << "x,value\n";
        for (size_t i = 0; i < points.size(); ++i) {
            s << format_real(points[i]) << "," << format_real(values[i]) << "\n";
        }
    } else {
        s << "op: " << format_operator(op) << "\n";
        s << "fn: " << format_power_sum(fn) << "\n";
        if (exact) {
            s << "result: " << result_text << "\n";
        } else {
            s << "result: grid-backed (values below)\n";
        }
        s << "x value\n";
        for (size_t i = 0; i < points.size(); ++i) {
            s << format_real(points[i]) << " " << format_real(values[i]) << "\n";
        }
    }
    emit(cfg, s.str(), out);
}

// ---- defect ---------------------------------------------------------------

void run_defect(const Config& cfg, std::ostream& out) {
    const OperatorSpec op = parse_operator(cfg.op_text);
    const PowerSum f = parse_function(cfg.f_text);
    const PowerSum g = parse_function(cfg.g_text);
    const std::vector<double> points =
        cfg.points.empty() ? default_defect_points() : parse_point_list(cfg.points, "defect");

    const DefectReport rep = leibniz_defect(op, f, g, points);

    std::ostringstream s;
    if (cfg.format == "json") {
        s << "{\n";
        s << "  \"alpha\": " << json_num(rep.alpha) << ",\n";
        s << "  \"f\": " << json_str(format_power_sum(rep.f)) << ",\n";
        s << "  \"g\": " << json_str(format_power_sum(rep.g)) << ",\n";
        s << "  \"points\": " << json_array(rep.points) << ",\n";
        s << "  \"delta\": " << json_array(rep.delta) << ",\n";
        s << "  \"max_abs\": " << json_num(rep.max_abs) << "\n";
        s << "}\n";
    } else if (cfg.format == "csv") {
        s << "x,delta\n";
        for (size_t i = 0; i < rep.points.size(); ++i) {
            s << format_real(rep.points[i]) << "," << format_real(rep.delta[i]) << "\n";
        }
    } else {
        s << "op: " << format_operator(op) << "\n";
        s << "f: " << format_power_sum(rep.f) << "\n";
        s << "g: " << format_power_sum(rep.g) << "\n";
        s << "x delta\n";
        for (size_t i = 0; i < rep.points.size(); ++i) {
            s << format_real(rep.points[i]) << " " << format_real(rep.delta[i]) << "\n";
        }
        s << "max |delta|: " << format_real(rep.max_abs) << "\n";
    }
    emit(cfg, s.str(), out);
}

// ---- series ---------------------------------------------------------------

void run_series(const Config& cfg, std::ostream& out) {
    const PowerSum f = parse_function(cfg.f_text);
    const PowerSum g = parse_function(cfg.g_text);
    const std::vector<double> points = parse_point_list(
        cfg.points.empty() ? std::vector<double>{0.5, 1.0, 2.0} : cfg.points, "series");
    const int K = cfg.K >= 0 ? cfg.K : default_truncation(g, cfg.alpha);

    const SeriesEvaluation ev = leibniz_series(f, g, cfg.alpha, K);

    std::vector<double> term_max(ev.terms.size(), 0.0);
    for (size_t k = 0; k < ev.terms.size(); ++k) {
        for (double x : points) {
            term_max[k] = std::max(term_max[k], std::fabs(ev.terms[k].eval(x)));
        }
    }
    std::vector<double> partial_values;
    partial_values.reserve(points.size());
    for (double x : points) {
        partial_values.push_back(ev.partial.eval(x));
    }
    const double tail = term_max.empty() ? 0.0 : term_max.back();

    // Reference: the same derivative computed directly on the product, when
    // the product is inside the operator's domain.
    bool have_exact = true;
    PowerSum exact;
    std::vector<double> exact_values;
    try {
        exact = rl_derivative(multiply(f, g), cfg.alpha);
        for (double x : points) {
            exact_values.push_back(exact.eval(x));
        }
    } catch (const DomainError&) {
        have_exact = false;
        exact_values.clear();
    }

    std::ostringstream s;
    if (cfg.format == "json") {
        s << "{\n";
        s << "  \"alpha\": " << json_num(ev.alpha) << ",\n";
        s << "  \"f\": " << json_str(format_power_sum(f)) << ",\n";
        s << "  \"g\": " << json_str(format_power_sum(g)) << ",\n";
        s << "  \"K\": " << ev.K << ",\n";
        s << "  \"terminated\": " << (ev.terminated ? "true" : "false") << ",\n";
        s << "  \"terms\": [\n";
        for (size_t k = 0; k < ev.terms.size(); ++k) {
            s << "    {\"k\": " << k << ", \"term\": " << json_str(format_power_sum(ev.terms[k]))
              << ", \"max_abs\": " << json_num(term_max[k]) << "}"
              << (k + 1 < ev.terms.size() ? "," : "") << "\n";
        }
        s << "  ],\n";
        s << "  \"partial\": " << json_str(format_power_sum(ev.partial)) << ",\n";
        s << "  \"points\": " << json_array(points) << ",\n";
        s << "  \"partial_values\": " << json_array(partial_values) << ",\n";
        s << "  \"exact\": " << (have_exact ? json_str(format_power_sum(exact)) : "null")
          << ",\n";
        s << "  \"exact_values\": " << json_array(exact_values) << ",\n";
        s << "  \"tail_magnitude\": " << json_num(tail) << "\n";
        s << "}\n";
    } else if (cfg.format == "csv") {
        s << "k,term,max_abs\n";
        for (size_t k = 0; k < ev.terms.size(); ++k) {
            s << k << "," << csv_field(format_power_sum(ev.terms[k])) << ","
              << format_real(term_max[k]) << "\n";
        }
    } else {
        s << "alpha: " << format_real(ev.alpha) << "\n";
        s << "f: " << format_power_sum(f) << "\n";
        s << "g: " << format_power_sum(g) << "\n";
        s << "K: " << ev.K << "\n";
        s << "terminated: " << (ev.terminated ? "true" : "false") << "\n";
        s << "k term max|term|\n";
        for (size_t k = 0; k < ev.terms.size(); ++k) {
            s << k << " " << format_power_sum(ev.terms[k]) << " " << format_real(term_max[k])
              << "\n";
        }
        s << "partial: " << format_power_sum(ev.partial) << "\n";
        s << "x partial";
        if (have_exact) {
            s << " exact";
        }
        s << "\n";
        for (size_t i = 0; i < points.size(); ++i) {
            s << format_real(points[i]) << " " << format_real(partial_values[i]);
            if (have_exact) {
                s << " " << format_real(exact_values[i]);
            }
            s << "\n";
        }
        if (have_exact) {
            s << "direct derivative of f*g: " << format_power_sum(exact) << "\n";
        }
        if (!ev.terminated) {
            s << "tail magnitude |term K|: " << format_real(tail)
              << " (series truncated, no convergence claim)\n";
        }
    }
    emit(cfg, s.str(), out);
}

// ---- audit ----------------------------------------------------------------

void run_audit(const Config& cfg, std::ostream& out) {
    const OperatorSpec op = parse_operator(cfg.op_text);
    const double tol = resolve_tolerance(cfg);
    std::vector<PowerSum> probes = default_probes();
    for (const std::string& text : cfg.extra_probes) {
        probes.push_back(parse_function(text));
    }
    const std::vector<double> points =
        cfg.points.empty() ? default_defect_points() : parse_point_list(cfg.points, "audit");

    const AuditReport rep =
        classify(op, probes, default_pairs(), default_audit_domain(), points, tol);

    std::ostringstream s;
    if (cfg.format == "json") {
        s << "{\n";
        s << "  \"spec\": " << json_str(format_operator(rep.spec)) << ",\n";
        s << "  \"classification\": " << json_str(to_string(rep.classification)) << ",\n";
        s << "  \"b_max\": " << json_num(rep.b_max) << ",\n";
        s << "  \"linearity_residual\": " << json_num(rep.linearity_max_residual) << ",\n";
        s << "  \"local_form_residual\": " << json_num(rep.local_form_max_residual) << ",\n";
        s << "  \"defect_max\": " << json_num(rep.defect_max) << ",\n";
        s << "  \"witness\": {\"kind\": " << json_str(rep.witness.kind)
          << ", \"detail\": " << json_str(rep.witness.detail)
          << ", \"value\": " << json_num(rep.witness.value) << "},\n";
        s << "  \"tolerance\": " << json_num(rep.tolerance) << "\n";
        s << "}\n";
    } else if (cfg.format == "csv") {
        s << "spec,classification,b_max,linearity_residual,local_form_residual,defect_max,"
             "witness_kind,witness_detail,witness_value,tolerance\n";
        s << csv_field(format_operator(rep.spec)) << "," << to_string(rep.classification) << ","
          << format_real(rep.b_max) << "," << format_real(rep.linearity_max_residual) << ","
          << format_real(rep.local_form_max_residual) << "," << format_real(rep.defect_max)
          << "," << csv_field(rep.witness.kind) << "," << csv_field(rep.witness.detail) << ","
          << format_real(rep.witness.value) << "," << format_real(rep.tolerance) << "\n";
    } else {
        s << "spec: " << format_operator(rep.spec) << "\n";
        s << "classification: " << to_string(rep.classification) << "\n";
        if (rep.extract.exact()) {
            s << "b = op(1): " << format_power_sum(rep.extract.b_exact()) << "\n";
            s << "a = op(x) - x*op(1): " << format_power_sum(rep.extract.a_exact()) << "\n";
        } else {
            s << "b = op(1): grid-backed\n";
            s << "a = op(x) - x*op(1): grid-backed\n";
        }
        s << "max |b| on points: " << format_real(rep.b_max) << "\n";
        s << "linearity residual: " << format_real(rep.linearity_max_residual) << "\n";
        s << "local-form residual: " << format_real(rep.local_form_max_residual) << "\n";
        s << "Leibniz defect max: " << format_real(rep.defect_max) << "\n";
        s << "witness: " << rep.witness.kind << " " << rep.witness.detail << " -> "
          << format_real(rep.witness.value) << "\n";
        s << "tolerance: " << format_real(rep.tolerance) << "\n";
        s << "probes: ";
        for (size_t i = 0; i < rep.probes.size(); ++i) {
            s << (i ? ", " : "") << format_power_sum(rep.probes[i]);
        }
        s << "\n";
        for (const SkippedCase& sk : rep.skipped) {
            s << "skipped: " << sk.what << " (" << sk.reason << ")\n";
        }
    }
    emit(cfg, s.str(), out);
}

// ---- hadamard ---------------------------------------------------------------

void run_hadamard(const Config& cfg, std::ostream& out) {
    const PowerSum fn = parse_function(cfg.fn_text);
    const auto [lo, hi] = parse_two_reals(cfg.domain_text, "--domain");
    const Domain domain(lo, hi);
    HadamardPath path = HadamardPath::Auto;
    if (cfg.path_text == "exact") {
        path = HadamardPath::Exact;
    } else if (cfg.path_text == "quadrature") {
        path = HadamardPath::Quadrature;
    } else if (cfg.path_text != "auto") {
        throw DomainError("--path must be auto, exact, or quadrature");
    }
    if (cfg.order != 1 && cfg.order != 2) {
        throw DomainError("--order must be 1 or 2");
    }
    std::vector<double> points;
    if (cfg.points.empty()) {
        for (double x : default_defect_points()) {
            if (domain.lo <= x && x <= domain.hi) {
                points.push_back(x);
            }
        }
        if (points.empty()) {
            points.push_back(cfg.x0);
        }
    } else {
        points = parse_point_list(cfg.points, "hadamard");
        for (double x : points) {
            if (!(domain.lo <= x && x <= domain.hi)) {
                throw DomainError("hadamard: point " + format_real(x) +
                                  " lies outside the domain");
            }
        }
    }

    const HadamardDecomposition dec = cfg.order == 1 ? hadamard_first(fn, cfg.x0, domain, path)
                                                     : hadamard_second(fn, cfg.x0, domain, path);

    std::vector<double> rem_values;
    std::vector<double> recon;
    std::vector<double> fvals;
    std::vector<double> residuals;
    double max_residual = 0.0;
    for (double x : points) {
        rem_values.push_back(dec.remainder.eval(x));
        recon.push_back(dec.reconstruct(x));
        fvals.push_back(fn.eval(x));
        residuals.push_back(std::fabs(recon.back() - fvals.back()));
        max_residual = std::max(max_residual, residuals.back());
    }
    const bool exact = dec.remainder.is_exact();
    const std::string rem_text = exact ? format_power_sum(dec.remainder.exact_form()) : "";

    std::ostringstream s;
    if (cfg.format == "json") {
        s << "{\n";
        s << "  \"fn\": " << json_str(format_power_sum(fn)) << ",\n";
        s << "  \"x0\": " << json_num(dec.x0) << ",\n";
        s << "  \"order\": " << dec.order << ",\n";
        s << "  \"f_at_x0\": " << json_num(dec.f_at_x0) << ",\n";
        s << "  \"deriv_at_x0\": "
          << (dec.order == 2 ? json_num(dec.deriv_at_x0) : std::string("null")) << ",\n";
        s << "  \"remainder\": " << (exact ? json_str(rem_text) : std::string("null")) << ",\n";
        s << "  \"points\": " << json_array(points) << ",\n";
        s << "  \"remainder_values\": " << json_array(rem_values) << ",\n";
        s << "  \"reconstruction\": " << json_array(recon) << ",\n";
        s << "  \"residuals\": " << json_array(residuals) << ",\n";
        s << "  \"max_residual\": " << json_num(max_residual) << "\n";
        s << "}\n";
    } else if (cfg.format == "csv") {
        s << "x,remainder,reconstruction,f,residual\n";
        for (size_t i = 0; i < points.size(); ++i) {
            s << format_real(points[i]) << "," << format_real(rem_values[i]) << ","
              << format_real(recon[i]) << "," << format_real(fvals[i]) << ","
              << format_real(residuals[i]) << "\n";
        }
    } else {
        s << "fn: " << format_power_sum(fn) << "\n";
        s << "x0: " << format_real(dec.x0) << "\n";
        s << "order: " << dec.order << "\n";
        s << "f(x0): " << format_real(dec.f_at_x0) << "\n";
        if (dec.order == 2) {
            s << "f'(x0): " << format_real(dec.deriv_at_x0) << "\n";
        }
        s << "remainder: " << (exact ? rem_text : std::string("quadrature-backed")) << "\n";
        s << "x remainder reconstruction f residual\n";
        for (size_t i = 0; i < points.size(); ++i) {
            s << format_real(points[i]) << " " << format_real(rem_values[i]) << " "
              << format_real(recon[i]) << " " << format_real(fvals[i]) << " "
              << format_real(residuals[i]) << "\n";
        }
        s << "max residual: " << format_real(max_residual) << "\n";
    }
    emit(cfg, s.str(), out);
}

// ---- convergence ------------------------------------------------------------

void run_convergence(const Config& cfg, std::ostream& out) {
    const PowerSum fn = parse_function(cfg.fn_text);
    if (!(cfg.x > 0.0)) {
        throw DomainError("convergence: --x must be positive");
    }
    std::vector<double> ladder = cfg.h_ladder;
    if (ladder.empty()) {
        ladder = {1e-2, 5e-3, 2.5e-3, 1.25e-3};
    }
    const PowerSum exact = rl_derivative(fn, cfg.alpha);

    std::vector<double> gl_values;
    std::vector<double> exact_values;
    std::vector<double> errors;
    for (double h : ladder) {
        if (!(h > 0.0)) {
            throw DomainError("convergence: step h must be positive");
        }
        const long n = std::lround(cfg.x / h);
        if (n < 1) {
            throw DomainError("convergence: x = " + format_real(cfg.x) +
                              " is below the first grid node for h = " + format_real(h));
        }
        if (n > 100000) {
            throw DomainError("convergence: grid for h = " + format_real(h) +
                              " would exceed 100000 nodes");
        }
        const int N = static_cast<int>(n) + 2;
        const GridFunction g = gl_derivative(sample(fn, h, N), cfg.alpha);
        const double node = static_cast<double>(n) * h;
        const double approx = g.values[static_cast<size_t>(n)];
        const double reference = exact.eval(node);
        gl_values.push_back(approx);
        exact_values.push_back(reference);
        errors.push_back(std::fabs(approx - reference));
    }

    // Pairwise order estimates; row i compares ladder[i-1] and ladder[i].
    std::vector<double> orders(ladder.size(), std::nan(""));
    for (size_t i = 1; i < ladder.size(); ++i) {
        if (errors[i] > 0.0 && errors[i - 1] > 0.0 && ladder[i] != ladder[i - 1]) {
            orders[i] = std::log(errors[i - 1] / errors[i]) / std::log(ladder[i - 1] / ladder[i]);
        }
    }

    std::ostringstream s;
    if (cfg.format == "json") {
        s << "{\n";
        s << "  \"fn\": " << json_str(format_power_sum(fn)) << ",\n";
        s << "  \"alpha\": " << json_num(cfg.alpha) << ",\n";
        s << "  \"x\": " << json_num(cfg.x) << ",\n";
        s << "  \"rows\": [\n";
        for (size_t i = 0; i < ladder.size(); ++i) {
            s << "    {\"h\": " << json_num(ladder[i]) << ", \"gl_value\": "
              << json_num(gl_values[i]) << ", \"exact_value\": " << json_num(exact_values[i])
              << ", \"error\": " << json_num(errors[i]) << ", \"order\": " << json_num(orders[i])
              << "}" << (i + 1 < ladder.size() ? "," : "") << "\n";
        }
        s << "  ]\n";
        s << "}\n";
    } else if (cfg.format == "csv") {
        s << "h,gl_value,exact_value,error,order\n";
        for (size_t i = 0; i < ladder.size(); ++i) {
            s << format_real(ladder[i]) << "," << format_real(gl_values[i]) << ","
              << format_real(exact_values[i]) << "," << format_real(errors[i]) << ",";
            if (std::isfinite(orders[i])) {
                s << format_real(orders[i]);
            }
            s << "\n";
        }
    } else {
        s << "fn: " << format_power_sum(fn) << "\n";
        s << "alpha: " << format_real(cfg.alpha) << "\n";
        s << "x: " << format_real(cfg.x) << "\n";
        s << "h gl exact error order\n";
        for (size_t i = 0; i < ladder.size(); ++i) {
            s << format_real(ladder[i]) << " " << format_real(gl_values[i]) << " "
              << format_real(exact_values[i]) << " " << format_real(errors[i]) << " ";
            s << (std::isfinite(orders[i]) ? format_real(orders[i]) : std::string("-")) << "\n";
        }
    }
    emit(cfg, s.str(), out);
}

void add_common(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", cfg.out_path, "write output to a file instead of stdout");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"fracleib: fractional derivatives, the generalized Leibniz series, "
                 "and a Leibniz-rule audit for linear operators"};
    app.require_subcommand(1);

    CLI::App* deriv = app.add_subcommand("deriv", "apply an operator to a function");
    deriv->add_option("--op", cfg.op_text, "operator expression")->required();
    deriv->add_option("--fn", cfg.fn_text, "function expression")->required();
    auto* deriv_points =
        deriv->add_option("--points", cfg.points, "evaluation points")->delimiter(',');
    deriv->add_option("--grid", cfg.grid_text, "uniform evaluation grid 'H,N'")
        ->excludes(deriv_points);
    add_common(deriv, cfg);

    CLI::App* defect = app.add_subcommand("defect", "Leibniz-rule defect of an operator");
    defect->add_option("--op", cfg.op_text, "operator expression")->required();
    defect->add_option("--f", cfg.f_text, "left factor")->required();
    defect->add_option("--g", cfg.g_text, "right factor")->required();
    defect->add_option("--points", cfg.points, "evaluation points")->delimiter(',');
    add_common(defect, cfg);

    CLI::App* series = app.add_subcommand("series", "generalized Leibniz series");
    series->add_option("--f", cfg.f_text, "left factor")->required();
    series->add_option("--g", cfg.g_text, "right factor")->required();
    series->add_option("--alpha", cfg.alpha, "derivative order in (0, 2)")->required();
    series->add_option("--K", cfg.K, "truncation index (default: degree-based)");
    series->add_option("--points", cfg.points, "evaluation points")->delimiter(',');
    add_common(series, cfg);

    CLI::App* audit = app.add_subcommand("audit", "classify an operator against the "
                                                  "Leibniz rule");
    audit->add_option("--op", cfg.op_text, "operator expression")->required();
    audit->add_option("--points", cfg.points, "evaluation points")->delimiter(',');
    audit->add_option("--probe", cfg.extra_probes, "extra probe function (repeatable)");
    audit->add_option("--tol", cfg.tol, "classification tolerance (default 1e-8, or "
                                        "FRACLEIB_TOL)");
    add_common(audit, cfg);

    CLI::App* hadamard = app.add_subcommand("hadamard", "Hadamard decomposition about x0");
    hadamard->add_option("--fn", cfg.fn_text, "function expression")->required();
    hadamard->add_option("--x0", cfg.x0, "anchor point")->required();
    hadamard->add_option("--order", cfg.order, "decomposition order (1 or 2)");
    hadamard->add_option("--points", cfg.points, "evaluation points")->delimiter(',');
    hadamard->add_option("--domain", cfg.domain_text, "domain 'lo,hi'");
    hadamard->add_option("--path", cfg.path_text, "auto | exact | quadrature");
    add_common(hadamard, cfg);

    CLI::App* convergence =
        app.add_subcommand("convergence", "GL-vs-exact error ladder at a point");
    convergence->add_option("--fn", cfg.fn_text, "function expression")->required();
    convergence->add_option("--alpha", cfg.alpha, "derivative order in (0, 2)")->required();
    convergence->add_option("--x", cfg.x, "evaluation point");
    convergence->add_option("--steps", cfg.h_ladder, "step ladder")->delimiter(',');
    add_common(convergence, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (app.got_subcommand(deriv)) {
            run_deriv(cfg, out);
        } else if (app.got_subcommand(defect)) {
            run_defect(cfg, out);
        } else if (app.got_subcommand(series)) {
            run_series(cfg, out);
        } else if (app.got_subcommand(audit)) {
            run_audit(cfg, out);
        } else if (app.got_subcommand(hadamard)) {
            run_hadamard(cfg, out);
        } else if (app.got_subcommand(convergence)) {
            run_convergence(cfg, out);
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ToleranceError& e) {
        err << "tolerance error: " << e.what() << "\n";
        return 4;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace fracleib
