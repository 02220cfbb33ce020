#include "commands.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

#include "wmnorm/analytic.hpp"
#include "wmnorm/criteria.hpp"
#include "wmnorm/errors.hpp"
#include "wmnorm/grid.hpp"
#include "wmnorm/norm_engine.hpp"
#include "wmnorm/parallel.hpp"
#include "wmnorm/weighted_mean.hpp"

namespace wmnorm::cli {

using nlohmann::json;
using wmnorm::detail::require;

namespace {

json optional_index(const std::optional<std::size_t>& v)
{
    return v ? json(*v) : json(nullptr);
}

std::string render_value(const json& v)
{
    if (v.is_number_float())
        return format_real(v.get<double>());
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

void flatten(const json& obj, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out)
{
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        const std::string key = prefix + it.key();
        if (it->is_object())
            flatten(*it, key + ".", out);
        else
            out.emplace_back(key, render_value(*it));
    }
}

void append_lines(std::ostringstream& os, const json& obj)
{
    std::vector<std::pair<std::string, std::string>> lines;
    flatten(obj, "", lines);
    std::size_t width = 0;
    for (const auto& [k, v] : lines)
        width = std::max(width, k.size());
    for (const auto& [k, v] : lines)
        os << "  " << k << std::string(width - k.size() + 2, ' ') << v << '\n';
}

} // namespace

json RunReport::to_json() const
{
    return json{{"schema_version", schema_version},
                {"command", command},
                {"parameters", parameters},
                {"results", results},
                {"warnings", warnings}};
}

std::string RunReport::to_json_text() const
{
    return to_json().dump(2) + "\n";
}

std::string RunReport::to_text() const
{
    std::ostringstream os;
    os << command << " (schema " << schema_version << ")\n";
    os << "parameters:\n";
    append_lines(os, parameters);
    os << "results:\n";
    append_lines(os, results);
    for (const auto& w : warnings)
        os << "warning: " << w << '\n';
    return os.str();
}

double parse_number(const std::string& text)
{
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const double num = parse_number(text.substr(0, slash));
        const double den = parse_number(text.substr(slash + 1));
        require(den != 0.0, "zero denominator in '" + text + "'");
        return num / den;
    }
    require(!text.empty(), "empty number");
    errno     = 0;
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    require(errno == 0 && end == text.c_str() + text.size() && std::isfinite(v), "malformed number '" + text + "'");
    return v;
}

RangeSpec parse_range(const std::string& text)
{
    std::vector<std::string> parts;
    std::string::size_type start = 0;
    while (true) {
        const auto colon = text.find(':', start);
        parts.push_back(text.substr(start, colon - start));
        if (colon == std::string::npos)
            break;
        start = colon + 1;
    }
    RangeSpec r;
    r.text = text;
    if (parts.size() == 1) {
        r.lo = r.hi = parse_number(parts[0]);
        r.step      = 1.0;
    } else {
        require(parts.size() == 3, "range must be lo:hi:step, got '" + text + "'");
        r.lo   = parse_number(parts[0]);
        r.hi   = parse_number(parts[1]);
        r.step = parse_number(parts[2]);
    }
    require(r.step > 0.0, "range step must be > 0 in '" + text + "'");
    require(r.lo <= r.hi, "empty range (lo > hi) in '" + text + "'");
    return r;
}

std::vector<double> RangeSpec::values() const
{
    return stepped_range(lo, hi, step);
}

std::vector<std::size_t> RangeSpec::indices() const
{
    std::vector<std::size_t> out;
    for (double v : values()) {
        require(v >= 1.0 && v == std::floor(v), "index range '" + text + "' must contain positive integers");
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

std::string format_real(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

RunReport cmd_norm(const NormArgs& args)
{
    RunReport report;
    report.command    = "norm";
    report.parameters = {{"alpha", args.alpha}, {"p", args.p},           {"size", args.size},
                         {"tol", args.tol},     {"max_iter", args.max_iter}, {"method", args.method},
                         {"eps", args.eps}};

    const WeightScheme scheme(args.alpha);
    const double sharp = sharp_constant(args.p, args.alpha);

    NormEstimate est;
    if (args.method == "power") {
        const TruncatedOperator op(scheme, args.size);
        est = estimate_norm(op, args.p, {args.tol, args.max_iter, false});
        if (!est.converged)
            report.warnings.push_back("power iteration stopped at max_iter; estimate is the best lower bound reached");
        if (!est.monotone)
            report.warnings.push_back("power iteration ratio decreased by more than 1e-12 at some step");
    } else if (args.method == "witness") {
        est.value      = witness_lower_bound(scheme, args.p, args.eps, args.size);
        est.direction  = BoundDirection::lower_bound;
        est.size       = args.size;
        est.converged  = true;
    } else {
        throw DomainError("unknown norm method '" + args.method + "' (expected power or witness)");
    }

    report.results = {{"estimate", est.value},
                      {"direction", to_string(est.direction)},
                      {"sharp_constant", sharp},
                      {"gap_to_sharp", sharp - est.value},
                      {"iterations", est.iterations},
                      {"residual", est.residual},
                      {"size", est.size},
                      {"converged", est.converged}};
    return report;
}

RunReport cmd_certify(const CertifyArgs& args)
{
    RunReport report;
    report.command = "certify";
    const auto config = CriterionConfig::make(args.alpha, args.p, args.L, parse_c_rule(args.c_rule));
    require(args.route == "gao" || args.route == "combined", "unknown route '" + args.route + "' (expected gao or combined)");
    require(args.n_max >= 1, "n_max must be >= 1");

    report.parameters = {{"alpha", config.alpha},  {"p", config.p},         {"L", config.L},
                         {"c_rule", to_string(config.c_rule)}, {"n_max", args.n_max}, {"threads", args.threads},
                         {"route", args.route}};

    CombinedVerdict verdict;
    if (args.route == "combined") {
        verdict = certify_combined(config, args.n_max, args.threads);
    } else {
        verdict.gao    = certify(config, args.n_max, args.threads);
        verdict.passed = verdict.gao.passed();
        verdict.route  = verdict.passed ? "gao" : "none";
    }
    const CriterionReport& r = verdict.gao;

    report.results = {{"min_margin", r.min_margin},
                      {"argmin_n", r.argmin_n},
                      {"first_failure", optional_index(r.first_failure)},
                      {"cartlidge_sup", r.cartlidge_sup},
                      {"cartlidge_argmax", r.cartlidge_argmax},
                      {"cartlidge_tail_rising", r.cartlidge_tail_rising},
                      {"upper_bound", cartlidge_upper_bound(config.p, config.L)},
                      {"branch_counts", {{"critical_point", r.branch_critical_point}, {"endpoint", r.branch_endpoint}}},
                      {"passed", verdict.passed},
                      {"route", verdict.route}};
    if (r.n1_margin)
        report.results["n1_condition_margin"] = *r.n1_margin;
    if (verdict.lemma4) {
        report.results["lemma4"] = {{"min_value", verdict.lemma4->min_value},
                                    {"argmin_n", verdict.lemma4->argmin_n},
                                    {"first_failure", optional_index(verdict.lemma4->first_failure)}};
    }

    if (r.cartlidge_tail_rising)
        report.warnings.push_back("Cartlidge differences still rising over the last 10% of [1, n_max]; the "
                                  "finite-range maximum may understate the supremum");
    if (r.n1_margin && *r.n1_margin < 0.0 && gao_margin(config, 1) >= 0.0)
        report.warnings.push_back("quadratic n = 1 condition fails while the exact condition holds at n = 1");
    report.exit_code = verdict.passed ? kPass : kConditionFailed;
    return report;
}

RunReport cmd_constants()
{
    RunReport report;
    report.command = "constants";
    const auto table = analytic::constants_table();
    json methods     = json::object();
    for (const auto& e : table.entries) {
        report.results[e.name] = e.value;
        methods[e.name]        = e.method;
    }
    report.results["methods"] = methods;
    return report;
}

namespace {

json suite_json(const analytic::SuiteResult& s)
{
    json argmin = json::object();
    for (const auto& [k, v] : s.argmin)
        argmin[k] = v;
    return {{"min_gap", s.points_checked ? json(s.min_gap) : json(nullptr)},
            {"argmin", argmin},
            {"points_checked", s.points_checked},
            {"passed", s.passed()}};
}

} // namespace

RunReport cmd_lemmas(const LemmasArgs& args)
{
    RunReport report;
    report.command    = "lemmas";
    report.parameters = {{"lemma1", {{"n_count", args.lemma1.ns.size()}, {"p_count", args.lemma1.ps.size()},
                                     {"alpha_count", args.lemma1.alphas.size()}, {"x_points", args.lemma1.x_points}}},
                         {"lemma2", {{"n_count", args.lemma2.ns.size()}, {"alpha_count", args.lemma2.alphas.size()},
                                     {"x_points", args.lemma2.x_points}}},
                         {"lemma4", {{"p_count", args.lemma4.ps.size()}, {"z_points", args.lemma4.z_points},
                                     {"y_points", args.lemma4.y_points}, {"n_max", args.lemma4.n_max}}},
                         {"overrides", args.overrides}};
    require(args.lemma1.x_points >= 1 && args.lemma2.x_points >= 1, "x point counts must be >= 1");
    require(args.lemma4.z_points >= 1 && args.lemma4.y_points >= 2 && args.lemma4.n_max >= 1,
            "lemma4 grid sizes must be positive (y_points >= 2)");

    std::vector<analytic::SuiteResult> suites;
    suites.push_back(analytic::run_lemma1_suite(args.lemma1));
    for (auto& s : analytic::run_lemma2_suite(args.lemma2))
        suites.push_back(std::move(s));
    for (auto& s : analytic::run_lemma4_suite(args.lemma4))
        suites.push_back(std::move(s));

    bool all = true;
    for (const auto& s : suites) {
        report.results[s.name] = suite_json(s);
        all                    = all && s.passed();
        if (s.points_checked == 0)
            report.warnings.push_back(s.name + ": grid is empty");
    }
    report.results["all_passed"] = all;
    report.exit_code             = all ? kPass : kConditionFailed;
    return report;
}

std::vector<ScanRow> scan_rows(const ScanArgs& args)
{
    require(args.n_max >= 1, "n_max must be >= 1");
    const auto alphas = args.alpha.values();
    const auto ps     = args.p.values();
    std::vector<ScanRow> rows(alphas.size() * ps.size());
    // Validate every configuration up front so a bad point is a usage error, not a partial CSV.
    for (double a : alphas)
        for (double p : ps)
            (void)CriterionConfig::make(a, p);

    wmnorm::detail::run_chunks(rows.size(), args.threads, [&](std::size_t i) {
        const double a    = alphas[i / ps.size()];
        const double p    = ps[i % ps.size()];
        const auto config = CriterionConfig::make(a, p);
        const auto r      = certify(config, args.n_max, 1);
        rows[i] = {a, p, config.L, args.n_max, r.min_margin, r.argmin_n, r.cartlidge_sup, r.passed()};
    });
    return rows;
}

std::string render_scan_csv(const std::vector<ScanRow>& rows)
{
    std::ostringstream os;
    os << kScanHeader << '\n';
    for (const auto& r : rows) {
        os << format_real(r.alpha) << ',' << format_real(r.p) << ',' << format_real(r.L) << ',' << r.n_max << ','
           << format_real(r.min_margin) << ',' << r.argmin_n << ',' << format_real(r.cartlidge_sup) << ','
           << (r.pass ? 1 : 0) << '\n';
    }
    return os.str();
}

RunReport cmd_scan(const ScanArgs& args, const std::string& out_path, std::string* csv_out)
{
    RunReport report;
    report.command    = "scan";
    report.parameters = {{"alpha", args.alpha.text}, {"p", args.p.text}, {"n_max", args.n_max},
                         {"threads", args.threads}, {"out", out_path}};

    const auto rows = scan_rows(args);
    const std::string csv = render_scan_csv(rows);
    if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        require(static_cast<bool>(file), "cannot open '" + out_path + "' for writing");
        file << csv;
        file.flush();
        require(static_cast<bool>(file), "failed writing '" + out_path + "'");
    }
    if (csv_out)
        *csv_out = csv;

    std::size_t failures = 0;
    json first           = nullptr;
    for (const auto& r : rows) {
        if (!r.pass) {
            if (failures == 0)
                first = {{"alpha", r.alpha}, {"p", r.p}, {"argmin_n", r.argmin_n}, {"min_margin", r.min_margin}};
            ++failures;
        }
    }
    report.results   = {{"rows", rows.size()}, {"failures", failures}, {"first_failing_row", first}};
    report.exit_code = failures == 0 ? kPass : kConditionFailed;
    return report;
}

} // namespace wmnorm::cli
