// Batch front end: norm estimation, condition certification, constants, lemma grids, region scans.

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "wmnorm/errors.hpp"

namespace {

using namespace wmnorm::cli;

struct GlobalOptions
{
    bool json_output = false;
    bool text_output = false;
    std::string out;
    std::size_t threads = 1;
};

struct LemmaOverrides
{
    std::string l1_n, l1_p, l1_alpha, l2_n, l2_alpha, l4_p;
    std::optional<std::size_t> l1_x, l2_x, l4_z, l4_y, l4_n_max;
};

LemmasArgs build_lemmas(const LemmaOverrides& o)
{
    LemmasArgs args;
    auto note = [&](const char* key, const std::string& v) { args.overrides[key] = v; };
    if (!o.l1_n.empty()) {
        args.lemma1.ns = parse_range(o.l1_n).indices();
        note("l1-n", o.l1_n);
    }
    if (!o.l1_p.empty()) {
        args.lemma1.ps = parse_range(o.l1_p).values();
        note("l1-p", o.l1_p);
    }
    if (!o.l1_alpha.empty()) {
        args.lemma1.alphas = parse_range(o.l1_alpha).values();
        note("l1-alpha", o.l1_alpha);
    }
    if (!o.l2_n.empty()) {
        args.lemma2.ns = parse_range(o.l2_n).indices();
        note("l2-n", o.l2_n);
    }
    if (!o.l2_alpha.empty()) {
        args.lemma2.alphas = parse_range(o.l2_alpha).values();
        note("l2-alpha", o.l2_alpha);
    }
    if (!o.l4_p.empty()) {
        args.lemma4.ps = parse_range(o.l4_p).values();
        note("l4-p", o.l4_p);
    }
    if (o.l1_x)
        args.lemma1.x_points = *o.l1_x;
    if (o.l2_x)
        args.lemma2.x_points = *o.l2_x;
    if (o.l4_z)
        args.lemma4.z_points = *o.l4_z;
    if (o.l4_y)
        args.lemma4.y_points = *o.l4_y;
    if (o.l4_n_max)
        args.lemma4.n_max = *o.l4_n_max;
    return args;
}

void emit(const RunReport& report, const GlobalOptions& g, bool to_file)
{
    const std::string body = g.text_output ? report.to_text() : report.to_json_text();
    if (to_file && !g.out.empty()) {
        std::ofstream file(g.out, std::ios::binary);
        if (!file)
            throw wmnorm::DomainError("cannot open '" + g.out + "' for writing");
        file << body;
        return;
    }
    std::cout << body;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Truncated l^p norms and norm-bound certification for power-weighted mean matrices"};
    app.require_subcommand(1);

    GlobalOptions g;
    auto* json_flag = app.add_flag("--json", g.json_output, "Emit the report as JSON (default)");
    app.add_flag("--text", g.text_output, "Emit the report as aligned text")->excludes(json_flag);
    app.add_option("--out", g.out, "Write the report (scan: the CSV) to this path");
    app.add_option("--threads", g.threads, "Worker threads for certify and scan")->check(CLI::PositiveNumber);

    NormArgs norm;
    auto* norm_cmd = app.add_subcommand("norm", "Estimate the truncated operator norm");
    norm_cmd->add_option("--alpha", norm.alpha, "Weight exponent");
    norm_cmd->add_option("--p", norm.p, "Exponent p > 1");
    norm_cmd->add_option("--size", norm.size, "Truncation size N")->check(CLI::PositiveNumber);
    norm_cmd->add_option("--tol", norm.tol, "Stop when successive ratios differ by less than this");
    norm_cmd->add_option("--max-iter", norm.max_iter, "Iteration cap");
    norm_cmd->add_option("--method", norm.method, "power | witness");
    norm_cmd->add_option("--eps", norm.eps, "Witness decay offset a_n = n^(-1/p - eps)");

    CertifyArgs cert;
    std::optional<double> cert_L;
    auto* cert_cmd = app.add_subcommand("certify", "Scan the refined norm-bound condition over 1..n_max");
    cert_cmd->add_option("--alpha", cert.alpha, "Weight exponent in [0, 1]");
    cert_cmd->add_option("--p", cert.p, "Exponent p > 1");
    cert_cmd->add_option("--L", cert_L, "Constant L (default 1/(1+alpha))");
    cert_cmd->add_option("--c-rule", cert.c_rule, "constant_one | three_n_rule");
    cert_cmd->add_option("--n-max", cert.n_max, "Largest n scanned");
    cert_cmd->add_option("--route", cert.route, "gao | combined");

    auto* const_cmd = app.add_subcommand("constants", "Recompute the threshold constants");

    LemmaOverrides lo;
    auto* lem_cmd = app.add_subcommand("lemmas", "Check the lower-bound inequalities on parameter grids");
    lem_cmd->add_option("--l1-n", lo.l1_n, "n range for the (1-Lx/p)^(1-p) bound");
    lem_cmd->add_option("--l1-p", lo.l1_p, "p range (within [4/3, 3/2])");
    lem_cmd->add_option("--l1-alpha", lo.l1_alpha, "alpha range (points above 1/p skipped)");
    lem_cmd->add_option("--l1-x-points", lo.l1_x, "x points in [1/n, 1]");
    lem_cmd->add_option("--l2-n", lo.l2_n, "n range for the (1+x)^-alpha bound");
    lem_cmd->add_option("--l2-alpha", lo.l2_alpha, "alpha range");
    lem_cmd->add_option("--l2-x-points", lo.l2_x, "x points in [0, 1/n]");
    lem_cmd->add_option("--l4-p", lo.l4_p, "p range for the a_p / r_p / w' chain");
    lem_cmd->add_option("--l4-z-points", lo.l4_z, "z points in [2/3, 1)");
    lem_cmd->add_option("--l4-y-points", lo.l4_y, "y points in (0, 1/2]");
    lem_cmd->add_option("--l4-n-max", lo.l4_n_max, "largest n for w'_{n,p}(1/p)");

    std::string scan_alpha = "0:1:0.1";
    std::string scan_p     = "1.35:2:0.05";
    std::size_t scan_n_max = 10000;
    auto* scan_cmd = app.add_subcommand("scan", "Certify every (alpha, p) on a grid and write CSV");
    scan_cmd->add_option("--alpha", scan_alpha, "alpha range lo:hi:step");
    scan_cmd->add_option("--p", scan_p, "p range lo:hi:step");
    scan_cmd->add_option("--n-max", scan_n_max, "Largest n scanned per point");

    for (auto* sub : {norm_cmd, cert_cmd, const_cmd, lem_cmd, scan_cmd})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        RunReport report;
        if (*norm_cmd) {
            report = cmd_norm(norm);
        } else if (*cert_cmd) {
            cert.L       = cert_L;
            cert.threads = g.threads;
            report       = cmd_certify(cert);
        } else if (*const_cmd) {
            report = cmd_constants();
        } else if (*lem_cmd) {
            report = cmd_lemmas(build_lemmas(lo));
        } else {
            ScanArgs args{parse_range(scan_alpha), parse_range(scan_p), scan_n_max, g.threads};
            std::string csv;
            report = cmd_scan(args, g.out, &csv);
            if (g.out.empty()) {
                std::cout << csv;
                return report.exit_code;
            }
            emit(report, g, false);
            return report.exit_code;
        }
        report.parameters["threads"] = g.threads;
        emit(report, g, true);
        return report.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
}
