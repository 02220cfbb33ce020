#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wmnorm/lemma_suites.hpp"

namespace wmnorm::cli {

inline constexpr const char* kSchemaVersion = "1.0";

enum ExitCode : int { kPass = 0, kConditionFailed = 1, kUsageError = 2 };

/// Everything a subcommand emits. Keys in parameters/results are sorted on output.
struct RunReport
{
    std::string command;
    nlohmann::json parameters = nlohmann::json::object();
    nlohmann::json results    = nlohmann::json::object();
    std::vector<std::string> warnings;
    std::string schema_version = kSchemaVersion;
    int exit_code = kPass;

    [[nodiscard]] nlohmann::json to_json() const;
    [[nodiscard]] std::string to_json_text() const;
    [[nodiscard]] std::string to_text() const;
};

/// lo:hi:step. A bare number is a one-point range; each field may be a fraction such as 4/3.
struct RangeSpec
{
    double lo   = 0.0;
    double hi   = 0.0;
    double step = 1.0;
    std::string text;

    [[nodiscard]] std::vector<double> values() const;
    [[nodiscard]] std::vector<std::size_t> indices() const;
};

[[nodiscard]] RangeSpec parse_range(const std::string& text);
[[nodiscard]] double parse_number(const std::string& text);

struct NormArgs
{
    double alpha         = 0.0;
    double p             = 2.0;
    std::size_t size     = 2000;
    double tol           = 1e-10;
    std::size_t max_iter = 100000;
    std::string method   = "power";
    double eps           = 0.01;
};

struct CertifyArgs
{
    double alpha = 0.0;
    double p     = 2.0;
    std::optional<double> L;
    std::string c_rule  = "constant_one";
    std::size_t n_max   = 10000;
    std::size_t threads = 1;
    std::string route   = "gao";
};

struct LemmasArgs
{
    analytic::Lemma1Grid lemma1 = analytic::Lemma1Grid::defaults();
    analytic::Lemma2Grid lemma2 = analytic::Lemma2Grid::defaults();
    analytic::Lemma4Grid lemma4 = analytic::Lemma4Grid::defaults();
    /// Grid specs as given on the command line, echoed into the report.
    nlohmann::json overrides = nlohmann::json::object();
};

struct ScanArgs
{
    RangeSpec alpha = parse_range("0:1:0.1");
    RangeSpec p     = parse_range("1.35:2:0.05");
    std::size_t n_max   = 10000;
    std::size_t threads = 1;
};

struct ScanRow
{
    double alpha = 0.0;
    double p     = 0.0;
    double L     = 0.0;
    std::size_t n_max = 0;
    double min_margin = 0.0;
    std::size_t argmin_n = 0;
    double cartlidge_sup = 0.0;
    bool pass = false;
};

inline constexpr const char* kScanHeader = "alpha,p,L,n_max,min_margin,argmin_n,cartlidge_sup,pass";

/// %.17g
[[nodiscard]] std::string format_real(double value);

[[nodiscard]] RunReport cmd_norm(const NormArgs& args);
[[nodiscard]] RunReport cmd_certify(const CertifyArgs& args);
[[nodiscard]] RunReport cmd_constants();
[[nodiscard]] RunReport cmd_lemmas(const LemmasArgs& args);

/// Rows sorted by (alpha, p); identical for any thread count.
[[nodiscard]] std::vector<ScanRow> scan_rows(const ScanArgs& args);
[[nodiscard]] std::string render_scan_csv(const std::vector<ScanRow>& rows);
/// Runs the scan and writes the CSV to out_path (or leaves it to the caller when empty).
[[nodiscard]] RunReport cmd_scan(const ScanArgs& args, const std::string& out_path, std::string* csv_out = nullptr);

} // namespace wmnorm::cli
