#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "wmnorm/weighted_mean.hpp"

namespace wmnorm {

/// Rule for the constant c_n in the quadratic lower bound: 1, or 3n/(3n-1).
enum class CRule { constant_one, three_n_rule };

[[nodiscard]] const char* to_string(CRule rule) noexcept;
[[nodiscard]] CRule parse_c_rule(const std::string& text);

struct CriterionConfig
{
    double alpha  = 0.0;
    double p      = 2.0;
    double L      = 1.0;
    CRule c_rule  = CRule::constant_one;

    /// Validated config; L defaults to 1/(1+alpha).
    static CriterionConfig make(double alpha, double p, std::optional<double> L = std::nullopt,
                                CRule c_rule = CRule::constant_one);

    [[nodiscard]] double c(std::size_t n) const;
    [[nodiscard]] bool uses_default_L() const noexcept;
};

struct CartlidgeSup
{
    double value        = 0.0;
    std::size_t argmax  = 0;
    /// The differences are still rising across the last 10% of the range.
    bool tail_rising    = false;
};

/*!
    Result of scanning the refined condition over 1 <= n <= n_max. Margins are RHS - LHS; a negative margin is a
    failure at that n. first_failure is present exactly when min_margin < 0.
*/
struct CriterionReport
{
    CriterionConfig config;
    std::size_t n_max        = 0;
    double min_margin        = 0.0;
    std::size_t argmin_n     = 0;
    std::optional<std::size_t> first_failure;
    double cartlidge_sup     = 0.0;
    std::size_t cartlidge_argmax = 0;
    bool cartlidge_tail_rising   = false;

    /// Filled only when L = 1/(1+alpha): the n = 1 condition in its quadratic form.
    std::optional<double> n1_margin;

    /// Counts over 2 <= n <= n_max of which side of the stationary-point case split n falls on.
    std::size_t branch_critical_point = 0;
    std::size_t branch_endpoint       = 0;

    [[nodiscard]] bool passed() const noexcept { return !first_failure.has_value(); }
};

struct Lemma4Route
{
    double p                  = 0.0;
    std::size_t n_max         = 0;
    double min_value          = 0.0;
    std::size_t argmin_n      = 0;
    std::optional<std::size_t> first_failure;

    [[nodiscard]] bool passed() const noexcept { return !first_failure.has_value(); }
};

struct CombinedVerdict
{
    CriterionReport gao;
    std::optional<Lemma4Route> lemma4;
    bool passed = false;
    /// "gao", "lemma4" or "none".
    std::string route;
};

/// Lambda_{n+1}/lambda_{n+1} - Lambda_n/lambda_n.
[[nodiscard]] double cartlidge_diff(const WeightScheme& scheme, std::size_t n);
[[nodiscard]] CartlidgeSup cartlidge_sup(const WeightScheme& scheme, std::size_t n_max);

/// RHS - LHS of Lambda_{n+1}/lambda_{n+1} <= (Lambda_n/lambda_n)(1 - L lambda_n/(p Lambda_n))^(1-p) + L/p.
[[nodiscard]] double gao_margin(const CriterionConfig& config, std::size_t n);

/// 1/(a+1) + (1-1/p)/(2(a+1)^2) - 2^-a.
[[nodiscard]] double n1_condition_margin(double alpha, double p);

/// (a+1)/(n(n+1)^a) - 1/Lambda_n.
[[nodiscard]] double xn_bound_margin(double alpha, std::size_t n);

/// Scans gao_margin over [1, n_max]. The result does not depend on `threads`.
[[nodiscard]] CriterionReport certify(const CriterionConfig& config, std::size_t n_max, std::size_t threads = 1);

/// Checks w'_{n,p}(1/p) >= 0 for 1 <= n <= n_max.
[[nodiscard]] Lemma4Route lemma4_route(double p, std::size_t n_max);

/*!
    The refined condition, falling back to the w'_{n,p}(1/p) route when it fails and the route applies
    (alpha >= 1/p with the default L).
*/
[[nodiscard]] CombinedVerdict certify_combined(const CriterionConfig& config, std::size_t n_max,
                                               std::size_t threads = 1);

namespace detail {

/// gao_margin from r = Lambda_n/lambda_n, written to avoid cancelling two O(n) terms.
[[nodiscard]] double gao_margin_from_ratio(const CriterionConfig& config, double ratio, std::size_t n);

} // namespace detail
} // namespace wmnorm
