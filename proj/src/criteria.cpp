#include "wmnorm/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "wmnorm/analytic.hpp"
#include "wmnorm/compensated_sum.hpp"
#include "wmnorm/errors.hpp"
#include "wmnorm/parallel.hpp"

namespace wmnorm {

using detail::require;

const char* to_string(CRule rule) noexcept
{
    return rule == CRule::constant_one ? "constant_one" : "three_n_rule";
}

CRule parse_c_rule(const std::string& text)
{
    if (text == "constant_one" || text == "one")
        return CRule::constant_one;
    if (text == "three_n_rule" || text == "three_n")
        return CRule::three_n_rule;
    throw DomainError("unknown c_n rule '" + text + "' (expected constant_one or three_n_rule)");
}

CriterionConfig CriterionConfig::make(double alpha, double p, std::optional<double> L, CRule c_rule)
{
    require(std::isfinite(alpha) && alpha >= 0.0 && alpha <= 1.0, "alpha must lie in [0, 1]");
    require(std::isfinite(p) && p > 1.0, "p must be > 1");
    const double l = L.value_or(1.0 / (1.0 + alpha));
    require(std::isfinite(l) && l > 0.0 && l < p, "L must satisfy 0 < L < p");
    return {alpha, p, l, c_rule};
}

double CriterionConfig::c(std::size_t n) const
{
    require(n >= 1, "c_n needs n >= 1");
    if (c_rule == CRule::constant_one)
        return 1.0;
    const double nd = static_cast<double>(n);
    return 3.0 * nd / (3.0 * nd - 1.0);
}

bool CriterionConfig::uses_default_L() const noexcept
{
    return std::abs(L - 1.0 / (1.0 + alpha)) <= 1e-15;
}

namespace detail {

double gao_margin_from_ratio(const CriterionConfig& config, double ratio, std::size_t n)
{
    const double t = config.L / (config.p * ratio);
    if (!(t < 1.0))
        throw DomainError("gao_margin: L lambda_n / (p Lambda_n) >= 1 at n = " + std::to_string(n));
    // lambda_n / lambda_{n+1} = (n/(n+1))^alpha
    const double next_ratio_minus_one = std::expm1(-config.alpha * std::log1p(1.0 / static_cast<double>(n)));
    const double power_minus_one      = std::expm1((1.0 - config.p) * std::log1p(-t));
    return ratio * (power_minus_one - next_ratio_minus_one) + config.L / config.p - 1.0;
}

} // namespace detail

double cartlidge_diff(const WeightScheme& scheme, std::size_t n)
{
    require(n >= 1, "cartlidge_diff: n must be >= 1");
    CompensatedSum acc;
    for (std::size_t i = 1; i <= n; ++i)
        acc += scheme.weight(i);
    const double lam_n    = scheme.weight(n);
    const double lam_next = scheme.weight(n + 1);
    const double sum_n    = acc.value();
    acc += lam_next;
    return acc.value() / lam_next - sum_n / lam_n;
}

namespace {

// Lambda_1 .. Lambda_{n_max+1}.
std::vector<double> sums_through_next(const WeightScheme& scheme, std::size_t n_max)
{
    return prefix_sums(scheme, n_max + 1);
}

double diff_at(const WeightScheme& scheme, const std::vector<double>& sums, std::size_t n)
{
    return sums[n] / scheme.weight(n + 1) - sums[n - 1] / scheme.weight(n);
}

bool tail_rising(const WeightScheme& scheme, const std::vector<double>& sums, std::size_t n_max)
{
    if (n_max < 2)
        return false;
    const std::size_t tail  = std::max<std::size_t>(1, n_max / 10);
    const std::size_t start = n_max - tail;
    return diff_at(scheme, sums, n_max) > diff_at(scheme, sums, std::max<std::size_t>(1, start));
}

} // namespace

CartlidgeSup cartlidge_sup(const WeightScheme& scheme, std::size_t n_max)
{
    require(n_max >= 1, "cartlidge_sup: n_max must be >= 1");
    const auto sums = sums_through_next(scheme, n_max);
    CartlidgeSup out{-std::numeric_limits<double>::infinity(), 0, false};
    for (std::size_t n = 1; n <= n_max; ++n) {
        const double d = diff_at(scheme, sums, n);
        if (d > out.value) {
            out.value  = d;
            out.argmax = n;
        }
    }
    out.tail_rising = tail_rising(scheme, sums, n_max);
    return out;
}

double gao_margin(const CriterionConfig& config, std::size_t n)
{
    require(n >= 1, "gao_margin: n must be >= 1");
    return detail::gao_margin_from_ratio(config, lambda_ratio(WeightScheme(config.alpha), n), n);
}

double n1_condition_margin(double alpha, double p)
{
    require(p > 1.0, "n1_condition_margin: p must be > 1");
    const double s = alpha + 1.0;
    return 1.0 / s + (1.0 - 1.0 / p) / (2.0 * s * s) - std::exp2(-alpha);
}

double xn_bound_margin(double alpha, std::size_t n)
{
    require(n >= 1, "xn_bound_margin: n must be >= 1");
    require(alpha >= 0.0 && alpha <= 1.0, "xn_bound_margin: alpha must lie in [0, 1]");
    const WeightScheme scheme(alpha);
    CompensatedSum acc;
    for (std::size_t k = 1; k <= n; ++k)
        acc += scheme.weight(k);
    return analytic::xn_upper(n, alpha) - 1.0 / acc.value();
}

namespace {

struct ChunkSummary
{
    double min_margin  = std::numeric_limits<double>::infinity();
    std::size_t argmin = 0;
    std::optional<std::size_t> first_failure;
    double cartlidge_max = -std::numeric_limits<double>::infinity();
    std::size_t cartlidge_argmax = 0;
    std::size_t critical = 0;
    std::size_t endpoint = 0;
};

} // namespace

CriterionReport certify(const CriterionConfig& config, std::size_t n_max, std::size_t threads)
{
    require(n_max >= 1, "certify: n_max must be >= 1");
    const WeightScheme scheme(config.alpha);
    const auto sums = sums_through_next(scheme, n_max);

    const auto chunks = detail::partition(1, n_max + 1, std::max<std::size_t>(1, threads) * 4);
    std::vector<ChunkSummary> partial(chunks.size());
    detail::run_chunks(chunks.size(), threads, [&](std::size_t idx) {
        ChunkSummary& s = partial[idx];
        for (std::size_t n = chunks[idx].begin; n < chunks[idx].end; ++n) {
            const double lam   = scheme.weight(n);
            const double ratio = sums[n - 1] / lam;
            const double m     = detail::gao_margin_from_ratio(config, ratio, n);
            if (m < s.min_margin) {
                s.min_margin = m;
                s.argmin     = n;
            }
            if (m < 0.0 && !s.first_failure)
                s.first_failure = n;
            const double d = sums[n] / scheme.weight(n + 1) - ratio;
            if (d > s.cartlidge_max) {
                s.cartlidge_max    = d;
                s.cartlidge_argmax = n;
            }
            if (n >= 2) {
                if (analytic::proof_branch(n, config.alpha, config.p, config.c(n)) == analytic::ProofBranch::critical_point)
                    ++s.critical;
                else
                    ++s.endpoint;
            }
        }
    });

    // Chunks are in index order, so strict comparisons keep the smallest index on ties.
    CriterionReport report;
    report.config     = config;
    report.n_max      = n_max;
    report.min_margin = std::numeric_limits<double>::infinity();
    report.cartlidge_sup = -std::numeric_limits<double>::infinity();
    for (const auto& s : partial) {
        if (s.min_margin < report.min_margin) {
            report.min_margin = s.min_margin;
            report.argmin_n   = s.argmin;
        }
        if (!report.first_failure && s.first_failure)
            report.first_failure = s.first_failure;
        if (s.cartlidge_max > report.cartlidge_sup) {
            report.cartlidge_sup    = s.cartlidge_max;
            report.cartlidge_argmax = s.cartlidge_argmax;
        }
        report.branch_critical_point += s.critical;
        report.branch_endpoint += s.endpoint;
    }
    report.cartlidge_tail_rising = tail_rising(scheme, sums, n_max);
    if (config.uses_default_L())
        report.n1_margin = n1_condition_margin(config.alpha, config.p);
    return report;
}

Lemma4Route lemma4_route(double p, std::size_t n_max)
{
    require(n_max >= 1, "lemma4_route: n_max must be >= 1");
    Lemma4Route route;
    route.p         = p;
    route.n_max     = n_max;
    route.min_value = std::numeric_limits<double>::infinity();
    for (std::size_t n = 1; n <= n_max; ++n) {
        const double v = analytic::w_prime_at_inv_p(n, p);
        if (v < route.min_value) {
            route.min_value = v;
            route.argmin_n  = n;
        }
        if (v < 0.0 && !route.first_failure)
            route.first_failure = n;
    }
    return route;
}

CombinedVerdict certify_combined(const CriterionConfig& config, std::size_t n_max, std::size_t threads)
{
    CombinedVerdict verdict{certify(config, n_max, threads), std::nullopt, false, "none"};
    if (verdict.gao.passed()) {
        verdict.passed = true;
        verdict.route  = "gao";
        return verdict;
    }
    if (config.uses_default_L() && config.alpha >= 1.0 / config.p - 1e-12) {
        verdict.lemma4 = lemma4_route(config.p, n_max);
        if (verdict.lemma4->passed()) {
            verdict.passed = true;
            verdict.route  = "lemma4";
        }
    }
    return verdict;
}

} // namespace wmnorm
