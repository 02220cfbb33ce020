#include "wmnorm/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wmnorm::analytic {

using detail::require;

namespace {

// Slack for domain endpoints that arrive through floating-point grids (p = 4/3, alpha = 1/p, ...).
constexpr double kDomainSlack = 1e-12;

bool within(double value, double lo, double hi)
{
    return value >= lo - kDomainSlack && value <= hi + kDomainSlack;
}

double ratio_power(std::size_t n, double alpha)
{
    // (n/(n+1))^alpha
    return std::exp(-alpha * std::log1p(1.0 / static_cast<double>(n)));
}

double power(double base, double alpha)
{
    return std::exp(alpha * std::log(base));
}

// e^z - 1 - z without cancellation near 0.
double expm1_minus_linear(double z)
{
    if (std::abs(z) > 0.5)
        return std::expm1(z) - z;
    double term = z * z / 2.0;
    double sum  = term;
    for (int k = 3; std::abs(term) > 1e-18 * std::abs(sum); ++k) {
        term *= z / k;
        sum += term;
    }
    return sum;
}

// log(1+y) - y, via log(1+y) = 2 atanh(y/(2+y)) so the leading -y^2/(2+y) is formed directly.
double log1p_minus_linear(double y)
{
    if (y < -0.5 || y > 1.0)
        return std::log1p(y) - y;
    const double u  = y / (2.0 + y);
    const double u2 = u * u;
    double power_u = u;
    double tail    = 0.0;
    for (int k = 3; k < 200; k += 2) {
        power_u *= u2;
        const double term = power_u / k;
        tail += term;
        if (std::abs(term) <= 1e-18 * std::abs(tail))
            break;
    }
    return -y * y / (2.0 + y) + 2.0 * tail;
}

// (1+y)^alpha - 1 - alpha y.
double binomial_remainder(double alpha, double y)
{
    return expm1_minus_linear(alpha * std::log1p(y)) + alpha * log1p_minus_linear(y);
}

// B without the monotonicity-domain check; n = 2 lands at sqrt(3/2), outside (1, sqrt(4/3)].
double b_formula(double x)
{
    const double x2 = x * x;
    return 2.0 / 3.0 + (2.0 / 3.0) / ((x2 * x2 - 4.0 * x2) / (1.0 + 4.0 * x) - 1.0);
}

} // namespace

double v_func(double alpha)
{
    const double s = alpha + 1.0;
    return 2.0 * s - s * s * std::numbers::ln2 - std::exp2(alpha);
}

double u_func(double alpha)
{
    const double s = alpha + 1.0;
    return s * s / std::exp2(alpha) - alpha;
}

RootResult find_alpha0(double tol)
{
    // v(0) = 1 - ln 2 > 0, v(1) = 2 - 4 ln 2 < 0, and v is strictly concave.
    return bisect(v_func, 0.0, 1.0, tol);
}

double compute_p1()
{
    const double a = find_alpha0().value;
    const double s = a + 1.0;
    return 1.0 / (1.0 - 2.0 * s * s * (std::exp2(-a) - 1.0 / s));
}

double lemma1_gap(std::size_t n, double p, double alpha, double x)
{
    require(n >= 1, "lemma1_gap: n must be >= 1");
    require(within(p, 4.0 / 3.0, 1.5), "lemma1_gap: p must lie in [4/3, 3/2]");
    require(within(alpha, 0.0, 1.0 / p), "lemma1_gap: alpha must lie in [0, 1/p]");
    const double nd = static_cast<double>(n);
    require(within(x, 1.0 / nd, 1.0), "lemma1_gap: x must lie in [1/n, 1]");

    const double L   = 1.0 / (1.0 + alpha);
    const double lhs = std::expm1((1.0 - p) * std::log1p(-L * x / p));
    const double rhs = (p - 1.0) * L * x / p + 0.5 * (1.0 - 1.0 / p) * (3.0 * nd / (3.0 * nd - 1.0)) * L * L * x * x;
    return lhs - rhs;
}

double lemma2_gap(std::size_t n, double alpha, double x)
{
    require(n >= 1, "lemma2_gap: n must be >= 1");
    require(within(alpha, 0.0, 1.0), "lemma2_gap: alpha must lie in [0, 1]");
    const double nd = static_cast<double>(n);
    require(within(x, 0.0, 1.0 / nd), "lemma2_gap: x must lie in [0, 1/n]");

    const double d = nd / (2.0 * (nd + 1.0));
    return std::expm1(-alpha * std::log1p(x)) + alpha * x - alpha * (alpha + 1.0) * d * x * x;
}

double t_func(std::size_t n, double alpha)
{
    require(n >= 1, "t_func: n must be >= 1");
    return lemma2_gap(n, alpha, 1.0 / static_cast<double>(n));
}

double w_func(std::size_t n, double p, double x)
{
    require(n >= 1, "w_func: n must be >= 1");
    require(p > 1.0, "w_func: p must be > 1");
    require(within(x, 0.0, 1.0), "w_func: x must lie in [0, 1]");
    const double nd = static_cast<double>(n);
    const double q  = 1.0 / p;
    return x * std::log1p(1.0 / nd) - q * std::log1p((x + 1.0 - q) / nd) - (1.0 - q) * std::log1p((x - q) / nd);
}

double w_prime_at_inv_p(std::size_t n, double p)
{
    require(n >= 1, "w_prime_at_inv_p: n must be >= 1");
    require(p > 1.0, "w_prime_at_inv_p: p must be > 1");
    const double nd = static_cast<double>(n);
    return std::log1p(1.0 / nd) - 1.0 / nd + 1.0 / (p * nd * (nd + 1.0));
}

double r_func(double p, double y)
{
    require(p > 1.0, "r_func: p must be > 1");
    require(y > 0.0 && y <= 0.5 + kDomainSlack, "r_func: y must lie in (0, 1/2]");
    return std::log1p(y) - y + y * y / (p * (1.0 + y));
}

double a_func(double p, double z)
{
    require(p > 1.0, "a_func: p must be > 1");
    require(z >= 2.0 / 3.0 - kDomainSlack && z < 1.0, "a_func: z must lie in [2/3, 1)");
    return z - 1.0 + (1.0 - z * z) / p;
}

double lemma4_threshold()
{
    return 1.0 / (2.0 * (1.0 - std::numbers::ln2));
}

namespace {

void require_quadratic_params(std::size_t n, double alpha, double p, double c)
{
    require(n >= 1, "n must be >= 1");
    require(within(alpha, 0.0, 1.0), "alpha must lie in [0, 1]");
    require(p > 1.0, "p must be > 1");
    require(c >= 1.0, "c_n must be >= 1");
}

} // namespace

double f_func(std::size_t n, double alpha, double p, double c, double x)
{
    require_quadratic_params(n, alpha, p, c);
    require(x >= 0.0, "f_func: x must be >= 0");
    // 1 - rho - alpha n^alpha x/(alpha+1) + K n^(2 alpha) x^2/(alpha+1)^2 with rho = (n/(n+1))^alpha, regrouped as
    // rho [(e^z - 1 - z) + alpha (log1p(1/n) - 1/n) + alpha (1/n - t)], z = alpha log1p(1/n), t = (n+1)^alpha x/(alpha+1).
    const double nd  = static_cast<double>(n);
    const double s   = alpha + 1.0;
    const double K   = (1.0 - 1.0 / p) * c / 2.0;
    const double rho = ratio_power(n, alpha);
    const double t   = power(nd + 1.0, alpha) * x / s;
    const double lin = expm1_minus_linear(alpha * std::log1p(1.0 / nd)) + alpha * log1p_minus_linear(1.0 / nd) +
                       alpha * (1.0 / nd - t);
    const double q   = power(nd, alpha) * x / s;
    return rho * lin + K * q * q;
}

double g_func(std::size_t n, double alpha, double p, double c, double y)
{
    require_quadratic_params(n, alpha, p, c);
    require(y >= 0.0, "g_func: y must be >= 0");
    const double K = (1.0 - 1.0 / p) * c / 2.0;
    return binomial_remainder(alpha, y) + K * y * y / power(1.0 + y, alpha);
}

double crit_point(std::size_t n, double alpha, double p, double c)
{
    require_quadratic_params(n, alpha, p, c);
    return alpha * (alpha + 1.0) / (c * power(static_cast<double>(n), alpha) * (1.0 - 1.0 / p));
}

double crit_point_value(std::size_t n, double alpha, double p, double c)
{
    require_quadratic_params(n, alpha, p, c);
    return 1.0 - alpha * alpha / (2.0 * c * (1.0 - 1.0 / p)) - ratio_power(n, alpha);
}

double xn_upper(std::size_t n, double alpha)
{
    require(n >= 1, "xn_upper: n must be >= 1");
    const double nd = static_cast<double>(n);
    return (alpha + 1.0) / (nd * power(nd + 1.0, alpha));
}

const char* to_string(ProofBranch branch) noexcept
{
    return branch == ProofBranch::critical_point ? "critical_point" : "endpoint";
}

ProofBranch proof_branch(std::size_t n, double alpha, double p, double c)
{
    return xn_upper(n, alpha) >= crit_point(n, alpha, p, c) ? ProofBranch::critical_point : ProofBranch::endpoint;
}

double h_func(std::size_t k, double alpha)
{
    require(k >= 1, "h_func: k must be >= 1");
    require(within(alpha, 0.0, 1.0), "h_func: alpha must lie in [0, 1]");
    const double kd = static_cast<double>(k);
    const double kk = 2.0 * kd * (kd + 1.0);
    return kk * alpha * (1.0 - alpha) / (alpha * alpha - (2.0 * kd + 1.0) * alpha + kk);
}

double h_argmax(std::size_t k)
{
    require(k >= 1, "h_argmax: k must be >= 1");
    const double kd = static_cast<double>(k);
    return kd + 1.0 - std::sqrt(kd * (kd + 1.0));
}

double h_max(std::size_t k)
{
    require(k >= 1, "h_max: k must be >= 1");
    const double kd = static_cast<double>(k);
    const double r  = std::sqrt(kd * (kd + 1.0));
    return 2.0 * kd * (kd + 1.0) * (r - kd) / (2.0 * kd * kd + kd + (2.0 * kd - 1.0) * r);
}

double p_bound_c1(std::size_t k)
{
    return 1.0 / (1.0 - h_max(k));
}

double B_func(double x)
{
    require(x > 1.0 && x <= std::sqrt(4.0 / 3.0) + kDomainSlack, "B_func: x must lie in (1, sqrt(4/3)]");
    return b_formula(x);
}

double p_bound_gen(std::size_t n)
{
    require(n >= 2, "p_bound_gen: n must be >= 2");
    return 1.0 / (1.0 - b_formula(std::sqrt(1.0 + 1.0 / static_cast<double>(n))));
}

ConstantsTable constants_table()
{
    ConstantsTable t;
    t.alpha0           = find_alpha0().value;
    t.p1               = compute_p1();
    t.bound_c1_k2      = p_bound_c1(2);
    // B is increasing on (1, sqrt(4/3)], so sqrt(1+1/n) decreasing in n makes n = 3 the largest for n >= 3.
    t.bound_gen        = std::max(p_bound_gen(2), p_bound_gen(3));
    t.lemma4_threshold = lemma4_threshold();

    t.entries = {
        {"alpha0", t.alpha0, "bisection of v(a) = 2(a+1) - (1+a)^2 ln 2 - 2^a on [0, 1], tol 1e-12"},
        {"p1", t.p1, "closed-form solve of 2^-a0 = 1/(a0+1) + (1-1/p)/(2(a0+1)^2) for p"},
        {"bound_c1_k2", t.bound_c1_k2, "(1 - h_2(3 - sqrt 6))^-1 with the closed-form maximum of h_2"},
        {"bound_gen", t.bound_gen, "max over n in {2, 3} of (1 - B(sqrt(1 + 1/n)))^-1"},
        {"lemma4_threshold", t.lemma4_threshold, "1/(2(1 - ln 2)), root of ln 2 - 1 + 1/(2p)"},
    };
    return t;
}

} // namespace wmnorm::analytic
