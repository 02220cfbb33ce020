#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "wmnorm/errors.hpp"

namespace wmnorm::analytic {

/// Bisection result. The returned value is the midpoint of the final bracket.
struct RootResult
{
    double value      = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double tolerance  = 0.0;
    std::size_t iterations = 0;
};

/// Bisection on [lo, hi]; f(lo) and f(hi) must have opposite signs.
template <typename F>
RootResult bisect(F&& f, double lo, double hi, double tol)
{
    detail::require(tol > 0.0 && lo < hi, "bisection needs tol > 0 and lo < hi");
    double f_lo = f(lo);
    const double f_hi = f(hi);
    detail::require((f_lo <= 0.0 && f_hi >= 0.0) || (f_lo >= 0.0 && f_hi <= 0.0), "bisection bracket has no sign change");

    RootResult r;
    r.tolerance = tol;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        const double f_mid = f(mid);
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo   = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
        ++r.iterations;
    }
    r.bracket_lo = lo;
    r.bracket_hi = hi;
    r.value      = 0.5 * (lo + hi);
    return r;
}

// Extremal exponent for the n = 1 condition.

/// v(a) = 2(a+1) - (1+a)^2 ln 2 - 2^a.
[[nodiscard]] double v_func(double alpha);
/// u(a) = (a+1)^2 / 2^a - a. Satisfies u'(a) = v(a) / 2^a.
[[nodiscard]] double u_func(double alpha);
/// Unique root of v on (0, 1), about 0.524.
[[nodiscard]] RootResult find_alpha0(double tol = 1e-12);
/// Smallest p for which 2^-a <= 1/(a+1) + (1-1/p)/(2(a+1)^2) holds for every a in [0, 1].
[[nodiscard]] double compute_p1();

// Taylor-type lower bounds.

/*!
    (1 - Lx/p)^(1-p) - [1 + (p-1)L x/p + (1/2)(1-1/p) (3n/(3n-1)) L^2 x^2] with L = 1/(1+alpha).
    Defined for 4/3 <= p <= 3/2, 0 <= alpha <= 1/p, 1/n <= x <= 1; DomainError elsewhere.
*/
[[nodiscard]] double lemma1_gap(std::size_t n, double p, double alpha, double x);

/// s(x) = (1+x)^-alpha - 1 + alpha x - alpha(alpha+1) d_n x^2, d_n = n/(2(n+1)), for 0 <= x <= 1/n.
[[nodiscard]] double lemma2_gap(std::size_t n, double alpha, double x);
/// s evaluated at x = 1/n.
[[nodiscard]] double t_func(std::size_t n, double alpha);

// Functions behind the 1 < p <= 1/(2(1 - ln 2)) route.

[[nodiscard]] double w_func(std::size_t n, double p, double x);
/// ln(1+1/n) - 1/n + 1/(p n (n+1)); equals the x-derivative of w_func at x = 1/p.
[[nodiscard]] double w_prime_at_inv_p(std::size_t n, double p);
/// ln(1+y) - y + y^2/(p(1+y)), 0 < y <= 1/2.
[[nodiscard]] double r_func(double p, double y);
/// z - 1 + (1 - z^2)/p, 2/3 <= z < 1. Equals r_func'(y) under z = 1/(1+y).
[[nodiscard]] double a_func(double p, double z);
/// 1/(2(1 - ln 2)): largest p with w_prime_at_inv_p(1, p) >= 0.
[[nodiscard]] double lemma4_threshold();

// Quadratic reduction of the refined condition for n >= 2.

[[nodiscard]] double f_func(std::size_t n, double alpha, double p, double c, double x);
[[nodiscard]] double g_func(std::size_t n, double alpha, double p, double c, double y);
/// Stationary point alpha(alpha+1) / (c n^alpha (1-1/p)) of f_func in x.
[[nodiscard]] double crit_point(std::size_t n, double alpha, double p, double c);
/// f_func at crit_point in closed form: 1 - alpha^2/(2c(1-1/p)) - (n/(n+1))^alpha. May be negative.
[[nodiscard]] double crit_point_value(std::size_t n, double alpha, double p, double c);
/// Upper bound (alpha+1)/(n (n+1)^alpha) on x_n = 1/Lambda_n.
[[nodiscard]] double xn_upper(std::size_t n, double alpha);

/// Which side of the case split a given n falls on.
enum class ProofBranch {
    critical_point, ///< crit_point <= xn_upper: f is bounded below by its stationary value
    endpoint,       ///< crit_point > xn_upper: f is bounded below by its value at xn_upper
};

[[nodiscard]] const char* to_string(ProofBranch branch) noexcept;
[[nodiscard]] ProofBranch proof_branch(std::size_t n, double alpha, double p, double c);

[[nodiscard]] double h_func(std::size_t k, double alpha);
/// k + 1 - sqrt(k(k+1)).
[[nodiscard]] double h_argmax(std::size_t k);
/// h_func at h_argmax, by its closed form.
[[nodiscard]] double h_max(std::size_t k);
/// (1 - h_max(k))^-1.
[[nodiscard]] double p_bound_c1(std::size_t k);

/// B(x) = 2/3 + (2/3) / ((x^4 - 4x^2)/(1+4x) - 1) on (1, sqrt(4/3)], where it is increasing.
[[nodiscard]] double B_func(double x);
/// (1 - B(sqrt(1 + 1/n)))^-1 for n >= 2.
[[nodiscard]] double p_bound_gen(std::size_t n);

struct ConstantEntry
{
    std::string name;
    double value = 0.0;
    std::string method;
};

struct ConstantsTable
{
    double alpha0           = 0.0;
    double p1               = 0.0;
    double bound_c1_k2      = 0.0;
    double bound_gen        = 0.0;
    double lemma4_threshold = 0.0;
    std::vector<ConstantEntry> entries;
};

[[nodiscard]] ConstantsTable constants_table();

} // namespace wmnorm::analytic
