#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace wmnorm::analytic {

/// Gaps at or above this count as nonnegative.
inline constexpr double kGapTolerance = -1e-12;

/// Smallest gap over a parameter grid and where it occurred (first occurrence wins ties).
struct SuiteResult
{
    std::string name;
    double min_gap = std::numeric_limits<double>::infinity();
    std::map<std::string, double> argmin;
    std::size_t points_checked = 0;

    [[nodiscard]] bool passed() const noexcept { return points_checked > 0 && min_gap >= kGapTolerance; }
};

/// Grid for the (1 - Lx/p)^(1-p) bound. Alphas above 1/p are skipped for each p.
struct Lemma1Grid
{
    std::vector<std::size_t> ns;
    std::vector<double> ps;
    std::vector<double> alphas;
    std::size_t x_points = 50;

    static Lemma1Grid defaults();
};

/// Grid for the (1+x)^-alpha bound, x in [0, 1/n].
struct Lemma2Grid
{
    std::vector<std::size_t> ns;
    std::vector<double> alphas;
    std::size_t x_points = 50;

    static Lemma2Grid defaults();
};

/// Grid for the a_p / r_p / w'_{n,p}(1/p) chain.
struct Lemma4Grid
{
    std::vector<double> ps;
    std::size_t z_points = 200;
    std::size_t y_points = 200;
    std::size_t n_max    = 10000;

    static Lemma4Grid defaults();
};

[[nodiscard]] SuiteResult run_lemma1_suite(const Lemma1Grid& grid);

/// Returns the s(x) sweep and the t(alpha) = s(1/n) sweep.
[[nodiscard]] std::vector<SuiteResult> run_lemma2_suite(const Lemma2Grid& grid);

/*!
    Returns three sweeps: a_p(z) >= 0, successive differences of r_p(y) (increasing), and w'_{n,p}(1/p) for
    2 <= n <= n_max plus n = 1 whenever p <= 1/(2(1 - ln 2)).
*/
[[nodiscard]] std::vector<SuiteResult> run_lemma4_suite(const Lemma4Grid& grid);

} // namespace wmnorm::analytic
