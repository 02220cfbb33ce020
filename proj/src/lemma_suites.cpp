#include "wmnorm/lemma_suites.hpp"

#include "wmnorm/analytic.hpp"
#include "wmnorm/grid.hpp"

namespace wmnorm::analytic {

namespace {

SuiteResult named(std::string name)
{
    SuiteResult r;
    r.name = std::move(name);
    return r;
}

void record(SuiteResult& r, double gap, std::map<std::string, double> where)
{
    ++r.points_checked;
    if (gap < r.min_gap) {
        r.min_gap = gap;
        r.argmin  = std::move(where);
    }
}

} // namespace

Lemma1Grid Lemma1Grid::defaults()
{
    return {index_range(1, 20), stepped_range(4.0 / 3.0, 1.5, 0.01), stepped_range(0.0, 1.0, 0.02), 50};
}

Lemma2Grid Lemma2Grid::defaults()
{
    return {index_range(1, 100), stepped_range(0.0, 1.0, 0.01), 50};
}

Lemma4Grid Lemma4Grid::defaults()
{
    // p < 5/3 throughout.
    return {stepped_range(1.01, 1.66, 0.01), 200, 200, 10000};
}

SuiteResult run_lemma1_suite(const Lemma1Grid& grid)
{
    SuiteResult r = named("lemma1");
    for (std::size_t n : grid.ns) {
        const auto xs = linspace(1.0 / static_cast<double>(n), 1.0, grid.x_points);
        for (double p : grid.ps) {
            for (double alpha : grid.alphas) {
                if (alpha > 1.0 / p + 1e-12)
                    continue;
                for (double x : xs)
                    record(r, lemma1_gap(n, p, alpha, x),
                           {{"n", static_cast<double>(n)}, {"p", p}, {"alpha", alpha}, {"x", x}});
            }
        }
    }
    return r;
}

std::vector<SuiteResult> run_lemma2_suite(const Lemma2Grid& grid)
{
    SuiteResult s = named("lemma2");
    SuiteResult t = named("lemma2_endpoint");
    for (std::size_t n : grid.ns) {
        const auto xs = linspace(0.0, 1.0 / static_cast<double>(n), grid.x_points);
        for (double alpha : grid.alphas) {
            for (double x : xs)
                record(s, lemma2_gap(n, alpha, x), {{"n", static_cast<double>(n)}, {"alpha", alpha}, {"x", x}});
            record(t, t_func(n, alpha), {{"n", static_cast<double>(n)}, {"alpha", alpha}});
        }
    }
    return {s, t};
}

std::vector<SuiteResult> run_lemma4_suite(const Lemma4Grid& grid)
{
    SuiteResult a = named("lemma4_a");
    SuiteResult r = named("lemma4_r_increasing");
    SuiteResult w = named("lemma4_w_prime");
    const double threshold = lemma4_threshold();

    for (double p : grid.ps) {
        for (std::size_t i = 0; i < grid.z_points; ++i) {
            const double z = 2.0 / 3.0 + (1.0 / 3.0) * static_cast<double>(i) / static_cast<double>(grid.z_points);
            record(a, a_func(p, z), {{"p", p}, {"z", z}});
        }
        double previous = 0.0;
        for (std::size_t i = 1; i <= grid.y_points; ++i) {
            const double y = 0.5 * static_cast<double>(i) / static_cast<double>(grid.y_points);
            const double v = r_func(p, y);
            if (i > 1)
                record(r, v - previous, {{"p", p}, {"y", y}});
            previous = v;
        }
        const std::size_t first_n = p <= threshold ? 1 : 2;
        for (std::size_t n = first_n; n <= grid.n_max; ++n)
            record(w, w_prime_at_inv_p(n, p), {{"p", p}, {"n", static_cast<double>(n)}});
    }
    return {a, r, w};
}

} // namespace wmnorm::analytic
