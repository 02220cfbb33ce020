#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wmnorm/analytic.hpp"
#include "wmnorm/criteria.hpp"
#include "wmnorm/errors.hpp"
#include "wmnorm/grid.hpp"

using namespace wmnorm;

TEST_CASE("Cartlidge differences")
{
    for (std::size_t n : {1u, 2u, 10u, 1000u}) {
        CHECK(cartlidge_diff(WeightScheme(0.0), n) == 1.0);
        CHECK(cartlidge_diff(WeightScheme(1.0), n) == 0.5);
    }
    CHECK(cartlidge_diff(WeightScheme(0.5), 1) ==
          doctest::Approx((1.0 + std::sqrt(2.0)) / std::sqrt(2.0) - 1.0).epsilon(1e-15));
    CHECK_THROWS_AS((void)cartlidge_diff(WeightScheme(0.5), 0), DomainError);
}

TEST_CASE("Cartlidge supremum over a finite range")
{
    auto c0 = cartlidge_sup(WeightScheme(0.0), 100);
    CHECK(c0.value == 1.0);
    CHECK(c0.argmax == 1);
    auto c1 = cartlidge_sup(WeightScheme(1.0), 100);
    CHECK(c1.value == 0.5);
    CHECK(c1.argmax == 1);

    auto half = cartlidge_sup(WeightScheme(0.5), 10000);
    CHECK(half.value >= 2.0 / 3.0);
    CHECK(half.value == doctest::Approx(cartlidge_diff(WeightScheme(0.5), half.argmax)).epsilon(1e-13));
    CHECK_FALSE(half.tail_rising);

    // alpha < 0 approaches 1/(1+alpha) from below, so the tail is still rising.
    CHECK(cartlidge_sup(WeightScheme(-0.5), 1000).tail_rising);

    SUBCASE("differences settle at 1/(1+alpha)")
    {
        for (double a : {0.0, 0.5, 1.0}) {
            const WeightScheme s(a);
            const auto sums = prefix_sums(s, 10001);
            for (std::size_t n = 9901; n <= 10000; ++n) {
                const double d = sums[n] / s.weight(n + 1) - sums[n - 1] / s.weight(n);
                REQUIRE(std::abs(d - 1.0 / (1.0 + a)) <= 1e-3);
            }
        }
    }
}

TEST_CASE("criterion config")
{
    const auto c = CriterionConfig::make(0.5, 1.35);
    CHECK(c.L == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(c.uses_default_L());
    CHECK(c.c(7) == 1.0);

    const auto c3 = CriterionConfig::make(0.5, 1.35, std::nullopt, CRule::three_n_rule);
    for (std::size_t n = 1; n < 1000; ++n)
        REQUIRE(c3.c(n) >= 1.0);
    CHECK(c3.c(2) == doctest::Approx(6.0 / 5.0));

    CHECK_FALSE(CriterionConfig::make(0.5, 2.0, 0.9).uses_default_L());
    CHECK_THROWS_AS((void)CriterionConfig::make(0.0, 2.0, 3.0), DomainError);
    CHECK_THROWS_AS((void)CriterionConfig::make(0.0, 2.0, 2.0), DomainError);
    CHECK_THROWS_AS((void)CriterionConfig::make(0.0, 2.0, -1.0), DomainError);
    CHECK_THROWS_AS((void)CriterionConfig::make(1.5, 2.0), DomainError);
    CHECK_THROWS_AS((void)CriterionConfig::make(0.5, 1.0), DomainError);
    CHECK(parse_c_rule("three_n_rule") == CRule::three_n_rule);
    CHECK_THROWS_AS((void)parse_c_rule("cubic"), DomainError);
}

TEST_CASE("refined condition margin")
{
    // RHS = 1 * (1/2)^-1 + 1/2, LHS = 2
    CHECK(gao_margin(CriterionConfig::make(0.0, 2.0, 1.0), 1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(gao_margin(CriterionConfig::make(0.0, 2.0, 1.0), 2) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK(gao_margin(CriterionConfig::make(1.0, 2.0, 0.5), 1) == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
    CHECK_THROWS_AS((void)gao_margin(CriterionConfig::make(1.0, 2.0, 0.5), 0), DomainError);

    SUBCASE("base of the power must stay positive")
    {
        const auto cfg = CriterionConfig::make(0.0, 2.0, 1.5);
        CHECK_THROWS_WITH_AS((void)detail::gao_margin_from_ratio(cfg, 0.5, 17),
                             doctest::Contains("n = 17"), DomainError);
    }

    SUBCASE("stable form agrees with the direct formula")
    {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> ua(0.0, 1.0), up(1.05, 3.0);
        std::uniform_int_distribution<std::size_t> un(1, 400);
        for (int i = 0; i < 300; ++i) {
            const double a = ua(rng), p = up(rng);
            const std::size_t n = un(rng);
            const auto cfg = CriterionConfig::make(a, p);
            REQUIRE(std::abs(gao_margin(cfg, n) - oracle::gao_margin(a, p, cfg.L, n)) <= 1e-13 * static_cast<double>(n));
        }
    }
}

TEST_CASE("n = 1 condition in quadratic form")
{
    CHECK(n1_condition_margin(0.0, 2.0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(n1_condition_margin(1.0, 2.0) == doctest::Approx(1.0 / 16.0).epsilon(1e-15));
    for (double p : {1.0001, 1.01, 1.5, 9.0})
        CHECK(n1_condition_margin(0.0, p) == doctest::Approx((1.0 - 1.0 / p) / 2.0).epsilon(1e-14));
    CHECK_THROWS_AS((void)n1_condition_margin(0.3, 1.0), DomainError);
}

TEST_CASE("n = 1: quadratic form versus the exact condition")
{
    const double p1 = analytic::compute_p1();
    const auto alphas = linspace(0.0, 1.0, 100);
    const auto ps     = linspace(1.0, 3.0, 101);
    std::size_t disagreements = 0;
    for (double a : alphas)
        for (std::size_t j = 1; j < ps.size(); ++j) {
            const double p     = ps[j];
            const double exact = gao_margin(CriterionConfig::make(a, p), 1);
            const double quad  = n1_condition_margin(a, p);
            // The quadratic form is a truncated Taylor lower bound, so it can only be more pessimistic.
            REQUIRE(!(quad >= 0.0 && exact < 0.0));
            if (p >= p1)
                REQUIRE((quad >= 0.0) == (exact >= 0.0));
            if ((quad >= 0.0) != (exact >= 0.0))
                ++disagreements;
        }
    // Below p1 the exact condition can hold while the quadratic one fails.
    CHECK(disagreements > 0);
    CHECK(n1_condition_margin(0.97, 1.02) < 0.0);
    CHECK(gao_margin(CriterionConfig::make(0.97, 1.02), 1) > 0.0);
}

TEST_CASE("certify")
{
    const auto hardy = certify(CriterionConfig::make(0.0, 2.0, 1.0), 10000);
    CHECK(hardy.passed());
    CHECK(hardy.min_margin > 0.0);
    CHECK(hardy.cartlidge_sup == 1.0);
    CHECK(hardy.n1_margin.has_value());

    CHECK(certify(CriterionConfig::make(1.0, 2.0, 0.5), 10000).passed());
    const auto mid = certify(CriterionConfig::make(0.5, 1.35, 2.0 / 3.0), 10000);
    CHECK(mid.passed());
    CHECK(mid.min_margin >= 0.0);
    CHECK(mid.argmin_n >= 1);
    CHECK(mid.branch_critical_point + mid.branch_endpoint == 9999);

    SUBCASE("min margin matches a direct scan")
    {
        const auto cfg = CriterionConfig::make(0.3, 1.7);
        const auto r   = certify(cfg, 300);
        double best    = INFINITY;
        std::size_t at = 0;
        for (std::size_t n = 1; n <= 300; ++n) {
            const double m = oracle::gao_margin(0.3, 1.7, cfg.L, n);
            if (m < best) {
                best = m;
                at   = n;
            }
        }
        CHECK(r.min_margin == doctest::Approx(best).epsilon(1e-10));
        CHECK(r.argmin_n == at);
    }

    SUBCASE("failures are located")
    {
        const auto r = certify(CriterionConfig::make(0.0, 2.0, 0.5), 50);
        CHECK_FALSE(r.passed());
        REQUIRE(r.first_failure.has_value());
        CHECK(*r.first_failure == 1);
        CHECK(r.min_margin < 0.0);
        CHECK_FALSE(r.n1_margin.has_value());
    }

    SUBCASE("thread count does not change the report")
    {
        for (double a : {0.0, 0.37, 1.0}) {
            const auto cfg = CriterionConfig::make(a, 1.4, std::nullopt, CRule::three_n_rule);
            const auto one = certify(cfg, 20011, 1);
            const auto six = certify(cfg, 20011, 6);
            CHECK(one.min_margin == six.min_margin);
            CHECK(one.argmin_n == six.argmin_n);
            CHECK(one.first_failure == six.first_failure);
            CHECK(one.cartlidge_sup == six.cartlidge_sup);
            CHECK(one.cartlidge_argmax == six.cartlidge_argmax);
            CHECK(one.branch_critical_point == six.branch_critical_point);
        }
    }
}

TEST_CASE("certification across the first proven region (coarse)")
{
    for (double a : stepped_range(0.0, 1.0, 0.1))
        for (double p : stepped_range(1.35, 3.0, 0.25)) {
            INFO("alpha=" << a << " p=" << p);
            CHECK(certify(CriterionConfig::make(a, p), 10000).passed());
        }
}

TEST_CASE("combined route for 1 < p < 1.35 and alpha >= 1/p")
{
    for (double p : stepped_range(1.02, 1.34, 0.04))
        for (double a : stepped_range(1.0 / p, 1.0, 0.04)) {
            const auto v = certify_combined(CriterionConfig::make(a, p), 10000);
            INFO("alpha=" << a << " p=" << p);
            CHECK(v.passed);
            CHECK(v.route != "none");
        }

    // Lemma-4 route only applies when alpha >= 1/p.
    const auto outside = certify_combined(CriterionConfig::make(0.2, 1.1), 1000);
    CHECK_FALSE(outside.lemma4.has_value());

    const auto route = lemma4_route(1.7, 100);
    CHECK_FALSE(route.passed());
    CHECK(*route.first_failure == 1);
}

TEST_CASE("bound on x_n = 1/Lambda_n")
{
    CHECK(xn_bound_margin(0.0, 5) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(std::abs(xn_bound_margin(1.0, 1)) <= 1e-15);
    const double v = xn_bound_margin(0.5, 10);
    const double direct = 1.5 / (10.0 * std::sqrt(11.0)) - 1.0 / static_cast<double>(oracle::partial_sum(0.5, 10));
    CHECK(v > 0.0);
    CHECK(v == doctest::Approx(direct).epsilon(1e-13));

    for (double a : stepped_range(0.0, 1.0, 0.01))
        for (std::size_t n = 1; n <= 1000; ++n)
            REQUIRE(xn_bound_margin(a, n) >= -1e-12);
}
