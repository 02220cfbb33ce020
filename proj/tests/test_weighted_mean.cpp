#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "wmnorm/compensated_sum.hpp"
#include "wmnorm/errors.hpp"
#include "wmnorm/weighted_mean.hpp"

using namespace wmnorm;

TEST_CASE("weight of power schemes")
{
    CHECK(weight(WeightScheme(0.0), 7) == 1.0);
    CHECK(weight(WeightScheme(1.0), 5) == 5.0);
    CHECK(weight(WeightScheme(0.5), 4) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(weight(WeightScheme(2.0), 9) == 81.0);
    for (double a : {-0.9, -0.3, 0.0, 0.37, 1.0, 2.0, 3.5})
        CHECK(weight(WeightScheme(a), 1) == 1.0);

    CHECK_THROWS_AS((void)weight(WeightScheme(0.5), 0), DomainError);
    CHECK_THROWS_AS(WeightScheme(-1.0), DomainError);
    CHECK_THROWS_AS(WeightScheme(-2.5), DomainError);
    CHECK_THROWS_AS(WeightScheme(std::nan("")), DomainError);
}

TEST_CASE("prefix sums")
{
    CHECK(prefix_sums(WeightScheme(1.0), 3) == std::vector<double>{1, 3, 6});
    CHECK(prefix_sums(WeightScheme(0.0), 4) == std::vector<double>{1, 2, 3, 4});
    // 1 + 4 + 9 by integer summation.
    CHECK(prefix_sums(WeightScheme(2.0), 3) == std::vector<double>{1, 5, 14});
    CHECK_THROWS_AS((void)prefix_sums(WeightScheme(1.0), 0), DomainError);

    SUBCASE("consecutive differences recover the weights")
    {
        for (double a : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            const WeightScheme s(a);
            const auto sums = prefix_sums(s, 10000);
            for (std::size_t n = 2; n <= sums.size(); ++n) {
                const double w = weight(s, n);
                REQUIRE(std::abs((sums[n - 1] - sums[n - 2]) - w) <= 1e-12 * sums[n - 1]);
            }
        }
    }

    SUBCASE("agrees with long double summation")
    {
        for (double a : {0.1, 0.5, 0.9})
            CHECK(oracle::rel_diff(prefix_sums(WeightScheme(a), 50000).back(),
                                   static_cast<double>(oracle::partial_sum(a, 50000))) < 1e-15);
    }
}

TEST_CASE("compensated sum keeps digits plain accumulation loses")
{
    CompensatedSum acc(1.0);
    double plain = 1.0;
    for (int i = 0; i < 1000000; ++i) {
        acc += 1e-16;
        plain += 1e-16;
    }
    CHECK(plain == 1.0);
    CHECK(acc.value() == doctest::Approx(1.0 + 1e-10).epsilon(1e-15));
}

TEST_CASE("operator entries")
{
    const TruncatedOperator op1(WeightScheme(1.0), 3);
    CHECK(entry(op1, 3, 2) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(entry(op1, 2, 3) == 0.0);

    const TruncatedOperator op0(WeightScheme(0.0), 5);
    CHECK(entry(op0, 5, 1) == doctest::Approx(0.2).epsilon(1e-15));

    CHECK_THROWS_AS((void)entry(op1, 0, 1), DomainError);
    CHECK_THROWS_AS((void)entry(op1, 4, 1), DomainError);
    CHECK_THROWS_AS((void)entry(op1, 1, 4), DomainError);
    CHECK_THROWS_AS(TruncatedOperator(WeightScheme(1.0), 0), DomainError);
}

TEST_CASE("rows sum to one and prefix sums increase")
{
    for (double a : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const TruncatedOperator op(WeightScheme(a), 10000);
        const auto sums = op.prefix_sums();
        double worst    = 0.0;
        for (std::size_t n = 1; n <= op.size(); ++n) {
            CompensatedSum row;
            for (std::size_t k = 1; k <= n; ++k)
                row += entry(op, n, k);
            worst = std::max(worst, std::abs(row.value() - 1.0));
            if (n > 1)
                REQUIRE(sums[n - 1] > sums[n - 2]);
        }
        INFO("alpha = " << a);
        CHECK(worst <= 1e-12);
        CHECK(sums[0] > 0.0);
    }
}

TEST_CASE("lambda ratio")
{
    CHECK(lambda_ratio(WeightScheme(0.0), 9) == 9.0);
    CHECK(lambda_ratio(WeightScheme(1.0), 4) == 2.5);
    // (1 + 4 + 9) / 9
    CHECK(lambda_ratio(WeightScheme(2.0), 3) == doctest::Approx(14.0 / 9.0).epsilon(1e-15));
    CHECK_THROWS_AS((void)lambda_ratio(WeightScheme(2.0), 0), DomainError);

    SUBCASE("operator and scheme overloads agree")
    {
        const TruncatedOperator op(WeightScheme(0.3), 500);
        for (std::size_t n : {1u, 2u, 17u, 500u})
            CHECK(lambda_ratio(op, n) == doctest::Approx(lambda_ratio(WeightScheme(0.3), n)).epsilon(1e-14));
    }

    SUBCASE("increasing in n for alpha in [0, 1]")
    {
        for (double a = 0.0; a <= 1.0 + 1e-12; a += 0.125) {
            const TruncatedOperator op(WeightScheme(a), 10000);
            for (std::size_t n = 2; n <= op.size(); ++n)
                REQUIRE(lambda_ratio(op, n) > lambda_ratio(op, n - 1));
        }
    }
}
