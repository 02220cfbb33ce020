#include "wmnorm/weighted_mean.hpp"

#include <cmath>
#include <string>

#include "wmnorm/compensated_sum.hpp"
#include "wmnorm/errors.hpp"

namespace wmnorm {

using detail::require;

WeightScheme::WeightScheme(double alpha) : alpha_(alpha)
{
    require(std::isfinite(alpha) && alpha > -1.0, "weight exponent alpha must be finite and > -1");
}

double WeightScheme::weight(std::size_t n) const
{
    require(n >= 1, "weight index must be >= 1");
    const auto x = static_cast<double>(n);
    if (alpha_ == 0.0)
        return 1.0;
    if (alpha_ == 1.0)
        return x;
    if (alpha_ == 2.0)
        return x * x;
    return std::exp(alpha_ * std::log(x));
}

TruncatedOperator::TruncatedOperator(WeightScheme scheme, std::size_t size) : scheme_(scheme)
{
    require(size >= 1, "operator size must be >= 1");
    weights_.resize(size);
    prefix_sums_.resize(size);
    CompensatedSum acc;
    for (std::size_t i = 0; i < size; ++i) {
        weights_[i] = scheme_.weight(i + 1);
        acc += weights_[i];
        prefix_sums_[i] = acc.value();
        // Lambda stalls in double precision once lambda_n drops below its last ulp (alpha very close to -1).
        require(i == 0 || prefix_sums_[i] > prefix_sums_[i - 1],
                "partial sums stopped increasing at n = " + std::to_string(i + 1));
    }
}

double TruncatedOperator::weight(std::size_t k) const
{
    require(k >= 1 && k <= size(), "column index out of range");
    return weights_[k - 1];
}

double TruncatedOperator::partial_sum(std::size_t n) const
{
    require(n >= 1 && n <= size(), "row index out of range");
    return prefix_sums_[n - 1];
}

double weight(const WeightScheme& scheme, std::size_t n)
{
    return scheme.weight(n);
}

std::vector<double> prefix_sums(const WeightScheme& scheme, std::size_t size)
{
    require(size >= 1, "prefix sum length must be >= 1");
    std::vector<double> out(size);
    CompensatedSum acc;
    for (std::size_t i = 0; i < size; ++i) {
        acc += scheme.weight(i + 1);
        out[i] = acc.value();
    }
    return out;
}

double entry(const TruncatedOperator& op, std::size_t n, std::size_t k)
{
    require(n >= 1 && n <= op.size() && k >= 1 && k <= op.size(), "matrix index out of range");
    if (k > n)
        return 0.0;
    return op.weight(k) / op.partial_sum(n);
}

double lambda_ratio(const WeightScheme& scheme, std::size_t n)
{
    require(n >= 1, "index must be >= 1");
    CompensatedSum acc;
    for (std::size_t i = 1; i <= n; ++i)
        acc += scheme.weight(i);
    return acc.value() / scheme.weight(n);
}

double lambda_ratio(const TruncatedOperator& op, std::size_t n)
{
    return op.partial_sum(n) / op.weight(n);
}

} // namespace wmnorm
