#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wmnorm/weighted_mean.hpp"

namespace wmnorm {

enum class BoundDirection { lower_bound, upper_bound };

[[nodiscard]] const char* to_string(BoundDirection direction) noexcept;

struct PowerOptions
{
    double tol              = 1e-10;
    std::size_t max_iter    = 100000;
    bool record_history     = false;
};

/// Estimate of a truncated l^p operator norm together with the direction in which it is certified.
struct NormEstimate
{
    double value               = 0.0;
    BoundDirection direction   = BoundDirection::lower_bound;
    std::size_t iterations     = 0;
    double residual            = 0.0;
    std::size_t size           = 0;
    bool converged             = false;
    /// False if any step decreased the ratio by more than 1e-12 (relative).
    bool monotone              = true;
    /// Ratio at every iterate when PowerOptions::record_history is set.
    std::vector<double> history;
};

/// (sum |a_n|^p)^(1/p), p > 1. Scaled by max |a_n| so large entries do not overflow.
[[nodiscard]] double p_norm(std::span<const double> values, double p);

/// y_n = (sum_{k<=n} lambda_k a_k) / Lambda_n via one forward scan.
[[nodiscard]] std::vector<double> apply(const TruncatedOperator& op, std::span<const double> a);

/// x_k = lambda_k * sum_{n>=k} y_n / Lambda_n via one backward scan.
[[nodiscard]] std::vector<double> apply_adjoint(const TruncatedOperator& op, std::span<const double> y);

/*!
    Lower estimate of ||A||_{p,p} for the truncated operator by the nonlinear power method for nonnegative
    matrices:

        x <- normalize( (A^T (A x)^(p-1))^(1/(p-1)) )

    starting from the all-ones vector. The ratio ||A x||_p / ||x||_p is nondecreasing along the iteration, so
    every iterate is a valid lower bound. Iteration stops when two successive ratios differ by less than tol.
    Running out of iterations is reported through NormEstimate::converged, not as an error.
*/
[[nodiscard]] NormEstimate estimate_norm(const TruncatedOperator& op, double p, const PowerOptions& options = {});

/// ||A a||_p / ||a||_p for a_n = n^(-1/p - eps), n <= size, in one streaming pass without length-N storage.
[[nodiscard]] double witness_lower_bound(const WeightScheme& scheme, double p, double eps, std::size_t size);

/// (alpha+1)p / ((alpha+1)p - 1), the l^p norm of the infinite power-weight mean matrix.
[[nodiscard]] double sharp_constant(double p, double alpha);

/// p / (p - L), valid when 0 < L < p.
[[nodiscard]] double cartlidge_upper_bound(double p, double L);

} // namespace wmnorm
