#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wmnorm {

/// Power weights lambda_n = n^alpha, alpha > -1.
class WeightScheme
{
public:
    explicit WeightScheme(double alpha);

    [[nodiscard]] double alpha() const noexcept { return alpha_; }

    /// n^alpha for n >= 1. Exact for alpha in {0, 1, 2}.
    [[nodiscard]] double weight(std::size_t n) const;

private:
    double alpha_;
};

/*!
    Leading N x N block of the weighted mean matrix a(n,k) = lambda_k / Lambda_n (k <= n), with
    Lambda_n = lambda_1 + ... + lambda_n.

    Only the weights and their compensated prefix sums are stored; the matrix itself is never formed. Indices in the
    public interface are 1-based to match the usual matrix notation.
*/
class TruncatedOperator
{
public:
    TruncatedOperator(WeightScheme scheme, std::size_t size);

    [[nodiscard]] const WeightScheme& scheme() const noexcept { return scheme_; }
    [[nodiscard]] std::size_t size() const noexcept { return weights_.size(); }

    [[nodiscard]] std::span<const double> weights() const noexcept { return weights_; }
    [[nodiscard]] std::span<const double> prefix_sums() const noexcept { return prefix_sums_; }

    /// lambda_k, 1-based.
    [[nodiscard]] double weight(std::size_t k) const;
    /// Lambda_n, 1-based.
    [[nodiscard]] double partial_sum(std::size_t n) const;

private:
    WeightScheme scheme_;
    std::vector<double> weights_;
    std::vector<double> prefix_sums_;
};

[[nodiscard]] double weight(const WeightScheme& scheme, std::size_t n);

/// [Lambda_1, ..., Lambda_N] by compensated summation.
[[nodiscard]] std::vector<double> prefix_sums(const WeightScheme& scheme, std::size_t size);

/// Matrix entry a(n,k); zero above the diagonal.
[[nodiscard]] double entry(const TruncatedOperator& op, std::size_t n, std::size_t k);

/// Lambda_n / lambda_n. The scheme overload sums from scratch in O(n).
[[nodiscard]] double lambda_ratio(const WeightScheme& scheme, std::size_t n);
[[nodiscard]] double lambda_ratio(const TruncatedOperator& op, std::size_t n);

} // namespace wmnorm
