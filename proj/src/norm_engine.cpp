#include "wmnorm/norm_engine.hpp"

#include <algorithm>
#include <cmath>

#include "wmnorm/compensated_sum.hpp"
#include "wmnorm/errors.hpp"

namespace wmnorm {

using detail::require;

namespace {

void require_exponent(double p)
{
    require(std::isfinite(p) && p > 1.0, "exponent p must be > 1");
}

// v <- (v / max v)^exponent, entrywise. Nonnegative input only.
void scaled_power_in_place(std::vector<double>& v, double exponent)
{
    double largest = 0.0;
    for (double x : v) {
        require(x >= 0.0, "entrywise power applied to a negative entry");
        largest = std::max(largest, x);
    }
    if (largest == 0.0)
        return;
    for (double& x : v)
        x = std::pow(x / largest, exponent);
}

void normalize_in_place(std::vector<double>& v, double p)
{
    const double norm = p_norm(v, p);
    require(norm > 0.0, "power iterate vanished");
    for (double& x : v)
        x /= norm;
}

} // namespace

const char* to_string(BoundDirection direction) noexcept
{
    return direction == BoundDirection::lower_bound ? "lower_bound" : "upper_bound";
}

double p_norm(std::span<const double> values, double p)
{
    require_exponent(p);
    double largest = 0.0;
    for (double x : values) {
        require(std::isfinite(x), "p_norm of a non-finite entry");
        largest = std::max(largest, std::abs(x));
    }
    if (largest == 0.0)
        return 0.0;
    CompensatedSum acc;
    for (double x : values)
        acc += std::pow(std::abs(x) / largest, p);
    return largest * std::pow(acc.value(), 1.0 / p);
}

std::vector<double> apply(const TruncatedOperator& op, std::span<const double> a)
{
    require(a.size() == op.size(), "vector length does not match operator size");
    const auto weights = op.weights();
    const auto sums    = op.prefix_sums();
    std::vector<double> out(a.size());
    CompensatedSum running;
    for (std::size_t i = 0; i < a.size(); ++i) {
        running += weights[i] * a[i];
        out[i] = running.value() / sums[i];
    }
    return out;
}

std::vector<double> apply_adjoint(const TruncatedOperator& op, std::span<const double> y)
{
    require(y.size() == op.size(), "vector length does not match operator size");
    const auto weights = op.weights();
    const auto sums    = op.prefix_sums();
    std::vector<double> out(y.size());
    CompensatedSum running;
    for (std::size_t i = y.size(); i-- > 0;) {
        running += y[i] / sums[i];
        out[i] = weights[i] * running.value();
    }
    return out;
}

NormEstimate estimate_norm(const TruncatedOperator& op, double p, const PowerOptions& options)
{
    require_exponent(p);
    require(options.tol > 0.0, "tolerance must be > 0");
    require(options.max_iter >= 1, "max_iter must be >= 1");

    NormEstimate est;
    est.size      = op.size();
    est.direction = BoundDirection::lower_bound;

    std::vector<double> x(op.size(), 1.0);
    normalize_in_place(x, p);

    double previous = 0.0;
    for (std::size_t it = 0; it < options.max_iter; ++it) {
        std::vector<double> y = wmnorm::apply(op, x);
        const double ratio    = p_norm(y, p);
        if (options.record_history)
            est.history.push_back(ratio);

        if (it > 0) {
            if (ratio < previous - 1e-12 * std::max(1.0, previous))
                est.monotone = false;
            est.residual = std::abs(ratio - previous);
        }
        est.value      = std::max(est.value, ratio);
        est.iterations = it + 1;
        if (it > 0 && est.residual < options.tol) {
            est.converged = true;
            break;
        }
        previous = ratio;

        scaled_power_in_place(y, p - 1.0);
        x = wmnorm::apply_adjoint(op, y);
        scaled_power_in_place(x, 1.0 / (p - 1.0));
        normalize_in_place(x, p);
    }
    return est;
}

double witness_lower_bound(const WeightScheme& scheme, double p, double eps, std::size_t size)
{
    require_exponent(p);
    require(eps > 0.0, "witness eps must be > 0");
    require(size >= 1, "witness length must be >= 1");
    require((scheme.alpha() + 1.0) * p > 1.0, "witness requires (alpha+1)p > 1");

    const double decay = -(1.0 / p + eps);
    CompensatedSum partial;     // Lambda_n
    CompensatedSum weighted;    // sum lambda_k a_k
    CompensatedSum image_power; // sum (A a)_n^p
    CompensatedSum input_power; // sum a_n^p
    for (std::size_t n = 1; n <= size; ++n) {
        const double log_n = std::log(static_cast<double>(n));
        const double a     = std::exp(decay * log_n);
        const double w     = scheme.weight(n);
        partial += w;
        weighted += w * a;
        image_power += std::pow(weighted.value() / partial.value(), p);
        input_power += std::exp(p * decay * log_n);
    }
    return std::pow(image_power.value() / input_power.value(), 1.0 / p);
}

double sharp_constant(double p, double alpha)
{
    require_exponent(p);
    const double s = (alpha + 1.0) * p;
    require(s > 1.0, "sharp constant requires (alpha+1)p > 1");
    return s / (s - 1.0);
}

double cartlidge_upper_bound(double p, double L)
{
    require(L > 0.0 && L < p, "Cartlidge bound requires 0 < L < p");
    return p / (p - L);
}

} // namespace wmnorm
