#pragma once

#include <cmath>

namespace wmnorm {

/*!
    Running sum with Neumaier's variant of Kahan compensation.

    The low-order bits lost by each addition are collected in a separate term and folded back in when the value is
    read. Unlike plain Kahan summation this stays accurate when an addend is larger than the running sum.
*/
class CompensatedSum
{
public:
    constexpr CompensatedSum() = default;
    constexpr explicit CompensatedSum(double initial) : sum_(initial) {}

    void add(double value) noexcept
    {
        const double t = sum_ + value;
        if (std::abs(sum_) >= std::abs(value))
            compensation_ += (sum_ - t) + value;
        else
            compensation_ += (value - t) + sum_;
        sum_ = t;
    }

    CompensatedSum& operator+=(double value) noexcept
    {
        add(value);
        return *this;
    }

    [[nodiscard]] double value() const noexcept { return sum_ + compensation_; }

private:
    double sum_          = 0.0;
    double compensation_ = 0.0;
};

} // namespace wmnorm
