#include "wmnorm/grid.hpp"

#include <algorithm>
#include <cmath>

#include "wmnorm/errors.hpp"

namespace wmnorm {

using detail::require;

std::vector<double> stepped_range(double lo, double hi, double step)
{
    require(std::isfinite(lo) && std::isfinite(hi) && std::isfinite(step), "range bounds must be finite");
    require(step > 0.0, "range step must be > 0");
    require(lo <= hi, "range is empty (lo > hi)");

    const double q       = (hi - lo) / step;
    const double rounded = std::round(q);
    const bool hits_hi   = std::abs(q - rounded) <= 1e-12 * std::max(1.0, q);
    const auto last      = static_cast<std::size_t>(hits_hi ? rounded : std::floor(q));

    std::vector<double> out;
    out.reserve(last + 1);
    for (std::size_t i = 0; i <= last; ++i)
        out.push_back(lo + static_cast<double>(i) * step);
    if (hits_hi)
        out.back() = hi;
    return out;
}

std::vector<double> linspace(double lo, double hi, std::size_t count)
{
    require(count >= 1, "linspace needs at least one point");
    if (count == 1)
        return {lo};
    std::vector<double> out(count);
    const double h = (hi - lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i)
        out[i] = lo + static_cast<double>(i) * h;
    out.back() = hi;
    return out;
}

std::vector<std::size_t> index_range(std::size_t lo, std::size_t hi)
{
    require(lo <= hi, "index range is empty (lo > hi)");
    std::vector<std::size_t> out;
    out.reserve(hi - lo + 1);
    for (std::size_t i = lo; i <= hi; ++i)
        out.push_back(i);
    return out;
}

} // namespace wmnorm
