#pragma once

#include <cstddef>
#include <vector>

namespace wmnorm {

/*!
    lo, lo + step, lo + 2 step, ... up to hi. hi itself is included (exactly) when (hi - lo)/step is an integer to
    within 1e-12 relative; otherwise the last value is the largest grid point below hi.
*/
[[nodiscard]] std::vector<double> stepped_range(double lo, double hi, double step);

/// k evenly spaced points from lo to hi inclusive; a single point is lo.
[[nodiscard]] std::vector<double> linspace(double lo, double hi, std::size_t count);

/// lo, lo+1, ..., hi.
[[nodiscard]] std::vector<std::size_t> index_range(std::size_t lo, std::size_t hi);

} // namespace wmnorm
