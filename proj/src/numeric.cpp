// numeric.cpp

#include "smallbias/numeric.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace smallbias {

std::size_t ceil_snapped(double x) {
    if (!(x >= 0.0) || !std::isfinite(x)) throw std::domain_error("ceil_snapped: argument must be finite and >= 0");
    const double nearest = std::round(x);
    if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, x)) return static_cast<std::size_t>(nearest);
    return static_cast<std::size_t>(std::ceil(x));
}

std::string format_real(double x) { return fmt::format("{}", x); }

}  // namespace smallbias
