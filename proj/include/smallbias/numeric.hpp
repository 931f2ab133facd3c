// numeric.hpp
// Small numeric helpers shared by the parameter rules.

#pragma once

#include <cstddef>
#include <string>

namespace smallbias {

/// ⌈x⌉ for x ≥ 0, treating values within 1e-9 (relative) above an integer as that
/// integer, so that e.g. 2·12/0.5² = 96.00000000000001 rounds to 96.
std::size_t ceil_snapped(double x);

/// Shortest decimal text that reads back to the same double.
std::string format_real(double x);

}  // namespace smallbias
