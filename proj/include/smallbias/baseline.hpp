// baseline.hpp
// The i.i.d. construction: |S| independent uniform elements of F_2^n.

#pragma once

#include "smallbias/bias.hpp"
#include "smallbias/entropy.hpp"

#include <cstddef>
#include <optional>

namespace smallbias {

/// Default sample count ⌈4n/ε²⌉.
std::size_t naive_size(std::size_t n, double epsilon);

/// Draws `size` (default naive_size) uniform elements, n bits each.
CandidateSet construct_naive(std::size_t n, double epsilon, std::optional<std::size_t> size, EntropySource& src);

}  // namespace smallbias
