// baseline.cpp

#include "smallbias/baseline.hpp"

#include "smallbias/numeric.hpp"

#include <stdexcept>
#include <string>

namespace smallbias {

std::size_t naive_size(std::size_t n, double epsilon) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
    return ceil_snapped(4.0 * static_cast<double>(n) / (epsilon * epsilon));
}

CandidateSet construct_naive(std::size_t n, double epsilon, std::optional<std::size_t> size, EntropySource& src) {
    const std::size_t count = size.value_or(naive_size(n, epsilon));
    if (count < 1) throw std::invalid_argument("size must be at least 1");
    const std::uint64_t before = src.bits_consumed();
    CandidateSet s;
    s.n = n;
    s.method = "naive";
    s.elements.reserve(count);
    for (std::size_t i = 0; i < count; ++i) s.elements.push_back(src.draw_vector(n));
    s.random_bits = src.bits_consumed() - before;
    s.params.emplace_back("epsilon", format_real(epsilon));
    s.params.emplace_back("seed", src.seed_hex());
    s.params.emplace_back("generator", std::string(kGeneratorId));
    return s;
}

}  // namespace smallbias
