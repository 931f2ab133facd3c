// nisan.cpp

#include "smallbias/nisan.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace smallbias {

namespace {

// Integer model of a small field F_{2^b}, b ≤ 8, used for exhaustive enumeration.
struct SmallFieldTables {
    std::size_t b;
    std::vector<std::uint8_t> mul;  // mul[a * 2^b + y] = a·y

    explicit SmallFieldTables(const FieldPtr& field) : b(field->degree()) {
        const std::size_t size = std::size_t{1} << b;
        mul.resize(size * size);
        for (std::size_t a = 0; a < size; ++a) {
            const FieldElement fa = field->from_word(a);
            for (std::size_t y = 0; y < size; ++y) {
                mul[a * size + y] = static_cast<std::uint8_t>(field_mul(fa, field->from_word(y)).coeffs().low_word());
            }
        }
    }

    std::uint32_t apply(std::uint32_t a, std::uint32_t c, std::uint32_t y) const {
        return mul[(static_cast<std::size_t>(a) << b) + y] ^ c;
    }
};

void check_harness_params(std::size_t b, std::size_t t) {
    if (b < 1 || b > 8) throw std::invalid_argument("harness: block size must be in 1..8");
    if (t < 1 || t > 8) throw std::invalid_argument("harness: t must be in 1..8");
    if (seed_length(b, t) > kMaxHarnessSeedBits) {
        throw std::invalid_argument("harness: seed length " + std::to_string(seed_length(b, t)) +
                                    " bits is too large to enumerate");
    }
}

// Calls visit(blocks) with the first t output blocks for every seed.
template <typename Visit>
void for_each_seed_output(const SmallFieldTables& tables, std::size_t t, Visit&& visit) {
    const std::size_t b = tables.b;
    const std::size_t k = ceil_log2(t);
    const std::uint32_t mask = (std::uint32_t{1} << b) - 1;
    const std::uint64_t seeds = std::uint64_t{1} << seed_length(b, t);
    std::vector<std::uint32_t> blocks(std::size_t{1} << k);
    for (std::uint64_t s = 0; s < seeds; ++s) {
        blocks[0] = static_cast<std::uint32_t>(s) & mask;
        std::size_t count = 1;
        for (std::size_t j = k; j >= 1; --j) {
            const auto a = static_cast<std::uint32_t>(s >> (b * (2 * j - 1))) & mask;
            const auto c = static_cast<std::uint32_t>(s >> (b * (2 * j))) & mask;
            for (std::size_t i = count; i-- > 0;) {
                blocks[2 * i] = blocks[i];
                blocks[2 * i + 1] = tables.apply(a, c, blocks[i]);
            }
            count *= 2;
        }
        visit(std::span<const std::uint32_t>(blocks.data(), t));
    }
}

}  // namespace

std::size_t ceil_log2(std::uint64_t t) {
    if (t == 0) throw std::invalid_argument("ceil_log2: t must be positive");
    return t == 1 ? 0 : static_cast<std::size_t>(std::bit_width(t - 1));
}

std::size_t seed_length(std::size_t b, std::size_t t) {
    if (b < 1 || t < 1) throw std::invalid_argument("seed_length: b and t must be positive");
    return b * (2 * ceil_log2(t) + 1);
}

std::vector<FieldElement> expand(const NisanSeed& seed, std::size_t k) {
    if (seed.hashes.size() != k) {
        throw std::invalid_argument("expand: expected " + std::to_string(k) + " hashes, got " +
                                    std::to_string(seed.hashes.size()));
    }
    // Unroll from the top: h_k splits first, so each pass replaces y by (y, h_j(y)).
    std::vector<FieldElement> blocks{seed.x0};
    blocks.reserve(std::size_t{1} << k);
    for (std::size_t j = k; j >= 1; --j) {
        const AffineHash& h = seed.hashes[j - 1];
        std::vector<FieldElement> next;
        next.reserve(blocks.size() * 2);
        for (const auto& y : blocks) {
            next.push_back(y);
            next.push_back(h(y));
        }
        blocks = std::move(next);
    }
    return blocks;
}

NisanSeed sample_seed(const FieldPtr& block_field, std::size_t t, EntropySource& src) {
    const std::size_t b = block_field->degree();
    const std::size_t k = ceil_log2(t);
    NisanSeed seed;
    seed.x0 = block_field->from_bits(src.draw_vector(b));
    seed.hashes.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
        FieldElement a = block_field->from_bits(src.draw_vector(b));
        FieldElement c = block_field->from_bits(src.draw_vector(b));
        seed.hashes.push_back(AffineHash{std::move(a), std::move(c)});
    }
    return seed;
}

bool lemma_hypothesis_holds(std::size_t b, std::size_t t) {
    return std::log2(static_cast<double>(t)) <= static_cast<double>(b) / 20.0;
}

double tv_distance_harness(const BitVector& x, std::size_t b, std::size_t t) {
    const std::size_t n = x.size();
    if (n < 1 || n > 6) throw std::invalid_argument("harness: n must be in 1..6");
    if (b < n) throw std::invalid_argument("harness: block size below n");
    check_harness_params(b, t);

    const auto small = BinaryField::create(n);
    const SmallFieldTables tables(BinaryField::create(b));
    const FieldElement xe = embed(x, small);
    const std::uint32_t low = (std::uint32_t{1} << n) - 1;

    std::vector<std::size_t> weight(std::size_t{1} << b);
    for (std::size_t v = 0; v < weight.size(); ++v) {
        weight[v] = hamming_weight(field_mul(small->from_word(v & low), xe).coeffs());
    }

    const std::size_t states = n * (t + 1) + 1;
    const std::size_t start = hamming_weight(x);

    // (i) independent uniform blocks.
    std::vector<double> uniform(states, 0.0);
    uniform[start] = 1.0;
    const double per_value = 1.0 / static_cast<double>(weight.size());
    for (std::size_t step = 0; step < t; ++step) {
        std::vector<double> next(states, 0.0);
        for (std::size_t s = 0; s < states; ++s) {
            if (uniform[s] == 0.0) continue;
            for (std::size_t w : weight) next[s + w] += uniform[s] * per_value;
        }
        uniform = std::move(next);
    }

    // (ii) every generator seed.
    std::vector<std::uint64_t> counts(states, 0);
    for_each_seed_output(tables, t, [&](std::span<const std::uint32_t> blocks) {
        std::size_t state = start;
        for (std::uint32_t v : blocks) state += weight[v];
        ++counts[state];
    });
    const double seeds = std::ldexp(1.0, static_cast<int>(seed_length(b, t)));

    double tv = 0.0;
    for (std::size_t s = 0; s < states; ++s) tv += std::abs(uniform[s] - static_cast<double>(counts[s]) / seeds);
    return tv / 2.0;
}

double block_marginal_tv(std::size_t b, std::size_t t, std::size_t block) {
    check_harness_params(b, t);
    if (block >= t) throw std::invalid_argument("block_marginal_tv: block index out of range");
    const SmallFieldTables tables(BinaryField::create(b));
    std::vector<std::uint64_t> counts(std::size_t{1} << b, 0);
    for_each_seed_output(tables, t, [&](std::span<const std::uint32_t> blocks) { ++counts[blocks[block]]; });
    const double seeds = std::ldexp(1.0, static_cast<int>(seed_length(b, t)));
    const double uniform = 1.0 / static_cast<double>(counts.size());
    double tv = 0.0;
    for (std::uint64_t c : counts) tv += std::abs(static_cast<double>(c) / seeds - uniform);
    return tv / 2.0;
}

}  // namespace smallbias
