// nisan.hpp
// Recursive space-bounded generator over b-bit blocks:
//
//     G_0(x) = x
//     G_j(x; h_1..h_j) = G_{j-1}(x; h_1..h_{j-1}) ∥ G_{j-1}(h_j(x); h_1..h_{j-1})
//
// with h(x) = a·x + c over F_{2^b}. A seed of b(2k+1) bits yields 2^k blocks.

#pragma once

#include "smallbias/binary_field.hpp"
#include "smallbias/bitvector.hpp"
#include "smallbias/entropy.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace smallbias {

struct AffineHash {
    FieldElement a;
    FieldElement c;

    FieldElement operator()(const FieldElement& x) const { return field_mul(a, x) + c; }
};

struct NisanSeed {
    FieldElement x0;
    std::vector<AffineHash> hashes;  // h_1..h_k
};

/// ⌈log₂ t⌉ for t ≥ 1.
std::size_t ceil_log2(std::uint64_t t);

/// b·(2⌈log₂ t⌉ + 1).
std::size_t seed_length(std::size_t b, std::size_t t);

/// G_k(x0; h_1..h_k) as 2^k field elements; seed.hashes.size() must equal k.
std::vector<FieldElement> expand(const NisanSeed& seed, std::size_t k);

/// Draws x0 then (a_1, c_1), ..., (a_k, c_k), b bits each, k = ⌈log₂ t⌉.
NisanSeed sample_seed(const FieldPtr& block_field, std::size_t t, EntropySource& src);

/// Hypothesis of the generator's fooling guarantee: t ≤ 2^{b/20}.
bool lemma_hypothesis_holds(std::size_t b, std::size_t t);

/// Exact total-variation distance between the final-state distributions of the
/// weight program for x when the t blocks (b bits, low n kept) are (i) uniform and
/// (ii) generator output over every seed. Requires n = x.size() ≤ 6, n ≤ b ≤ 8,
/// t ≤ 8 and seed_length(b, t) ≤ kMaxHarnessSeedBits.
inline constexpr std::size_t kMaxHarnessSeedBits = 24;
double tv_distance_harness(const BitVector& x, std::size_t b, std::size_t t);

/// Exact TV distance between the single-block marginal at position `block`
/// (0-based, < t) over all seeds and the uniform distribution on b-bit blocks.
double block_marginal_tv(std::size_t b, std::size_t t, std::size_t block);

}  // namespace smallbias
