// entropy.hpp
// Seeded deterministic bit stream that counts every bit it hands out.

#pragma once

#include "smallbias/bitvector.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace smallbias {

/// Stream expansion: key = BLAKE2b-256(seed bytes), stream = ChaCha20 keystream
/// (64-bit nonce 0, block counter from 0). Bytes are consumed in order, each
/// byte least-significant bit first.
inline constexpr std::string_view kGeneratorId = "chacha20-blake2b256/v1 (key=blake2b256(seed), nonce=0, lsb-first)";

class EntropySource {
public:
    explicit EntropySource(std::vector<std::uint8_t> seed);
    /// Hex seed as given on the command line; even number of digits, at least one byte.
    static EntropySource from_hex(std::string_view hex);

    /// Next k ≤ 64 bits; the first bit drawn is the most significant bit of the result.
    std::uint64_t draw_bits(unsigned k);
    /// Next n bits as a vector; coordinate i is the i-th bit drawn.
    BitVector draw_vector(std::size_t n);
    /// Uniform residue in [0, q), 1 ≤ q ≤ 2^63. Bitwise rejection sampling that
    /// recycles the rejected remainder (Lumbroso's Fast Dice Roller): for q = 2^k it
    /// consumes exactly k bits and returns them as drawn.
    std::uint64_t draw_mod(std::uint64_t q);

    std::uint64_t bits_consumed() const noexcept { return consumed_; }
    const std::vector<std::uint8_t>& seed() const noexcept { return seed_; }
    std::string seed_hex() const;

private:
    bool next_bit();
    void refill();

    std::vector<std::uint8_t> seed_;
    std::array<unsigned char, 32> key_{};
    std::vector<unsigned char> buffer_;
    std::uint64_t block_counter_ = 0;
    std::size_t bit_pos_ = 0;  // position within buffer_, in bits
    std::uint64_t consumed_ = 0;
};

}  // namespace smallbias
