// entropy.cpp

#include "smallbias/entropy.hpp"

#include <sodium.h>

#include <stdexcept>

namespace smallbias {

namespace {

constexpr std::size_t kBlocksPerRefill = 64;
constexpr std::size_t kChachaBlockBytes = 64;

void ensure_sodium() {
    static const int status = sodium_init();
    if (status < 0) throw std::runtime_error("libsodium initialisation failed");
}

}  // namespace

EntropySource::EntropySource(std::vector<std::uint8_t> seed) : seed_(std::move(seed)) {
    ensure_sodium();
    crypto_generichash(key_.data(), key_.size(), seed_.data(), seed_.size(), nullptr, 0);
}

EntropySource EntropySource::from_hex(std::string_view hex) {
    if (hex.empty() || hex.size() % 2 != 0) {
        throw std::invalid_argument("seed must be a non-empty hex string with an even number of digits");
    }
    ensure_sodium();
    std::vector<std::uint8_t> bytes(hex.size() / 2);
    std::size_t len = 0;
    const char* end = nullptr;
    if (sodium_hex2bin(bytes.data(), bytes.size(), hex.data(), hex.size(), nullptr, &len, &end) != 0 ||
        len != bytes.size() || end != hex.data() + hex.size()) {
        throw std::invalid_argument("seed is not valid hex: " + std::string(hex));
    }
    return EntropySource(std::move(bytes));
}

std::string EntropySource::seed_hex() const {
    std::string out(seed_.size() * 2 + 1, '\0');
    sodium_bin2hex(out.data(), out.size(), seed_.data(), seed_.size());
    out.pop_back();
    return out;
}

void EntropySource::refill() {
    buffer_.assign(kBlocksPerRefill * kChachaBlockBytes, 0);
    const std::array<unsigned char, crypto_stream_chacha20_NONCEBYTES> nonce{};
    crypto_stream_chacha20_xor_ic(buffer_.data(), buffer_.data(), buffer_.size(), nonce.data(), block_counter_,
                                  key_.data());
    block_counter_ += kBlocksPerRefill;
    bit_pos_ = 0;
}

bool EntropySource::next_bit() {
    if (bit_pos_ >= buffer_.size() * 8) refill();
    const bool bit = (buffer_[bit_pos_ / 8] >> (bit_pos_ % 8)) & 1;
    ++bit_pos_;
    ++consumed_;
    return bit;
}

std::uint64_t EntropySource::draw_bits(unsigned k) {
    if (k > 64) throw std::invalid_argument("draw_bits: at most 64 bits per call");
    std::uint64_t v = 0;
    for (unsigned i = 0; i < k; ++i) v = (v << 1) | static_cast<std::uint64_t>(next_bit());
    return v;
}

BitVector EntropySource::draw_vector(std::size_t n) {
    BitVector v(n);
    for (std::size_t i = 1; i <= n; ++i) {
        if (next_bit()) v.set(i);
    }
    return v;
}

std::uint64_t EntropySource::draw_mod(std::uint64_t q) {
    if (q == 0) throw std::invalid_argument("draw_mod: modulus must be positive");
    if (q > (std::uint64_t{1} << 63)) throw std::invalid_argument("draw_mod: modulus above 2^63");
    if (q == 1) return 0;
    // v is uniform on [0, c) throughout.
    std::uint64_t v = 0;
    std::uint64_t c = 1;
    for (;;) {
        v = 2 * v + static_cast<std::uint64_t>(next_bit());
        c = 2 * c;
        if (c >= q) {
            if (v < q) return v;
            v -= q;
            c -= q;
        }
    }
}

}  // namespace smallbias
