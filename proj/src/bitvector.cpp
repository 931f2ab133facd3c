// bitvector.cpp

#include "smallbias/bitvector.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace smallbias {

namespace {

std::uint64_t top_mask(std::size_t n) {
    const std::size_t r = n % kWordBits;
    return r == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
}

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

std::uint64_t bits_above(std::uint64_t v, std::size_t pos) {
    return pos + 1 >= kWordBits ? 0 : v >> (pos + 1);
}

}  // namespace

BitVector::BitVector(std::size_t n) : n_(n), words_(words_for(n), 0) {}

BitVector BitVector::from_word(std::size_t n, std::uint64_t word) {
    if (n == 0 && word != 0) throw DimensionError("from_word: nonzero word for n = 0");
    BitVector v(n);
    if (n < kWordBits && (word >> n) != 0) {
        throw DimensionError("from_word: bits set above dimension " + std::to_string(n));
    }
    if (n > 0) v.words_[0] = word;
    return v;
}

BitVector BitVector::from_words(std::size_t n, std::vector<std::uint64_t> words) {
    if (words.size() != words_for(n)) throw DimensionError("from_words: wrong word count");
    if (n > 0 && (words.back() & ~top_mask(n)) != 0) {
        throw DimensionError("from_words: bits set above dimension " + std::to_string(n));
    }
    BitVector v;
    v.n_ = n;
    v.words_ = std::move(words);
    return v;
}

BitVector BitVector::ones(std::size_t n) {
    BitVector v(n);
    std::fill(v.words_.begin(), v.words_.end(), ~std::uint64_t{0});
    if (n > 0) v.words_.back() &= top_mask(n);
    return v;
}

BitVector BitVector::unit(std::size_t n, std::size_t i) {
    BitVector v(n);
    v.set(i);
    return v;
}

BitVector BitVector::from_hex(std::size_t n, std::string_view hex) {
    BitVector v(n);
    std::size_t bit = 0;
    for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
        const int d = hex_value(*it);
        if (d < 0) throw std::invalid_argument("from_hex: invalid hex digit '" + std::string(1, *it) + "'");
        for (int k = 0; k < 4; ++k) {
            if (((d >> k) & 1) == 0) continue;
            if (bit + k >= n) throw DimensionError("from_hex: value exceeds dimension " + std::to_string(n));
            v.words_[(bit + k) / kWordBits] |= std::uint64_t{1} << ((bit + k) % kWordBits);
        }
    }
    return v;
}

bool BitVector::get(std::size_t i) const {
    if (i < 1 || i > n_) throw DimensionError("coordinate " + std::to_string(i) + " out of range");
    return (words_[(i - 1) / kWordBits] >> ((i - 1) % kWordBits)) & 1;
}

void BitVector::set(std::size_t i, bool value) {
    if (i < 1 || i > n_) throw DimensionError("coordinate " + std::to_string(i) + " out of range");
    const std::uint64_t bit = std::uint64_t{1} << ((i - 1) % kWordBits);
    auto& w = words_[(i - 1) / kWordBits];
    w = value ? (w | bit) : (w & ~bit);
}

bool BitVector::is_zero() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

BitVector BitVector::slice(std::size_t first, std::size_t count) const {
    if (first < 1 || first - 1 + count > n_) throw DimensionError("slice out of range");
    BitVector out(count);
    const std::size_t offset = first - 1;
    const std::size_t shift = offset % kWordBits;
    const std::size_t base = offset / kWordBits;
    for (std::size_t w = 0; w < out.words_.size(); ++w) {
        std::uint64_t lo = base + w < words_.size() ? words_[base + w] >> shift : 0;
        std::uint64_t hi = (shift != 0 && base + w + 1 < words_.size()) ? words_[base + w + 1] << (kWordBits - shift) : 0;
        out.words_[w] = lo | hi;
    }
    if (count > 0) out.words_.back() &= top_mask(count);
    return out;
}

std::string BitVector::to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    const std::size_t len = (n_ + 3) / 4;
    std::string s(len, '0');
    for (std::size_t d = 0; d < len; ++d) {
        const std::size_t bit = 4 * d;
        const unsigned nibble = (words_[bit / kWordBits] >> (bit % kWordBits)) & 0xF;
        s[len - 1 - d] = digits[nibble];
    }
    return s;
}

void BitVector::require_same_size(const BitVector& other) const {
    if (n_ != other.n_) {
        throw DimensionError("dimension mismatch: " + std::to_string(n_) + " vs " + std::to_string(other.n_));
    }
}

BitVector& BitVector::operator^=(const BitVector& other) {
    require_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
    require_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
}

std::size_t hamming_weight(const BitVector& x) noexcept {
    std::size_t total = 0;
    for (std::uint64_t w : x.words()) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

BitVector concat(std::span<const BitVector> parts) {
    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    std::vector<std::uint64_t> words(words_for(total), 0);
    std::size_t offset = 0;
    for (const auto& p : parts) {
        const auto src = p.words();
        const std::size_t shift = offset % kWordBits;
        const std::size_t base = offset / kWordBits;
        for (std::size_t w = 0; w < src.size(); ++w) {
            words[base + w] |= src[w] << shift;
            if (shift != 0 && base + w + 1 < words.size()) words[base + w + 1] |= src[w] >> (kWordBits - shift);
        }
        offset += p.size();
    }
    return BitVector::from_words(total, std::move(words));
}

IndexSet::IndexSet(std::size_t n, std::initializer_list<std::size_t> members) : mask_(n) {
    for (std::size_t i : members) mask_.set(i);
}

std::vector<std::size_t> IndexSet::members() const {
    std::vector<std::size_t> out;
    const auto words = mask_.words();
    for (std::size_t w = 0; w < words.size(); ++w) {
        std::uint64_t bits = words[w];
        while (bits != 0) {
            out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)) + 1);
            bits &= bits - 1;
        }
    }
    return out;
}

bool parity(const BitVector& x, const IndexSet& t) {
    if (x.size() != t.dimension()) {
        throw DimensionError("parity: |T| dimension " + std::to_string(t.dimension()) + " vs x dimension " +
                             std::to_string(x.size()));
    }
    const auto xs = x.words();
    const auto ts = t.indicator().words();
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < xs.size(); ++w) acc ^= xs[w] & ts[w];
    return std::popcount(acc) & 1;
}

bool lex_less(std::uint64_t a, std::uint64_t b) noexcept {
    const std::uint64_t diff = a ^ b;
    if (diff == 0) return false;
    const auto d = static_cast<std::size_t>(std::countr_zero(diff));
    // Below d the lists agree. The list holding d wins unless the other one ends there.
    if ((a >> d) & 1) return bits_above(b, d) != 0;
    return bits_above(a, d) == 0;
}

std::string to_string(const IndexSet& t) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i : t.members()) {
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

}  // namespace smallbias
