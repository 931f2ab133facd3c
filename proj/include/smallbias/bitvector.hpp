// bitvector.hpp
// Elements of F_2^n and index sets T ⊆ [n].
//
// Coordinate convention used everywhere in the library and in the set file
// format: coordinate i (1-based) lives in bit i-1 of the packed words, so
// coordinate 1 is the least-significant bit.

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace smallbias {

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) {
    return (bits + kWordBits - 1) / kWordBits;
}

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n);

    /// Builds an n-bit vector from its low word; bits at or above n must be clear.
    static BitVector from_word(std::size_t n, std::uint64_t word);
    static BitVector from_words(std::size_t n, std::vector<std::uint64_t> words);
    static BitVector ones(std::size_t n);
    /// Standard basis vector e_i, i in 1..n.
    static BitVector unit(std::size_t n, std::size_t i);
    /// Lowercase or uppercase hex, most significant digit first; coordinate 1 = LSB.
    static BitVector from_hex(std::size_t n, std::string_view hex);

    std::size_t size() const noexcept { return n_; }
    bool empty() const noexcept { return n_ == 0; }

    bool get(std::size_t i) const;
    void set(std::size_t i, bool value = true);

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::uint64_t low_word() const noexcept { return words_.empty() ? 0 : words_[0]; }

    bool is_zero() const noexcept;

    /// Coordinates first..first+count-1 as a new vector of dimension count.
    BitVector slice(std::size_t first, std::size_t count) const;

    /// ⌈n/4⌉ hex digits, most significant first.
    std::string to_hex() const;

    BitVector& operator^=(const BitVector& other);
    BitVector& operator&=(const BitVector& other);

    friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }
    friend BitVector operator&(BitVector lhs, const BitVector& rhs) { return lhs &= rhs; }

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    void require_same_size(const BitVector& other) const;

    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

std::size_t hamming_weight(const BitVector& x) noexcept;

/// Concatenation in order: parts[0] occupies the lowest coordinates.
BitVector concat(std::span<const BitVector> parts);

/// A subset T of {1..n}, stored as its indicator vector.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::size_t n) : mask_(n) {}
    IndexSet(std::size_t n, std::initializer_list<std::size_t> members);
    explicit IndexSet(BitVector indicator) : mask_(std::move(indicator)) {}

    static IndexSet from_mask(std::size_t n, std::uint64_t mask) {
        return IndexSet(BitVector::from_word(n, mask));
    }

    std::size_t dimension() const noexcept { return mask_.size(); }
    std::size_t size() const noexcept { return hamming_weight(mask_); }
    bool empty() const noexcept { return mask_.is_zero(); }
    bool contains(std::size_t i) const { return mask_.get(i); }

    /// Members in ascending order.
    std::vector<std::size_t> members() const;

    const BitVector& indicator() const noexcept { return mask_; }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    BitVector mask_;
};

/// f_T(x) = ⊕_{i∈T} x_i.
bool parity(const BitVector& x, const IndexSet& t);

/// Lexicographic order of the ascending member lists of two masks over the same n ≤ 64.
bool lex_less(std::uint64_t a, std::uint64_t b) noexcept;

std::string to_string(const IndexSet& t);

}  // namespace smallbias
