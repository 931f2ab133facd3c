// binary_field.hpp
// Polynomials over F_2 and the extension fields F_{2^m} = F_2[X]/(f).
//
// Bit k of a coefficient word is the coefficient of X^k. Field elements of
// F_{2^m} are identified with F_2^m through embed/project, coordinate i of a
// BitVector carrying the coefficient of X^{i-1}.

#pragma once

#include "smallbias/bitvector.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace smallbias {

/// Largest supported extension degree.
inline constexpr std::size_t kMaxFieldDegree = std::size_t{1} << 16;

class FieldMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A polynomial over F_2 with trailing zero words trimmed.
class Gf2Poly {
public:
    Gf2Poly() = default;
    explicit Gf2Poly(std::vector<std::uint64_t> words);
    static Gf2Poly from_word(std::uint64_t w) { return Gf2Poly(std::vector<std::uint64_t>{w}); }
    static Gf2Poly monomial(std::size_t k);

    /// -1 for the zero polynomial.
    long degree() const noexcept;
    bool is_zero() const noexcept { return words_.empty(); }
    bool coeff(std::size_t k) const noexcept;

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

    Gf2Poly& operator^=(const Gf2Poly& other);
    friend Gf2Poly operator^(Gf2Poly a, const Gf2Poly& b) { return a ^= b; }
    friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

private:
    void trim();
    std::vector<std::uint64_t> words_;
};

Gf2Poly poly_mul(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly poly_square(const Gf2Poly& a);
Gf2Poly poly_mod(const Gf2Poly& a, const Gf2Poly& f);
Gf2Poly poly_gcd(Gf2Poly a, Gf2Poly b);

/// Rabin's test: X^{2^m} ≡ X (mod f) and gcd(X^{2^{m/p}} - X, f) = 1 for each prime p | m.
bool is_irreducible(const Gf2Poly& f);

/// Smallest irreducible polynomial of degree m when polynomials are ordered by their
/// coefficient words read as integers. Same m, same answer.
Gf2Poly choose_irreducible(std::size_t m);

class FieldElement;

/// The field F_2[X]/(f) with f irreducible of degree m.
class BinaryField : public std::enable_shared_from_this<BinaryField> {
public:
    /// Builds F_{2^m} over choose_irreducible(m).
    static std::shared_ptr<const BinaryField> create(std::size_t m);
    /// Builds the field over a caller-chosen modulus; irreducibility is checked.
    static std::shared_ptr<const BinaryField> with_modulus(Gf2Poly modulus);

    std::size_t degree() const noexcept { return m_; }
    const Gf2Poly& modulus() const noexcept { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;
    /// Element whose X^k coefficient is bit k of word (low m bits only).
    FieldElement from_word(std::uint64_t word) const;
    /// Coordinate i of coeffs becomes the coefficient of X^{i-1}; coeffs.size() == m.
    FieldElement from_bits(const BitVector& coeffs) const;

    bool same_as(const BinaryField& other) const noexcept {
        return this == &other || (m_ == other.m_ && modulus_ == other.modulus_);
    }

private:
    struct Token {};

public:
    BinaryField(Token, std::size_t m, Gf2Poly modulus);

private:
    friend class FieldElement;
    friend FieldElement field_mul(const FieldElement& a, const FieldElement& b);

    std::size_t m_;
    Gf2Poly modulus_;
    std::vector<std::uint64_t> tail_;  // modulus minus its leading term
};

using FieldPtr = std::shared_ptr<const BinaryField>;

class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr field, BitVector coeffs);

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t degree() const noexcept { return coeffs_.size(); }
    const BitVector& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.is_zero(); }

    FieldElement& operator+=(const FieldElement& other);
    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) { return field_mul(a, b); }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.coeffs_ == b.coeffs_ && (a.field_ == b.field_ || (a.field_ && b.field_ && a.field_->same_as(*b.field_)));
    }

    friend FieldElement field_mul(const FieldElement& a, const FieldElement& b);

    FieldElement pow(std::uint64_t e) const;
    /// Multiplicative inverse; throws std::domain_error on zero.
    FieldElement inverse() const;

private:
    void require_same_field(const FieldElement& other) const;

    FieldPtr field_;
    BitVector coeffs_;
};

/// Additive embedding F_2^n -> F_{2^m}, m ≥ n.
FieldElement embed(const BitVector& x, const FieldPtr& field);
/// Reads an element of F_{2^n} back as n bits; n must equal the field degree.
BitVector project(const FieldElement& a, std::size_t n);

}  // namespace smallbias
