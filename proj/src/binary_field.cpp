// binary_field.cpp

#include "smallbias/binary_field.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace smallbias {

namespace {

// Interleaves zeros into the low 32 bits of x: bit k moves to bit 2k.
std::uint64_t spread32(std::uint64_t x) {
    x &= 0xFFFFFFFFull;
    x = (x | (x << 16)) & 0x0000FFFF0000FFFFull;
    x = (x | (x << 8)) & 0x00FF00FF00FF00FFull;
    x = (x | (x << 4)) & 0x0F0F0F0F0F0F0F0Full;
    x = (x | (x << 2)) & 0x3333333333333333ull;
    x = (x | (x << 1)) & 0x5555555555555555ull;
    return x;
}

// words ^= src << shift (bit shift), growing words as needed.
void xor_shifted(std::vector<std::uint64_t>& words, const std::vector<std::uint64_t>& src, std::size_t shift) {
    const std::size_t base = shift / kWordBits;
    const std::size_t bits = shift % kWordBits;
    const std::size_t need = base + src.size() + (bits != 0 ? 1 : 0);
    if (words.size() < need) words.resize(need, 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
        words[base + i] ^= src[i] << bits;
        if (bits != 0) words[base + i + 1] ^= src[i] >> (kWordBits - bits);
    }
}

bool test_bit(const std::vector<std::uint64_t>& words, std::size_t k) {
    return k / kWordBits < words.size() && ((words[k / kWordBits] >> (k % kWordBits)) & 1);
}

// Reduces words modulo X^m + tail, where deg(tail) < m.
void reduce_with_tail(std::vector<std::uint64_t>& words, std::size_t m, const std::vector<std::uint64_t>& tail) {
    for (std::size_t w = words.size(); w-- > 0;) {
        while (words[w] != 0) {
            const std::size_t top = w * kWordBits + (kWordBits - 1 - static_cast<std::size_t>(std::countl_zero(words[w])));
            if (top < m) break;
            words[w] &= ~(std::uint64_t{1} << (top % kWordBits));
            xor_shifted(words, tail, top - m);
        }
    }
    words.resize(words_for(m), 0);
}

std::uint64_t clmul_low(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    while (a != 0) {
        const int k = std::countr_zero(a);
        r ^= b << k;
        a &= a - 1;
    }
    return r;
}

std::vector<std::size_t> prime_divisors(std::size_t m) {
    std::vector<std::size_t> out;
    for (std::size_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            out.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

std::vector<std::uint64_t> tail_of(const Gf2Poly& f) {
    std::vector<std::uint64_t> tail = f.words();
    const auto m = static_cast<std::size_t>(f.degree());
    tail[m / kWordBits] &= ~(std::uint64_t{1} << (m % kWordBits));
    while (!tail.empty() && tail.back() == 0) tail.pop_back();
    return tail;
}

// Small irreducible divisors used to discard most candidates before Rabin's test.
const std::vector<Gf2Poly>& small_irreducibles() {
    static const std::vector<Gf2Poly> polys = [] {
        std::vector<Gf2Poly> out;
        for (std::uint64_t w = 4; w < (std::uint64_t{1} << 9); ++w) {
            Gf2Poly g = Gf2Poly::from_word(w);
            if (is_irreducible(g)) out.push_back(std::move(g));
        }
        return out;
    }();
    return polys;
}

}  // namespace

// ---------------------------------------------------------------------------
// Gf2Poly

Gf2Poly::Gf2Poly(std::vector<std::uint64_t> words) : words_(std::move(words)) { trim(); }

Gf2Poly Gf2Poly::monomial(std::size_t k) {
    std::vector<std::uint64_t> w(k / kWordBits + 1, 0);
    w.back() = std::uint64_t{1} << (k % kWordBits);
    return Gf2Poly(std::move(w));
}

void Gf2Poly::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

long Gf2Poly::degree() const noexcept {
    if (words_.empty()) return -1;
    return static_cast<long>((words_.size() - 1) * kWordBits + (kWordBits - 1) - std::countl_zero(words_.back()));
}

bool Gf2Poly::coeff(std::size_t k) const noexcept { return test_bit(words_, k); }

Gf2Poly& Gf2Poly::operator^=(const Gf2Poly& other) {
    if (words_.size() < other.words_.size()) words_.resize(other.words_.size(), 0);
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
    trim();
    return *this;
}

Gf2Poly poly_mul(const Gf2Poly& a, const Gf2Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::uint64_t> out(a.words().size() + b.words().size(), 0);
    for (std::size_t w = 0; w < a.words().size(); ++w) {
        std::uint64_t bits = a.words()[w];
        while (bits != 0) {
            const auto k = static_cast<std::size_t>(std::countr_zero(bits));
            xor_shifted(out, b.words(), w * kWordBits + k);
            bits &= bits - 1;
        }
    }
    return Gf2Poly(std::move(out));
}

Gf2Poly poly_square(const Gf2Poly& a) {
    std::vector<std::uint64_t> out(2 * a.words().size(), 0);
    for (std::size_t w = 0; w < a.words().size(); ++w) {
        out[2 * w] = spread32(a.words()[w]);
        out[2 * w + 1] = spread32(a.words()[w] >> 32);
    }
    return Gf2Poly(std::move(out));
}

Gf2Poly poly_mod(const Gf2Poly& a, const Gf2Poly& f) {
    if (f.is_zero()) throw std::domain_error("poly_mod: zero modulus");
    const auto df = static_cast<std::size_t>(f.degree());
    if (df == 0) return {};
    std::vector<std::uint64_t> words = a.words();
    reduce_with_tail(words, df, tail_of(f));
    return Gf2Poly(std::move(words));
}

Gf2Poly poly_gcd(Gf2Poly a, Gf2Poly b) {
    while (!b.is_zero()) {
        Gf2Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_irreducible(const Gf2Poly& f) {
    const long deg = f.degree();
    if (deg < 1) return false;
    if (deg == 1) return true;
    const auto m = static_cast<std::size_t>(deg);
    if (!f.coeff(0)) return false;

    const auto tail = tail_of(f);
    const auto divisors = prime_divisors(m);
    std::vector<std::size_t> wanted;
    for (std::size_t p : divisors) wanted.push_back(m / p);

    const Gf2Poly x = Gf2Poly::monomial(1);
    std::vector<Gf2Poly> saved(wanted.size());
    std::vector<std::uint64_t> power = x.words();  // X^{2^i} mod f
    power.resize(words_for(m), 0);
    for (std::size_t i = 1; i <= m; ++i) {
        std::vector<std::uint64_t> sq = poly_square(Gf2Poly(power)).words();
        if (sq.empty()) sq.push_back(0);
        reduce_with_tail(sq, m, tail);
        power = std::move(sq);
        for (std::size_t j = 0; j < wanted.size(); ++j) {
            if (wanted[j] == i) saved[j] = Gf2Poly(power);
        }
    }
    if (Gf2Poly(power) != x) return false;
    for (const auto& s : saved) {
        if (poly_gcd(s ^ x, f).degree() != 0) return false;
    }
    return true;
}

Gf2Poly choose_irreducible(std::size_t m) {
    if (m == 0) throw std::invalid_argument("choose_irreducible: degree must be positive");
    if (m > kMaxFieldDegree) {
        throw std::invalid_argument("choose_irreducible: degree " + std::to_string(m) + " exceeds the supported maximum " +
                                    std::to_string(kMaxFieldDegree));
    }
    if (m == 1) return Gf2Poly::from_word(0b10);

    const Gf2Poly lead = Gf2Poly::monomial(m);
    const auto& small = small_irreducibles();
    for (std::uint64_t r = 1;; r += 2) {
        if (m < kWordBits && r >= (std::uint64_t{1} << m)) break;
        // An even number of terms means X+1 divides.
        if ((std::popcount(r) + 1) % 2 == 0) continue;
        Gf2Poly f = lead ^ Gf2Poly::from_word(r);
        bool has_small_factor = false;
        for (const auto& g : small) {
            if (2 * static_cast<std::size_t>(g.degree()) > m) break;
            if (poly_mod(f, g).is_zero()) {
                has_small_factor = true;
                break;
            }
        }
        if (!has_small_factor && is_irreducible(f)) return f;
    }
    throw std::logic_error("choose_irreducible: no irreducible polynomial found");
}

// ---------------------------------------------------------------------------
// BinaryField

BinaryField::BinaryField(Token, std::size_t m, Gf2Poly modulus)
    : m_(m), modulus_(std::move(modulus)), tail_(tail_of(modulus_)) {}

std::shared_ptr<const BinaryField> BinaryField::create(std::size_t m) {
    return std::make_shared<const BinaryField>(Token{}, m, choose_irreducible(m));
}

std::shared_ptr<const BinaryField> BinaryField::with_modulus(Gf2Poly modulus) {
    if (modulus.degree() < 1) throw std::invalid_argument("with_modulus: modulus must have positive degree");
    const auto m = static_cast<std::size_t>(modulus.degree());
    if (m > kMaxFieldDegree) throw std::invalid_argument("with_modulus: degree exceeds the supported maximum");
    if (!is_irreducible(modulus)) throw std::invalid_argument("with_modulus: modulus is reducible");
    return std::make_shared<const BinaryField>(Token{}, m, std::move(modulus));
}

FieldElement BinaryField::zero() const { return FieldElement(shared_from_this(), BitVector(m_)); }

FieldElement BinaryField::one() const { return from_word(1); }

FieldElement BinaryField::from_word(std::uint64_t word) const {
    if (m_ < kWordBits) word &= (std::uint64_t{1} << m_) - 1;
    return FieldElement(shared_from_this(), BitVector::from_word(m_, word));
}

FieldElement BinaryField::from_bits(const BitVector& coeffs) const {
    if (coeffs.size() != m_) throw DimensionError("from_bits: expected " + std::to_string(m_) + " coefficients");
    return FieldElement(shared_from_this(), coeffs);
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(FieldPtr field, BitVector coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (!field_) throw std::invalid_argument("FieldElement: null field");
    if (coeffs_.size() != field_->degree()) throw DimensionError("FieldElement: coefficient count differs from degree");
}

void FieldElement::require_same_field(const FieldElement& other) const {
    if (!field_ || !other.field_ || !field_->same_as(*other.field_)) {
        throw FieldMismatch("field elements belong to different fields");
    }
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
    require_same_field(other);
    coeffs_ ^= other.coeffs_;
    return *this;
}

FieldElement field_mul(const FieldElement& a, const FieldElement& b) {
    a.require_same_field(b);
    const BinaryField& f = *a.field_;
    const std::size_t m = f.m_;
    if (m <= 32) {
        std::uint64_t p = clmul_low(a.coeffs_.low_word(), b.coeffs_.low_word());
        const std::uint64_t t = f.tail_.empty() ? 0 : f.tail_[0];
        for (std::size_t k = 2 * m; k-- > m;) {
            if ((p >> k) & 1) p ^= (std::uint64_t{1} << k) ^ (t << (k - m));
        }
        return FieldElement(a.field_, BitVector::from_word(m, p));
    }
    const auto aw = a.coeffs_.words();
    const auto bw = b.coeffs_.words();
    std::vector<std::uint64_t> prod = poly_mul(Gf2Poly({aw.begin(), aw.end()}), Gf2Poly({bw.begin(), bw.end()})).words();
    if (prod.empty()) prod.push_back(0);
    reduce_with_tail(prod, m, f.tail_);
    return FieldElement(a.field_, BitVector::from_words(m, std::move(prod)));
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    FieldElement result = field_->one();
    FieldElement base = *this;
    while (e != 0) {
        if (e & 1) result = field_mul(result, base);
        e >>= 1;
        if (e != 0) base = field_mul(base, base);
    }
    return result;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    // a^{-1} = a^{2^m - 2} = Π_{i=1}^{m-1} a^{2^i}
    FieldElement square = field_mul(*this, *this);
    FieldElement result = square;
    for (std::size_t i = 2; i < field_->degree(); ++i) {
        square = field_mul(square, square);
        result = field_mul(result, square);
    }
    return result;
}

FieldElement embed(const BitVector& x, const FieldPtr& field) {
    if (!field) throw std::invalid_argument("embed: null field");
    const std::size_t m = field->degree();
    if (m < x.size()) {
        throw DimensionError("embed: field degree " + std::to_string(m) + " below dimension " + std::to_string(x.size()));
    }
    if (m == x.size()) return field->from_bits(x);
    std::vector<std::uint64_t> words(x.words().begin(), x.words().end());
    words.resize(words_for(m), 0);
    return field->from_bits(BitVector::from_words(m, std::move(words)));
}

BitVector project(const FieldElement& a, std::size_t n) {
    if (n != a.degree()) {
        throw DimensionError("project: dimension " + std::to_string(n) + " differs from field degree " +
                             std::to_string(a.degree()));
    }
    return a.coeffs();
}

}  // namespace smallbias
