#include "oracles.hpp"
#include "smallbias/binary_field.hpp"
#include "smallbias/bitvector.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace smallbias;

TEST(BitVector, ParityOfZeroAndOnes) {
    for (std::size_t n : {1u, 5u, 64u, 130u}) {
        const BitVector zero(n);
        const BitVector ones = BitVector::ones(n);
        std::mt19937_64 rng(n);
        for (int trial = 0; trial < 20; ++trial) {
            BitVector mask(n);
            for (std::size_t i = 1; i <= n; ++i) mask.set(i, rng() & 1);
            if (mask.is_zero()) mask.set(1);
            const IndexSet t(mask);
            EXPECT_FALSE(parity(zero, t));
            EXPECT_EQ(parity(ones, t), t.size() % 2 == 1);
        }
    }
}

TEST(BitVector, ParityHandExample) {
    BitVector x(3);
    x.set(1);
    x.set(3);
    EXPECT_FALSE(parity(x, IndexSet(3, {1, 3})));
    EXPECT_TRUE(parity(x, IndexSet(3, {1})));
}

TEST(BitVector, ParityDimensionMismatch) {
    EXPECT_THROW(parity(BitVector(4), IndexSet(5, {1})), DimensionError);
}

TEST(BitVector, ParityIsLinear) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + rng() % 150;
        BitVector x(n), y(n), mask(n);
        for (std::size_t i = 1; i <= n; ++i) {
            x.set(i, rng() & 1);
            y.set(i, rng() & 1);
            mask.set(i, rng() & 1);
        }
        const IndexSet t(mask);
        EXPECT_EQ(parity(x ^ y, t), parity(x, t) != parity(y, t));
    }
}

TEST(BitVector, HammingWeight) {
    EXPECT_EQ(hamming_weight(BitVector(40)), 0u);
    EXPECT_EQ(hamming_weight(BitVector::ones(40)), 40u);
    EXPECT_EQ(hamming_weight(BitVector::ones(200)), 200u);
    // 10110010 read with coordinate 1 first.
    BitVector x(8);
    for (std::size_t i : {1u, 3u, 4u, 7u}) x.set(i);
    EXPECT_EQ(hamming_weight(x), 4u);
}

TEST(BitVector, HexRoundTripAndBitConvention) {
    const BitVector x = BitVector::from_word(10, 0b1000000011);
    EXPECT_EQ(x.to_hex(), "203");
    EXPECT_TRUE(x.get(1));
    EXPECT_TRUE(x.get(2));
    EXPECT_TRUE(x.get(10));
    EXPECT_EQ(BitVector::from_hex(10, "203"), x);
    EXPECT_THROW(BitVector::from_hex(10, "403"), DimensionError);
    EXPECT_THROW(BitVector::from_hex(10, "2g3"), std::invalid_argument);
    EXPECT_THROW(BitVector::from_word(3, 8), DimensionError);
}

TEST(BitVector, SliceAndConcatAcrossWords) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t a = 1 + rng() % 100, b = 1 + rng() % 100;
        BitVector x(a), y(b);
        for (std::size_t i = 1; i <= a; ++i) x.set(i, rng() & 1);
        for (std::size_t i = 1; i <= b; ++i) y.set(i, rng() & 1);
        const BitVector parts[] = {x, y};
        const BitVector z = concat(parts);
        ASSERT_EQ(z.size(), a + b);
        EXPECT_EQ(z.slice(1, a), x);
        EXPECT_EQ(z.slice(a + 1, b), y);
        EXPECT_EQ(hamming_weight(z), hamming_weight(x) + hamming_weight(y));
    }
}

TEST(IndexSet, LexOrderOfMemberLists) {
    // {1,2} < {1,3} < {2} < {2,3} < {3}
    const std::uint64_t order[] = {0b011, 0b101, 0b010, 0b110, 0b100};
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 5; ++j) {
            EXPECT_EQ(lex_less(order[i], order[j]), i < j) << i << "," << j;
            EXPECT_EQ(lex_less(order[i], order[j]), oracle::members_less(order[i], order[j]));
        }
    }
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::uint64_t a = rng(), b = rng() >> (rng() % 64);
        EXPECT_EQ(lex_less(a, b), oracle::members_less(a, b));
    }
}

// ---------------------------------------------------------------------------

TEST(Irreducible, SmallDegrees) {
    EXPECT_EQ(choose_irreducible(1), Gf2Poly::from_word(0b10));
    EXPECT_EQ(choose_irreducible(2), Gf2Poly::from_word(0b111));
    EXPECT_EQ(choose_irreducible(3), Gf2Poly::from_word(0b1011));
    EXPECT_EQ(choose_irreducible(8), Gf2Poly::from_word(0x11B));
}

TEST(Irreducible, SmallestLexMatchesDivisionOracle) {
    for (std::size_t m = 1; m <= 16; ++m) {
        std::uint64_t expected = 0;
        for (std::uint64_t f = std::uint64_t{1} << m; f < (std::uint64_t{2} << m); ++f) {
            if (oracle::irreducible_by_division(f)) {
                expected = f;
                break;
            }
        }
        EXPECT_EQ(choose_irreducible(m), Gf2Poly::from_word(expected)) << "m=" << m;
    }
}

TEST(Irreducible, RabinAgreesWithDivisionExhaustively) {
    for (std::uint64_t f = 2; f < (1u << 11); ++f) {
        EXPECT_EQ(is_irreducible(Gf2Poly::from_word(f)), oracle::irreducible_by_division(f)) << f;
    }
}

TEST(Irreducible, DeterministicAndLargeDegrees) {
    for (std::size_t m : {64u, 65u, 127u, 480u}) {
        const Gf2Poly f = choose_irreducible(m);
        EXPECT_EQ(f.degree(), static_cast<long>(m));
        EXPECT_TRUE(is_irreducible(f));
        EXPECT_EQ(choose_irreducible(m), f);
    }
    EXPECT_THROW(choose_irreducible(0), std::invalid_argument);
    EXPECT_THROW(choose_irreducible(kMaxFieldDegree + 1), std::invalid_argument);
}

TEST(FieldMul, HandExamplesModX3X1) {
    const auto f = BinaryField::with_modulus(Gf2Poly::from_word(0b1011));
    const FieldElement x = f->from_word(0b010);
    EXPECT_EQ(field_mul(x, f->from_word(0b100)), f->from_word(0b011));
    EXPECT_EQ(field_mul(x, f->from_word(0b110)), f->from_word(0b111));
    for (std::uint64_t a = 0; a < 8; ++a) EXPECT_EQ(field_mul(f->from_word(a), f->one()), f->from_word(a));
}

TEST(FieldMul, MatchesSchoolbookExhaustively) {
    for (std::size_t m = 1; m <= 8; ++m) {
        const auto field = BinaryField::create(m);
        const std::uint64_t modulus = field->modulus().words()[0];
        for (std::uint64_t a = 0; a < (1u << m); ++a) {
            const FieldElement fa = field->from_word(a);
            for (std::uint64_t b = 0; b < (1u << m); ++b) {
                ASSERT_EQ(field_mul(fa, field->from_word(b)).coeffs().low_word(), oracle::schoolbook_mulmod(a, b, modulus))
                    << "m=" << m << " a=" << a << " b=" << b;
            }
        }
    }
}

TEST(FieldMul, MultiplicativeGroupOrder) {
    for (std::size_t m = 1; m <= 8; ++m) {
        const auto field = BinaryField::create(m);
        const std::uint64_t order = (std::uint64_t{1} << m) - 1;
        for (std::uint64_t a = 1; a <= order; ++a) {
            const FieldElement fa = field->from_word(a);
            ASSERT_EQ(fa.pow(order), field->one()) << "m=" << m << " a=" << a;
            ASSERT_EQ(field_mul(fa, fa.inverse()), field->one());
        }
    }
}

// The multiword path (m > 32) checked against the field axioms on samples.
TEST(FieldMul, RingAxiomsOnLargeFields) {
    std::mt19937_64 rng(5);
    for (std::size_t m : {33u, 64u, 100u, 480u}) {
        const auto field = BinaryField::create(m);
        auto random_element = [&] {
            BitVector v(m);
            for (std::size_t i = 1; i <= m; ++i) v.set(i, rng() & 1);
            return field->from_bits(v);
        };
        for (int trial = 0; trial < 20; ++trial) {
            const FieldElement a = random_element(), b = random_element(), c = random_element();
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), field->one());
        }
    }
}

TEST(FieldMul, LargeFieldAgreesWithPolynomialProduct) {
    std::mt19937_64 rng(9);
    const auto field = BinaryField::create(200);
    for (int trial = 0; trial < 20; ++trial) {
        BitVector va(200), vb(200);
        for (std::size_t i = 1; i <= 200; ++i) {
            va.set(i, rng() & 1);
            vb.set(i, rng() & 1);
        }
        const Gf2Poly pa({va.words().begin(), va.words().end()});
        const Gf2Poly pb({vb.words().begin(), vb.words().end()});
        const Gf2Poly expected = poly_mod(poly_mul(pa, pb), field->modulus());
        const FieldElement got = field_mul(field->from_bits(va), field->from_bits(vb));
        EXPECT_EQ(Gf2Poly({got.coeffs().words().begin(), got.coeffs().words().end()}), expected);
    }
}

TEST(FieldMul, MismatchedFieldsRejected) {
    const auto f3 = BinaryField::create(3);
    const auto f4 = BinaryField::create(4);
    EXPECT_THROW(field_mul(f3->one(), f4->one()), FieldMismatch);
    EXPECT_THROW(f3->one() + f4->one(), FieldMismatch);
    // Two descriptors for the same field are interchangeable.
    const auto f3b = BinaryField::create(3);
    EXPECT_EQ(field_mul(f3->from_word(3), f3b->from_word(5)), f3->from_word(3) * f3->from_word(5));
}

TEST(FieldMul, ReducibleModulusRejected) {
    EXPECT_THROW(BinaryField::with_modulus(Gf2Poly::from_word(0b101)), std::invalid_argument);
}

TEST(Embed, AdditiveAndInvertible) {
    std::mt19937_64 rng(13);
    const auto field = BinaryField::create(20);
    const auto same = BinaryField::create(12);
    for (int trial = 0; trial < 200; ++trial) {
        const BitVector x = BitVector::from_word(12, rng() & 0xFFF);
        const BitVector y = BitVector::from_word(12, rng() & 0xFFF);
        EXPECT_EQ(embed(x, field) + embed(y, field), embed(x ^ y, field));
        EXPECT_EQ(project(embed(x, same), 12), x);
        EXPECT_EQ(hamming_weight(project(embed(x, same), 12)), hamming_weight(x));
    }
    EXPECT_TRUE(embed(BitVector(12), field).is_zero());
    EXPECT_THROW(embed(BitVector(21), field), DimensionError);
    EXPECT_THROW(project(field->one(), 12), DimensionError);
}
