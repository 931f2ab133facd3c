#include "oracles.hpp"
#include "smallbias/setfile.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace smallbias;

TEST(SetFile, LayoutOfSmallSet) {
    CandidateSet s = oracle::set_from_masks(10, {0x203, 0x000, 0x203});
    s.method = "naive";
    s.random_bits = 30;
    s.params = {{"epsilon", "0.5"}, {"seed", "00"}};
    EXPECT_EQ(serialize(s),
              "# smallbias set file v1\n"
              "# n: 10\n"
              "# method: naive\n"
              "# size: 3\n"
              "# random_bits: 30\n"
              "# epsilon: 0.5\n"
              "# seed: 00\n"
              "203\n"
              "000\n"
              "203\n");
}

TEST(SetFile, RoundTripKeepsOrderAndMultiplicity) {
    std::mt19937_64 rng(1);
    for (unsigned n : {1u, 4u, 7u, 28u, 64u}) {
        CandidateSet s;
        s.n = n;
        for (int i = 0; i < 50; ++i) {
            BitVector x(n);
            for (std::size_t j = 1; j <= n; ++j) x.set(j, rng() & 1);
            s.elements.push_back(x);
            if (i % 7 == 0) s.elements.push_back(x);
        }
        s.method = "code-uniform";
        s.random_bits = 123;
        s.params = {{"epsilon", "0.25"}, {"generator", "g (x=1, y=2)"}};
        const CandidateSet back = parse_set_file(serialize(s));
        EXPECT_EQ(back.n, s.n);
        EXPECT_EQ(back.elements, s.elements);
        EXPECT_EQ(back.method, s.method);
        EXPECT_EQ(back.random_bits, s.random_bits);
        EXPECT_EQ(back.params, s.params);
        EXPECT_EQ(serialize(back), serialize(s));
    }
}

TEST(SetFile, ParseErrors) {
    const std::string head = "# n: 5\n";
    EXPECT_THROW(parse_set_file("03\n# n: 5\n"), SetFileError);
    EXPECT_THROW(parse_set_file(head + "3\n"), SetFileError);
    EXPECT_THROW(parse_set_file(head + "003\n"), SetFileError);
    EXPECT_THROW(parse_set_file(head + "20\n"), SetFileError);
    EXPECT_THROW(parse_set_file(head + "0g\n"), SetFileError);
    EXPECT_THROW(parse_set_file(head + "03\n\n04\n"), SetFileError);
    EXPECT_THROW(parse_set_file(head + "03\n# size: 1\n"), SetFileError);
    EXPECT_THROW(parse_set_file("# n: 5\n# size: 2\n03\n"), SetFileError);
    EXPECT_THROW(parse_set_file(head), SetFileError);
    EXPECT_THROW(parse_set_file("# n: x\n03\n"), SetFileError);
    EXPECT_THROW(parse_set_file("# n: 0\n"), SetFileError);
    EXPECT_THROW(load_set_file("/nonexistent/set.txt"), SetFileError);
}

TEST(SetFile, AcceptsCommentsAndUppercaseHex) {
    const CandidateSet s = parse_set_file("# smallbias set file v1\n# n: 8\n# free-form note\nAB\nab\n");
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s.elements[0], s.elements[1]);
    EXPECT_EQ(s.elements[0].low_word(), 0xABu);
}
