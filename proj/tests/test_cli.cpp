#include "run_cli.hpp"
#include "smallbias/setfile.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace smallbias;
using smallbias::testing::read_file;
using smallbias::testing::run_cli;

namespace {

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("smallbias_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    std::filesystem::path dir_;
};

}  // namespace

TEST_F(Cli, AghpUsesNoRandomness) {
    const auto r = run_cli("construct --method aghp --n 4 --eps 0.7 -o " + path("a.txt"));
    ASSERT_EQ(r.status, 0);
    const CandidateSet s = load_set_file(path("a.txt"));
    EXPECT_EQ(s.random_bits, 0u);
    EXPECT_EQ(s.size(), 37u);
    EXPECT_EQ(run_cli("verify " + path("a.txt") + " --eps 0.7").status, 0);
}

TEST_F(Cli, NaiveAccountsNBitsPerElement) {
    ASSERT_EQ(run_cli("construct --method naive --n 8 --eps 0.5 --seed 00 -o " + path("n.txt")).status, 0);
    const CandidateSet s = load_set_file(path("n.txt"));
    EXPECT_EQ(s.size(), 128u);
    EXPECT_EQ(s.random_bits, 8u * s.size());
    ASSERT_EQ(run_cli("construct --method naive --n 8 --eps 0.5 --size 10 -o " + path("m.txt")).status, 0);
    EXPECT_EQ(load_set_file(path("m.txt")).random_bits, 80u);
}

TEST_F(Cli, SameSeedSameBytes) {
    for (const std::string method : {"code-uniform", "code-nisan --b 12", "legendre-shift --delta 0.5", "naive"}) {
        const std::string args = "construct --method " + method + " --n 8 --eps 0.5 --seed beef -o ";
        ASSERT_EQ(run_cli(args + path("1.txt")).status, 0) << method;
        ASSERT_EQ(run_cli(args + path("2.txt")).status, 0) << method;
        EXPECT_EQ(read_file(path("1.txt")), read_file(path("2.txt"))) << method;
    }
    const auto stdout_copy = run_cli("construct --method code-uniform --n 8 --eps 0.5 --seed beef");
    run_cli("construct --method code-uniform --n 8 --eps 0.5 --seed beef -o " + path("3.txt"));
    EXPECT_EQ(stdout_copy.out, read_file(path("3.txt")));
}

TEST_F(Cli, VerifyExitStatus) {
    {
        std::ofstream out(path("full.txt"));
        out << "# n: 3\n";
        for (int x = 0; x < 8; ++x) out << x << '\n';
    }
    {
        std::ofstream out(path("one.txt"));
        out << "# n: 3\n5\n";
    }
    const auto full = run_cli("verify " + path("full.txt") + " --eps 0.01");
    EXPECT_EQ(full.status, 0);
    EXPECT_NE(full.out.find("max_bias: 0.000000"), std::string::npos);
    const auto one = run_cli("verify " + path("one.txt") + " --eps 0.99");
    EXPECT_EQ(one.status, 1);
    EXPECT_NE(one.out.find("max_bias: 1.000000"), std::string::npos);
    EXPECT_NE(one.out.find("witness: {1}"), std::string::npos);
    EXPECT_EQ(run_cli("verify " + path("missing.txt") + " --eps 0.5").status, 2);
}

TEST_F(Cli, SampledNeverAboveExact) {
    ASSERT_EQ(run_cli("construct --method naive --n 10 --eps 0.6 --size 40 --seed 11 -o " + path("s.txt")).status, 0);
    const auto exact = run_cli("verify " + path("s.txt") + " --eps 0.5");
    const auto sampled = run_cli("verify " + path("s.txt") + " --eps 0.5 --mode sampled --samples 100");
    auto numerator = [](const std::string& out) {
        const auto at = out.find("max_bias: ");
        const auto open = out.find('(', at);
        return std::stoul(out.substr(open + 1));
    };
    EXPECT_LE(numerator(sampled.out), numerator(exact.out));
    EXPECT_NE(sampled.out.find("samples: 100"), std::string::npos);
}

TEST_F(Cli, ParamsTable) {
    const auto r = run_cli("params --n 12 --eps 0.5 --b 12");
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("seed_vs_m=84<96"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("m=96 t=8"), std::string::npos);
    EXPECT_NE(r.out.find("ell=576"), std::string::npos);
    const auto legendre = run_cli("params --method legendre-shift --n 8 --eps 0.5 --delta 0.5");
    EXPECT_NE(legendre.out.find("ell=384 q=4358257"), std::string::npos) << legendre.out;
    EXPECT_NE(legendre.out.find(" 184 "), std::string::npos) << legendre.out;
    const auto aghp = run_cli("params --method aghp --n 6 --eps 0.7");
    EXPECT_NE(aghp.out.find("0 (deterministic)"), std::string::npos);
}

TEST_F(Cli, RejectsMisplacedFlags) {
    EXPECT_EQ(run_cli("construct --method aghp --n 4 --eps 0.7 --delta 0.5").status, 2);
    EXPECT_EQ(run_cli("construct --method legendre-shift --n 4 --eps 0.7").status, 2);
    EXPECT_EQ(run_cli("construct --method naive --n 4 --eps 0.7 --b 8").status, 2);
    EXPECT_EQ(run_cli("construct --method code-uniform --n 4 --eps 0.7 --size 8").status, 2);
    EXPECT_EQ(run_cli("construct --method code-uniform --n 4 --eps 1.5").status, 2);
    EXPECT_EQ(run_cli("construct --method code-uniform --n 4 --eps 0.5 --A 1.0").status, 2);
    EXPECT_EQ(run_cli("construct --method code-nisan --n 4 --eps 0.5 --b 3").status, 2);
    EXPECT_EQ(run_cli("construct --method bogus --n 4 --eps 0.5").status, 2);
    EXPECT_EQ(run_cli("construct --method naive --n 4 --eps 0.5 --seed xyz").status, 2);
}

TEST_F(Cli, Weil) {
    const auto example = run_cli("weil --q 5 --coeffs 0,1,1");
    EXPECT_EQ(example.status, 0);
    EXPECT_NE(example.out.find("sum: 0.200000000"), std::string::npos);
    EXPECT_NE(example.out.find("result: PASS"), std::string::npos);
    const auto linear = run_cli("weil --q 101 --coeffs 0,1");
    EXPECT_NE(linear.out.find("sum: 0.000000000"), std::string::npos);
    const auto square = run_cli("weil --q 101 --coeffs 0,0,1");
    EXPECT_EQ(square.status, 0);
    EXPECT_NE(square.out.find("squarefree: no"), std::string::npos);
    EXPECT_NE(square.out.find("sum: 0.990099010"), std::string::npos);
    EXPECT_EQ(run_cli("weil --q 100 --coeffs 0,1").status, 2);
    EXPECT_EQ(run_cli("weil --q 101 --coeffs 7").status, 2);
}
