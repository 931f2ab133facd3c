// smallbias_cli.cpp
// Command-line front end: construct, verify, params, weil.
//
// Exit status: 0 on success (for verify: the set is ε-biased in the requested
// mode; for weil: the bound holds or does not apply), 1 when the check fails,
// 2 on usage, parse or parameter errors.

#include "smallbias/baseline.hpp"
#include "smallbias/bias.hpp"
#include "smallbias/codegen.hpp"
#include "smallbias/legendre.hpp"
#include "smallbias/nisan.hpp"
#include "smallbias/numeric.hpp"
#include "smallbias/setfile.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <bit>
#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace smallbias;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

const std::vector<std::string> kMethods{"naive", "code-uniform", "code-nisan", "legendre-shift", "aghp"};

struct ConstructOptions {
    std::string method;
    std::size_t n = 0;
    double eps = 0.0;
    std::optional<double> delta;
    std::string seed = "00";
    std::optional<double> A;
    std::optional<std::size_t> b;
    std::optional<std::size_t> size;
    std::string out;
};

struct VerifyOptions {
    std::string input;
    std::string mode = "exact";
    std::uint64_t samples = 10000;
    double eps = 0.0;
    std::string seed = "00";
};

struct ParamsOptions {
    std::string method = "all";
    std::size_t n = 0;
    double eps = 0.0;
    std::optional<double> delta;
    std::optional<double> A;
    std::optional<std::size_t> b;
    std::optional<std::size_t> size;
};

struct WeilOptions {
    std::uint64_t q = 0;
    std::string coeffs;
};

void check_method_flags(const std::string& method, const std::optional<double>& delta, const std::optional<double>& A,
                        const std::optional<std::size_t>& b, const std::optional<std::size_t>& size) {
    const bool code = method == "code-uniform" || method == "code-nisan";
    if (delta && method != "legendre-shift") throw std::invalid_argument("--delta applies only to legendre-shift");
    if (!delta && method == "legendre-shift") throw std::invalid_argument("legendre-shift requires --delta");
    if (A && !code) throw std::invalid_argument("--A applies only to code-uniform and code-nisan");
    if (b && method != "code-nisan") throw std::invalid_argument("--b applies only to code-nisan");
    if (size && method != "naive") throw std::invalid_argument("--size applies only to naive");
}

std::size_t default_block(std::size_t n, const std::optional<std::size_t>& b) { return b.value_or(40 * n); }

CandidateSet build(const ConstructOptions& o) {
    if (o.method == "aghp") return aghp_set(o.n, o.eps);
    EntropySource src = EntropySource::from_hex(o.seed);
    CandidateSet s;
    if (o.method == "naive") {
        s = construct_naive(o.n, o.eps, o.size, src);
    } else if (o.method == "code-uniform") {
        s = construct_code_uniform(o.n, o.eps, o.A.value_or(kDefaultA), src);
    } else if (o.method == "code-nisan") {
        s = construct_code_nisan(o.n, o.eps, o.A.value_or(kDefaultA), default_block(o.n, o.b), src);
    } else {
        s = construct_legendre_shift(o.n, o.eps, *o.delta, src);
    }
    if (s.random_bits != src.bits_consumed()) throw std::logic_error("random bit ledger out of sync with the source");
    return s;
}

int run_construct(const ConstructOptions& o) {
    check_method_flags(o.method, o.delta, o.A, o.b, o.size);
    const CandidateSet s = build(o);
    std::ostream& report = o.out.empty() ? std::cerr : std::cout;
    if (o.out.empty()) {
        write_set_file(std::cout, s);
    } else {
        save_set_file(o.out, s);
    }
    report << "size: " << s.size() << '\n' << "random_bits: " << s.random_bits << '\n';
    if (o.n > kExactMaxDimension) {
        std::cerr << "note: n > " << kExactMaxDimension << ", verify this set with --mode sampled\n";
    }
    return 0;
}

int run_verify(const VerifyOptions& o) {
    const CandidateSet s = load_set_file(o.input);
    BiasReport report;
    if (o.mode == "exact") {
        report = exact_max_bias(s);
    } else {
        EntropySource src = EntropySource::from_hex(o.seed);
        report = sampled_max_bias(s, o.samples, src);
    }
    const bool ok = report.within(o.eps);
    std::cout << "mode: " << o.mode << '\n';
    std::cout << "n: " << s.n << '\n';
    std::cout << "size: " << s.size() << '\n';
    if (report.mode == BiasMode::sampled) std::cout << "samples: " << report.samples << '\n';
    std::cout << fmt::format("max_bias: {:.6f} ({}/{})\n", report.max_bias, report.max_abs_sum, report.set_size);
    if (report.witness) std::cout << "witness: " << to_string(*report.witness) << '\n';
    if (!report.per_weight_max.empty()) {
        std::cout << "per_weight_max:\n";
        for (std::size_t k = 1; k < report.per_weight_max.size(); ++k) {
            std::cout << fmt::format("  {:>3} {:.6f}\n", k, report.per_weight_max[k]);
        }
    }
    std::cout << "epsilon: " << format_real(o.eps) << '\n';
    std::cout << "verdict: " << (ok ? "epsilon-biased" : "NOT epsilon-biased") << '\n';
    return ok ? 0 : kExitFail;
}

struct ParamRow {
    std::string method;
    std::uint64_t set_size;
    std::uint64_t random_bits;
    std::string asymptotic;
    std::string details;
};

ParamRow params_row(const std::string& method, const ParamsOptions& o) {
    if (method == "naive") {
        const std::size_t size = o.size.value_or(naive_size(o.n, o.eps));
        return {method, size, o.n * size, "O(n^2/eps^2)", fmt::format("size={}", size)};
    }
    if (method == "code-uniform" || method == "code-nisan") {
        const CodeParams p = derive_params(o.n, o.eps, o.A.value_or(kDefaultA));
        std::string details = fmt::format("A={} m={} t={} threshold={} failure_bound={:.4g}", format_real(p.A), p.m, p.t,
                                          p.threshold, failure_bound(p.n, p.m, p.epsilon));
        if (method == "code-uniform") return {method, p.length(), p.m, "O(n/eps^2)", details};
        const std::size_t b = default_block(o.n, o.b);
        const std::size_t bits = seed_length(b, p.t);
        details += fmt::format(" b={} k={} lemma_t_bound={} seed_vs_m={}", b, ceil_log2(p.t),
                               lemma_hypothesis_holds(b, p.t) ? "holds" : "violated",
                               bits < p.m ? fmt::format("{}<{}", bits, p.m) : fmt::format("{}>={}", bits, p.m));
        return {method, p.length(), bits, "O(n log(1/eps))", details};
    }
    if (method == "legendre-shift") {
        const double delta = o.delta.value_or(0.5);
        const std::size_t ell = shift_set_size(o.n, o.eps, delta);
        const std::uint64_t q = shift_modulus(ell);
        const UnionBound u = union_bound(o.n, ell, o.eps, delta);
        const std::size_t bits_per_shift = static_cast<std::size_t>(std::bit_width(q - 1));
        return {method, ell, o.n * bits_per_shift, "O(n log(n/eps))",
                fmt::format("delta={} ell={} q={} union_bound={:.4g}", format_real(delta), ell, q, u.series)};
    }
    const std::uint64_t q = aghp_modulus(o.n, o.eps);
    return {method, q, 0, "0 (deterministic)", fmt::format("q={}", q)};
}

int run_params(const ParamsOptions& o) {
    std::vector<std::string> methods;
    if (o.method == "all") {
        methods = kMethods;
    } else {
        check_method_flags(o.method, o.delta, o.A, o.b, o.size);
        methods.push_back(o.method);
    }
    std::cout << fmt::format("{:<16}{:>10}{:>13}  {:<20}{}\n", "method", "set_size", "random_bits", "asymptotic",
                             "parameters");
    for (const auto& m : methods) {
        const ParamRow r = params_row(m, o);
        std::cout << fmt::format("{:<16}{:>10}{:>13}  {:<20}{}\n", r.method, r.set_size, r.random_bits, r.asymptotic,
                                 r.details);
    }
    return 0;
}

std::vector<std::uint64_t> parse_coeffs(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad coefficient '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("no coefficients given");
    return out;
}

int run_weil(const WeilOptions& o) {
    const PrimeField field(o.q);
    const auto coeffs = parse_coeffs(o.coeffs);
    const long degree = poly_degree_mod(coeffs, o.q);
    if (degree < 1) throw std::invalid_argument("polynomial must have degree at least 1 mod q");
    const double sum = weil_sum(coeffs, field);
    const double bound = static_cast<double>(degree - 1) / std::sqrt(static_cast<double>(o.q));
    const bool squarefree = is_squarefree(coeffs, field);
    const bool holds = sum <= bound + 1e-12;
    std::cout << "q: " << o.q << '\n';
    std::cout << "degree: " << degree << '\n';
    std::cout << fmt::format("sum: {:.9f}\n", sum);
    std::cout << fmt::format("bound: {:.9f}\n", bound);
    std::cout << "squarefree: " << (squarefree ? "yes" : "no") << '\n';
    if (!squarefree) {
        std::cout << "result: " << (holds ? "PASS" : "N/A") << " (bound not guaranteed for this polynomial)\n";
        return 0;
    }
    std::cout << "result: " << (holds ? "PASS" : "FAIL") << '\n';
    return holds ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construct and verify small-bias sets in F_2^n"};
    app.require_subcommand(1);

    ConstructOptions co;
    auto* construct = app.add_subcommand("construct", "Build a set and write it in set-file format");
    construct->add_option("--method", co.method, "Construction")->required()->check(CLI::IsMember(kMethods));
    construct->add_option("--n", co.n, "Dimension")->required()->check(CLI::PositiveNumber);
    construct->add_option("--eps", co.eps, "Target bias in (0,1)")->required();
    construct->add_option("--delta", co.delta, "Failure probability for legendre-shift, in (0,1]");
    construct->add_option("--seed", co.seed, "Hex seed for the entropy source")->capture_default_str();
    construct->add_option("--A", co.A, "Multiplier in m = A n / eps^2 (> 2 ln 2, default 2)");
    construct->add_option("--b", co.b, "Generator block size for code-nisan (default 40 n)");
    construct->add_option("--size", co.size, "Number of samples for naive (default ceil(4 n / eps^2))");
    construct->add_option("-o,--out", co.out, "Output path (default: standard output)");

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "Report the maximum bias of a set file");
    verify->add_option("input", vo.input, "Set file")->required();
    verify->add_option("--mode", vo.mode, "exact or sampled")->check(CLI::IsMember({"exact", "sampled"}))->capture_default_str();
    verify->add_option("--samples", vo.samples, "Number of sampled T in sampled mode")->capture_default_str();
    verify->add_option("--eps", vo.eps, "Bias threshold")->required();
    verify->add_option("--seed", vo.seed, "Hex seed for sampling T")->capture_default_str();

    ParamsOptions po;
    auto* params = app.add_subcommand("params", "Print derived parameters and random-bit costs");
    std::vector<std::string> param_methods = kMethods;
    param_methods.push_back("all");
    params->add_option("--method", po.method, "Construction or 'all'")->check(CLI::IsMember(param_methods))->capture_default_str();
    params->add_option("--n", po.n, "Dimension")->required()->check(CLI::PositiveNumber);
    params->add_option("--eps", po.eps, "Target bias in (0,1)")->required();
    params->add_option("--delta", po.delta, "Failure probability for legendre-shift (default 0.5 with --method all)");
    params->add_option("--A", po.A, "Multiplier in m = A n / eps^2");
    params->add_option("--b", po.b, "Generator block size for code-nisan");
    params->add_option("--size", po.size, "Naive sample count");

    WeilOptions wo;
    auto* weil = app.add_subcommand("weil", "Brute-force character sum of a polynomial over F_q");
    weil->add_option("--q", wo.q, "Prime modulus <= 10^7")->required();
    weil->add_option("--coeffs", wo.coeffs, "Comma-separated coefficients, constant term first")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (*construct) return run_construct(co);
        if (*verify) return run_verify(vo);
        if (*params) return run_params(po);
        if (*weil) return run_weil(wo);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
