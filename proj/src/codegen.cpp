// codegen.cpp

#include "smallbias/codegen.hpp"

#include "smallbias/nisan.hpp"
#include "smallbias/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace smallbias {

namespace {

void require_alphas(std::span<const FieldElement> alphas, std::size_t n) {
    for (const auto& a : alphas) {
        if (a.degree() != n) throw DimensionError("block multiplier does not lie in F_{2^" + std::to_string(n) + "}");
    }
}

void record_common(CandidateSet& s, const CodeParams& params) {
    s.params.emplace_back("epsilon", format_real(params.epsilon));
    s.params.emplace_back("A", format_real(params.A));
    s.params.emplace_back("m", std::to_string(params.m));
    s.params.emplace_back("t", std::to_string(params.t));
    s.params.emplace_back("threshold", std::to_string(params.threshold));
}

void record_source(CandidateSet& s, const EntropySource& src) {
    s.params.emplace_back("seed", src.seed_hex());
    s.params.emplace_back("generator", std::string(kGeneratorId));
}

}  // namespace

CodeParams derive_params(std::size_t n, double epsilon, double A) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
    if (!(A > 2.0 * std::numbers::ln2)) throw std::invalid_argument("A must exceed 2 ln 2 ≈ 1.386");
    CodeParams p;
    p.n = n;
    p.epsilon = epsilon;
    p.A = A;
    const std::size_t raw = ceil_snapped(A * static_cast<double>(n) / (epsilon * epsilon));
    p.t = std::max<std::size_t>(1, (raw + n - 1) / n);
    p.m = p.t * n;
    p.threshold = ceil_snapped((1.0 - epsilon) * static_cast<double>(n + p.m) / 2.0);
    return p;
}

BitVector codeword(const BitVector& x, std::span<const FieldElement> alphas) {
    const std::size_t n = x.size();
    require_alphas(alphas, n);
    std::vector<BitVector> blocks;
    blocks.reserve(alphas.size() + 1);
    blocks.push_back(x);
    if (!alphas.empty()) {
        const FieldElement xe = embed(x, alphas.front().field());
        for (const auto& a : alphas) blocks.push_back(project(field_mul(a, xe), n));
    }
    return concat(blocks);
}

WeightProgram::WeightProgram(BitVector x, const CodeParams& params)
    : x_(std::move(x)), threshold_(params.threshold), state_(hamming_weight(x_)) {
    if (x_.size() != params.n) throw DimensionError("weight program: x has the wrong dimension");
    if (x_.is_zero()) throw std::invalid_argument("weight program: x must be nonzero");
}

void WeightProgram::step(const FieldElement& alpha) {
    if (alpha.degree() != x_.size()) throw DimensionError("weight program: block multiplier has the wrong degree");
    state_ += hamming_weight(field_mul(alpha, embed(x_, alpha.field())).coeffs());
    ++steps_;
}

WeightProgramResult run_weight_program(const BitVector& x, std::span<const FieldElement> alphas, const CodeParams& params) {
    if (alphas.size() != params.t) throw std::invalid_argument("weight program: expected t block multipliers");
    WeightProgram program(x, params);
    for (const auto& a : alphas) program.step(a);
    return {program.state(), program.accepts()};
}

CandidateSet biased_set_from_alphas(const CodeParams& params, std::span<const FieldElement> alphas) {
    const std::size_t n = params.n;
    if (alphas.size() != params.t) throw std::invalid_argument("expected t block multipliers");
    require_alphas(alphas, n);
    const std::size_t len = n * (alphas.size() + 1);

    std::vector<BitVector> rows;
    rows.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) rows.push_back(codeword(BitVector::unit(n, i), alphas));

    CandidateSet s;
    s.n = n;
    s.elements.assign(len, BitVector(n));
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= len; ++j) {
            if (rows[i - 1].get(j)) s.elements[j - 1].set(i);
        }
    }
    return s;
}

CandidateSet construct_code_uniform(const CodeParams& params, EntropySource& src) {
    const std::uint64_t before = src.bits_consumed();
    const auto field = BinaryField::create(params.n);
    BlockAlphas alphas;
    alphas.reserve(params.t);
    for (std::size_t i = 0; i < params.t; ++i) alphas.push_back(field->from_bits(src.draw_vector(params.n)));

    CandidateSet s = biased_set_from_alphas(params, alphas);
    s.method = "code-uniform";
    s.random_bits = src.bits_consumed() - before;
    record_common(s, params);
    record_source(s, src);
    return s;
}

CandidateSet construct_code_uniform(std::size_t n, double epsilon, double A, EntropySource& src) {
    return construct_code_uniform(derive_params(n, epsilon, A), src);
}

CandidateSet construct_code_nisan(const CodeParams& params, std::size_t b, EntropySource& src) {
    if (b < params.n) throw std::invalid_argument("block size b must be at least n");
    const std::uint64_t before = src.bits_consumed();
    const auto block_field = BinaryField::create(b);
    const auto field = BinaryField::create(params.n);
    const std::size_t k = ceil_log2(params.t);

    const NisanSeed seed = sample_seed(block_field, params.t, src);
    const std::vector<FieldElement> blocks = expand(seed, k);
    BlockAlphas alphas;
    alphas.reserve(params.t);
    for (std::size_t i = 0; i < params.t; ++i) alphas.push_back(field->from_bits(blocks[i].coeffs().slice(1, params.n)));

    CandidateSet s = biased_set_from_alphas(params, alphas);
    s.method = "code-nisan";
    s.random_bits = src.bits_consumed() - before;
    record_common(s, params);
    s.params.emplace_back("b", std::to_string(b));
    s.params.emplace_back("k", std::to_string(k));
    s.params.emplace_back("seed_bits", std::to_string(seed_length(b, params.t)));
    s.params.emplace_back("lemma_t_bound", lemma_hypothesis_holds(b, params.t) ? "holds" : "violated");
    record_source(s, src);
    return s;
}

CandidateSet construct_code_nisan(std::size_t n, double epsilon, double A, std::size_t b, EntropySource& src) {
    return construct_code_nisan(derive_params(n, epsilon, A), b, src);
}

double failure_bound(std::size_t n, std::size_t m, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
    const double dn = static_cast<double>(n);
    const double exponent = dn * std::numbers::ln2 - epsilon * epsilon / 2.0 * static_cast<double>(n + m);
    return std::clamp(dn * dn * std::exp(exponent), 0.0, 1.0);
}

double entropy_h(double delta) {
    if (!(delta >= 0.0 && delta <= 1.0)) throw std::invalid_argument("entropy_h: delta must lie in [0, 1]");
    if (delta == 0.0 || delta == 1.0) return 0.0;
    return -delta * std::log(delta) - (1.0 - delta) * std::log(1.0 - delta);
}

}  // namespace smallbias
