// codegen.hpp
// Small-bias sets from the concatenated random code
//
//     C_α = { w_x = (x, α_1 x, ..., α_t x) : x ∈ F_{2^n} },   α_i ∈ F_{2^n},
//
// whose n×(n+m) generator matrix has the set as its columns. The α_i are drawn
// either uniformly (m random bits) or from the space-bounded generator in
// nisan.hpp (seed_length(b, t) random bits). Also carries the failure-probability
// calculators that justify m = A·n/ε².

#pragma once

#include "smallbias/bias.hpp"
#include "smallbias/binary_field.hpp"
#include "smallbias/bitvector.hpp"
#include "smallbias/entropy.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace smallbias {

/// Default multiplier in m = A·n/ε²; any A > 2 ln 2 is admissible.
inline constexpr double kDefaultA = 2.0;

struct CodeParams {
    std::size_t n = 0;
    double epsilon = 0.0;
    double A = kDefaultA;
    std::size_t m = 0;  // ⌈A·n/ε²⌉ rounded up to a multiple of n
    std::size_t t = 0;  // m / n blocks
    std::size_t threshold = 0;  // ⌈(1-ε)(n+m)/2⌉

    std::size_t length() const noexcept { return n + m; }
};

/// Throws std::invalid_argument unless n ≥ 1, 0 < ε < 1 and A > 2 ln 2.
CodeParams derive_params(std::size_t n, double epsilon, double A = kDefaultA);

/// α_1..α_t, all in the same F_{2^n}.
using BlockAlphas = std::vector<FieldElement>;

/// w_x = (x, α_1 x, ..., α_t x) as a vector of dimension n(t+1).
BitVector codeword(const BitVector& x, std::span<const FieldElement> alphas);

/// Read-once program over α_1..α_t whose state is the running weight of w_x.
class WeightProgram {
public:
    WeightProgram(BitVector x, const CodeParams& params);

    /// Reads α_i and adds |α_i x| to the state.
    void step(const FieldElement& alpha);

    std::size_t state() const noexcept { return state_; }
    std::size_t steps() const noexcept { return steps_; }
    bool accepts() const noexcept { return state_ >= threshold_; }

private:
    BitVector x_;
    std::size_t threshold_;
    std::size_t state_;
    std::size_t steps_ = 0;
};

struct WeightProgramResult {
    std::size_t final_state = 0;
    bool accepts = false;
};

/// Runs WeightProgram over all params.t blocks; x must be nonzero.
WeightProgramResult run_weight_program(const BitVector& x, std::span<const FieldElement> alphas, const CodeParams& params);

/// The n+m columns of the generator matrix of C_α; columns 1..n are e_1..e_n.
CandidateSet biased_set_from_alphas(const CodeParams& params, std::span<const FieldElement> alphas);

/// α_i uniform in F_{2^n}: exactly m random bits.
CandidateSet construct_code_uniform(const CodeParams& params, EntropySource& src);
CandidateSet construct_code_uniform(std::size_t n, double epsilon, double A, EntropySource& src);

/// α_i = low n bits of the generator's i-th b-bit block; random bits = seed_length(b, t).
CandidateSet construct_code_nisan(const CodeParams& params, std::size_t b, EntropySource& src);
CandidateSet construct_code_nisan(std::size_t n, double epsilon, double A, std::size_t b, EntropySource& src);

/// Union bound n²·exp(n ln 2 − (ε²/2)(n+m)) on the probability that C_α has a
/// nonzero codeword lighter than (1−ε)(n+m)/2, clamped to [0, 1].
double failure_bound(std::size_t n, std::size_t m, double epsilon);

/// Natural-log binary entropy h(δ) = −δ ln δ − (1−δ) ln(1−δ), h(0) = h(1) = 0.
double entropy_h(double delta);

}  // namespace smallbias
