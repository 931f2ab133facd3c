// legendre.hpp
// Quadratic-character constructions over a prime field F_q.
//
// w(x) = (χ(x + s_1), ..., χ(x + s_n)) read as bits (+1 -> 0, -1 -> 1, 0 -> 1).
// With s_j = j and x over all of F_q this is the deterministic Alon–Goldreich–
// Håstad–Peralta set; with uniformly random shifts and x ∈ {1..ℓ} it is the
// randomized shift construction, whose parameters ℓ and q come from the
// moment bounds further down.

#pragma once

#include "smallbias/bias.hpp"
#include "smallbias/entropy.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace smallbias {

class ShiftCollisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Maximum number of full shift re-draws before giving up.
inline constexpr int kMaxShiftAttempts = 64;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q) noexcept;
std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t q) noexcept;

/// Deterministic Miller–Rabin with the first twelve prime bases; exact below 2^64.
bool is_prime(std::uint64_t x) noexcept;

/// An odd prime modulus, certified on construction.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t q);
    std::uint64_t modulus() const noexcept { return q_; }

private:
    std::uint64_t q_;
};

/// Smallest prime ≥ x, for 3 ≤ x < 2^63.
PrimeField next_prime(std::uint64_t x);

/// χ(x) ∈ {-1, 0, +1} by Euler's criterion x^{(q-1)/2}; requires 0 ≤ x < q.
int legendre_symbol(std::uint64_t x, const PrimeField& field);

/// Largest q accepted by the brute-force character sum.
inline constexpr std::uint64_t kMaxWeilModulus = 10'000'000;

/// |(1/q) Σ_{x∈F_q} χ(p(x))|, coefficients in ascending order (coeffs[i] multiplies x^i).
double weil_sum(std::span<const std::uint64_t> coeffs, const PrimeField& field);

/// Degree after reducing coefficients mod q; -1 for the zero polynomial.
long poly_degree_mod(std::span<const std::uint64_t> coeffs, std::uint64_t q);

/// gcd(p, p') = 1 over F_q. A squarefree p of degree ≥ 1 is not a square.
bool is_squarefree(std::span<const std::uint64_t> coeffs, const PrimeField& field);

/// {w(x) : x ∈ F_q} with s_j = j and q = next_prime(⌈n²/ε²⌉); uses no randomness.
CandidateSet aghp_set(std::size_t n, double epsilon);
std::uint64_t aghp_modulus(std::size_t n, double epsilon);

struct ShiftParams {
    std::size_t n = 0;
    double epsilon = 0.0;
    double delta = 0.0;
    std::size_t ell = 0;  // ⌈6n/(δε²)⌉, X = {1..ell}
    std::uint64_t q = 0;  // next_prime(⌈4(e·ell)²⌉)
    std::vector<std::uint64_t> shifts;
    std::uint64_t random_bits = 0;
    int attempts = 0;
};

std::size_t shift_set_size(std::size_t n, double epsilon, double delta);
std::uint64_t shift_modulus(std::size_t ell);

/// Computes ell and q, then draws n shifts with draw_mod(q), re-drawing all of them
/// while some x + s_j ≡ 0 for x ∈ X. Throws ShiftCollisionError after kMaxShiftAttempts.
ShiftParams derive_shift_params(std::size_t n, double epsilon, double delta, EntropySource& src);

/// {w(x) : x ∈ {1..ell}}; throws ShiftCollisionError if some x + s_j ≡ 0.
CandidateSet shifted_legendre_set(const ShiftParams& params);

/// derive_shift_params followed by shifted_legendre_set, with seed provenance recorded.
CandidateSet construct_legendre_shift(std::size_t n, double epsilon, double delta, EntropySource& src);

/// √2 (2k/(eℓ))^k + (2k/√q)^{|T|}: bound on E_Σ b_T^{2k}.
double moment_bound(std::size_t ell, double q, std::size_t k, std::size_t t_size);
/// Markov: E b_T^{2k} / ε^{2k} using moment_bound.
double markov_tail(std::size_t ell, double q, std::size_t k, std::size_t t_size, double epsilon);
/// 2 (2|T|/(eℓε²))^{|T|}: the tail after choosing k = |T| and q = 4(eℓ)².
double simplified_tail(std::size_t ell, std::size_t t_size, double epsilon);

struct UnionBound {
    double ratio = 0.0;        // 2n/(ℓε²)
    double series = 0.0;       // 2 Σ_{w=1}^{n} ratio^w
    double closed_form = 0.0;  // (2δ/3)/(1 − δ/3)
    bool divergent = false;    // ratio ≥ 1
    bool below_recommended = false;  // ℓ < 6n/(δε²)
};

/// Union bound over all nonempty T on Pr[some |b_T| > ε].
UnionBound union_bound(std::size_t n, std::size_t ell, double epsilon, double delta);

struct MatchingProbability {
    double exact = 0.0;  // (2k-1)!! / ℓ^k
    double bound = 0.0;  // √2 (2k/(eℓ))^k
};

/// Probability that a uniform 2k-tuple from an ℓ-set pairs up into a perfect matching (union bound).
MatchingProbability matching_probability(std::size_t k, std::size_t ell);

}  // namespace smallbias
