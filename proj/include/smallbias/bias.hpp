// bias.hpp
// Bias of a multiset S ⊆ F_2^n against parities f_T, computed exactly through the
// Walsh–Hadamard transform of the multiplicity vector or estimated from sampled T,
// and the dual view of S as the generator of a length-|S| linear code.

#pragma once

#include "smallbias/bitvector.hpp"
#include "smallbias/entropy.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace smallbias {

/// Largest n accepted by exact mode (transform length 2^n).
inline constexpr std::size_t kExactMaxDimension = 28;

/// Ordered multiset of elements of F_2^n with construction provenance.
struct CandidateSet {
    std::size_t n = 0;
    std::vector<BitVector> elements;
    std::string method;
    /// Ordered method parameters, written verbatim to the set file header.
    std::vector<std::pair<std::string, std::string>> params;
    std::uint64_t random_bits = 0;

    std::size_t size() const noexcept { return elements.size(); }
    /// Value of a parameter, if recorded.
    std::optional<std::string> param(std::string_view key) const;
};

/// Throws DimensionError unless S is nonempty and every element has dimension n.
void validate(const CandidateSet& s);

enum class BiasMode { exact, sampled };

struct BiasReport {
    BiasMode mode = BiasMode::exact;
    double max_bias = 0.0;
    /// Numerator of max_bias: max |Σ_{x∈S} (-1)^{f_T(x)}|.
    std::uint64_t max_abs_sum = 0;
    std::size_t set_size = 0;
    std::optional<IndexSet> witness;
    std::uint64_t samples = 0;
    /// per_weight_max[k] = max_{|T|=k} |b_T| for k = 1..n; index 0 unused. Exact mode only.
    std::vector<double> per_weight_max;

    bool within(double epsilon) const noexcept;
};

/// Signed bias (1/|S|) Σ_{x∈S} (-1)^{f_T(x)}.
double bias_for(const CandidateSet& s, const IndexSet& t);
/// Integer form of bias_for: Σ_{x∈S} (-1)^{f_T(x)}.
std::int64_t signed_sum(const CandidateSet& s, const IndexSet& t);

/// In-place unnormalised Walsh–Hadamard transform; v.size() must be a power of two.
template <typename Scalar>
void walsh_hadamard(std::span<Scalar> v) {
    const std::size_t len = v.size();
    for (std::size_t h = 1; h < len; h <<= 1) {
        for (std::size_t i = 0; i < len; i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                const Scalar a = v[j];
                const Scalar b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
    }
}

/// Entry T (as a mask, coordinate i ↔ bit i-1) is Σ_{x∈S} (-1)^{f_T(x)}. n ≤ kExactMaxDimension.
std::vector<std::int64_t> walsh_spectrum(const CandidateSet& s);

BiasReport exact_max_bias(const CandidateSet& s);

/// Max |b_T| over `trials` uniformly drawn nonempty T; a lower bound on the exact value.
BiasReport sampled_max_bias(const CandidateSet& s, std::uint64_t trials, EntropySource& src);

struct LinearCodeView {
    std::size_t length = 0;
    std::size_t rank = 0;
    /// Row i is the truth table of coordinate i over the ordered elements.
    std::vector<BitVector> generator;
    /// Extremes of wt(c_T) over nonempty T.
    std::size_t min_weight = 0;
    std::size_t max_weight = 0;
    /// False when the extremes come from sampled T only.
    bool weights_exact = true;
};

/// Exact view; requires n ≤ kExactMaxDimension.
LinearCodeView to_code(const CandidateSet& s);
/// Exact when n ≤ kExactMaxDimension, otherwise weights over `trials` sampled T.
LinearCodeView to_code(const CandidateSet& s, std::uint64_t trials, EntropySource& src);

/// c_T = Σ_{i∈T} generator row i.
BitVector codeword_for(const LinearCodeView& code, const IndexSet& t);

/// Rank over F_2 of a list of equal-length vectors.
std::size_t gf2_rank(std::vector<BitVector> rows);

}  // namespace smallbias
