// bias.cpp

#include "smallbias/bias.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace smallbias {

namespace {

struct SpectrumSummary {
    std::uint64_t max_abs = 0;
    std::uint64_t witness = 0;
    std::int64_t max_signed = std::numeric_limits<std::int64_t>::min();
    std::int64_t min_signed = std::numeric_limits<std::int64_t>::max();
    std::vector<std::uint64_t> per_weight_abs;
};

void require_exact_dimension(std::size_t n) {
    if (n > kExactMaxDimension) {
        throw DimensionError("exact mode supports n <= " + std::to_string(kExactMaxDimension) + ", got n = " +
                             std::to_string(n) + "; use sampled mode");
    }
}

template <typename Scalar>
std::vector<Scalar> multiplicity_spectrum(const CandidateSet& s) {
    std::vector<Scalar> v(std::size_t{1} << s.n, 0);
    for (const auto& x : s.elements) ++v[x.low_word()];
    walsh_hadamard(std::span<Scalar>(v));
    return v;
}

template <typename Scalar>
SpectrumSummary summarize(const std::vector<Scalar>& spectrum, std::size_t n) {
    SpectrumSummary out;
    out.per_weight_abs.assign(n + 1, 0);
    for (std::uint64_t t = 1; t < spectrum.size(); ++t) {
        const auto value = static_cast<std::int64_t>(spectrum[t]);
        const auto mag = static_cast<std::uint64_t>(value < 0 ? -value : value);
        if (mag > out.max_abs || (mag == out.max_abs && lex_less(t, out.witness))) {
            out.max_abs = mag;
            out.witness = t;
        }
        auto& slot = out.per_weight_abs[static_cast<std::size_t>(std::popcount(t))];
        slot = std::max(slot, mag);
        out.max_signed = std::max(out.max_signed, value);
        out.min_signed = std::min(out.min_signed, value);
    }
    return out;
}

SpectrumSummary exact_summary(const CandidateSet& s) {
    validate(s);
    require_exact_dimension(s.n);
    if (s.n == 0) return {};
    if (s.size() < (std::size_t{1} << 31)) return summarize(multiplicity_spectrum<std::int32_t>(s), s.n);
    return summarize(multiplicity_spectrum<std::int64_t>(s), s.n);
}

IndexSet draw_nonempty(std::size_t n, EntropySource& src) {
    for (;;) {
        BitVector t = src.draw_vector(n);
        if (!t.is_zero()) return IndexSet(std::move(t));
    }
}

std::vector<BitVector> generator_rows(const CandidateSet& s) {
    std::vector<BitVector> rows(s.n, BitVector(s.size()));
    for (std::size_t j = 0; j < s.size(); ++j) {
        const auto& x = s.elements[j];
        for (std::size_t i = 1; i <= s.n; ++i) {
            if (x.get(i)) rows[i - 1].set(j + 1);
        }
    }
    return rows;
}

std::size_t weight_from_sum(std::size_t length, std::int64_t sum) {
    return static_cast<std::size_t>((static_cast<std::int64_t>(length) - sum) / 2);
}

}  // namespace

std::optional<std::string> CandidateSet::param(std::string_view key) const {
    for (const auto& [k, v] : params) {
        if (k == key) return v;
    }
    return std::nullopt;
}

void validate(const CandidateSet& s) {
    if (s.elements.empty()) throw DimensionError("candidate set is empty");
    for (const auto& x : s.elements) {
        if (x.size() != s.n) {
            throw DimensionError("element of dimension " + std::to_string(x.size()) + " in a set of dimension " +
                                 std::to_string(s.n));
        }
    }
}

bool BiasReport::within(double epsilon) const noexcept {
    // Compare the rational max_abs_sum / set_size against epsilon with a relative
    // slack for decimal inputs such as 0.7.
    return static_cast<double>(max_abs_sum) <= epsilon * static_cast<double>(set_size) * (1.0 + 1e-12);
}

std::int64_t signed_sum(const CandidateSet& s, const IndexSet& t) {
    if (t.empty()) throw std::invalid_argument("bias_for: T must be nonempty");
    if (t.dimension() != s.n) throw DimensionError("bias_for: T dimension differs from set dimension");
    std::int64_t sum = 0;
    for (const auto& x : s.elements) sum += parity(x, t) ? -1 : 1;
    return sum;
}

double bias_for(const CandidateSet& s, const IndexSet& t) {
    if (s.elements.empty()) throw DimensionError("candidate set is empty");
    return static_cast<double>(signed_sum(s, t)) / static_cast<double>(s.size());
}

std::vector<std::int64_t> walsh_spectrum(const CandidateSet& s) {
    validate(s);
    require_exact_dimension(s.n);
    return multiplicity_spectrum<std::int64_t>(s);
}

BiasReport exact_max_bias(const CandidateSet& s) {
    const SpectrumSummary summary = exact_summary(s);
    BiasReport report;
    report.mode = BiasMode::exact;
    report.set_size = s.size();
    report.max_abs_sum = summary.max_abs;
    report.max_bias = static_cast<double>(summary.max_abs) / static_cast<double>(s.size());
    if (s.n > 0) report.witness = IndexSet::from_mask(s.n, summary.witness);
    report.per_weight_max.assign(s.n + 1, 0.0);
    for (std::size_t k = 1; k <= s.n; ++k) {
        report.per_weight_max[k] = static_cast<double>(summary.per_weight_abs[k]) / static_cast<double>(s.size());
    }
    return report;
}

BiasReport sampled_max_bias(const CandidateSet& s, std::uint64_t trials, EntropySource& src) {
    validate(s);
    if (trials < 1) throw std::invalid_argument("sampled_max_bias: trials must be >= 1");
    if (s.n == 0) throw DimensionError("sampled_max_bias: no nonempty T exists for n = 0");
    BiasReport report;
    report.mode = BiasMode::sampled;
    report.set_size = s.size();
    report.samples = trials;
    for (std::uint64_t i = 0; i < trials; ++i) {
        IndexSet t = draw_nonempty(s.n, src);
        const std::int64_t sum = signed_sum(s, t);
        const auto mag = static_cast<std::uint64_t>(sum < 0 ? -sum : sum);
        if (!report.witness || mag > report.max_abs_sum) {
            report.max_abs_sum = mag;
            report.witness = std::move(t);
        }
    }
    report.max_bias = static_cast<double>(report.max_abs_sum) / static_cast<double>(s.size());
    return report;
}

LinearCodeView to_code(const CandidateSet& s) {
    const SpectrumSummary summary = exact_summary(s);
    LinearCodeView view;
    view.length = s.size();
    view.generator = generator_rows(s);
    view.rank = gf2_rank(view.generator);
    if (s.n > 0) {
        view.min_weight = weight_from_sum(view.length, summary.max_signed);
        view.max_weight = weight_from_sum(view.length, summary.min_signed);
    }
    return view;
}

LinearCodeView to_code(const CandidateSet& s, std::uint64_t trials, EntropySource& src) {
    if (s.n <= kExactMaxDimension) return to_code(s);
    validate(s);
    if (trials < 1) throw std::invalid_argument("to_code: trials must be >= 1");
    LinearCodeView view;
    view.length = s.size();
    view.generator = generator_rows(s);
    view.rank = gf2_rank(view.generator);
    view.weights_exact = false;
    view.min_weight = view.length;
    view.max_weight = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        const std::size_t w = weight_from_sum(view.length, signed_sum(s, draw_nonempty(s.n, src)));
        view.min_weight = std::min(view.min_weight, w);
        view.max_weight = std::max(view.max_weight, w);
    }
    return view;
}

BitVector codeword_for(const LinearCodeView& code, const IndexSet& t) {
    if (t.dimension() != code.generator.size()) throw DimensionError("codeword_for: T dimension differs from rank bound");
    BitVector c(code.length);
    for (std::size_t i : t.members()) c ^= code.generator[i - 1];
    return c;
}

std::size_t gf2_rank(std::vector<BitVector> rows) {
    std::size_t rank = 0;
    if (rows.empty()) return 0;
    const std::size_t len = rows.front().size();
    for (std::size_t col = 1; col <= len && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && rows[r].get(col)) rows[r] ^= rows[rank];
        }
        ++rank;
    }
    return rank;
}

}  // namespace smallbias
