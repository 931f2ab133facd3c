// legendre.cpp

#include "smallbias/legendre.hpp"

#include "smallbias/numeric.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace smallbias {

namespace {

using Poly = std::vector<std::uint64_t>;
__extension__ typedef unsigned __int128 uint128;

Poly reduced(std::span<const std::uint64_t> coeffs, std::uint64_t q) {
    Poly p;
    p.reserve(coeffs.size());
    for (std::uint64_t c : coeffs) p.push_back(c % q);
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

Poly derivative(const Poly& p, std::uint64_t q) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(mulmod(p[i], i % q, q));
    while (!d.empty() && d.back() == 0) d.pop_back();
    return d;
}

// a mod b over F_q, b nonzero.
Poly poly_rem(Poly a, const Poly& b, std::uint64_t q) {
    const std::uint64_t lead_inv = powmod(b.back(), q - 2, q);
    while (a.size() >= b.size()) {
        const std::uint64_t factor = mulmod(a.back(), lead_inv, q);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = (a[shift + i] + q - mulmod(factor, b[i], q)) % q;
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

Poly poly_gcd_mod(Poly a, Poly b, std::uint64_t q) {
    while (!b.empty()) {
        Poly r = poly_rem(a, b, q);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// χ = +1 gives bit 0; χ = -1 and χ = 0 give bit 1.
bool symbol_bit(std::uint64_t value, const PrimeField& field) { return legendre_symbol(value, field) != 1; }

void require_unit_interval(double epsilon, double delta) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
    if (!(delta > 0.0 && delta <= 1.0)) throw std::invalid_argument("delta must lie in (0, 1]");
}

std::string join(const std::vector<std::uint64_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

}  // namespace

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q) noexcept {
    return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % q);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t q) noexcept {
    std::uint64_t result = 1 % q;
    base %= q;
    while (e != 0) {
        if (e & 1) result = mulmod(result, base, q);
        base = mulmod(base, base, q);
        e >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t x) noexcept {
    static constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (x < 2) return false;
    for (std::uint64_t p : bases) {
        if (x % p == 0) return x == p;
    }
    std::uint64_t d = x - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : bases) {
        std::uint64_t y = powmod(a, d, x);
        if (y == 1 || y == x - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            y = mulmod(y, y, x);
            if (y == x - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t q) : q_(q) {
    if (q < 3 || !is_prime(q)) throw std::invalid_argument(std::to_string(q) + " is not an odd prime");
}

PrimeField next_prime(std::uint64_t x) {
    if (x < 3) throw std::invalid_argument("next_prime: argument must be at least 3");
    if (x >= (std::uint64_t{1} << 63)) throw std::invalid_argument("next_prime: argument must be below 2^63");
    std::uint64_t c = x | 1;
    while (!is_prime(c)) c += 2;
    return PrimeField(c);
}

int legendre_symbol(std::uint64_t x, const PrimeField& field) {
    const std::uint64_t q = field.modulus();
    if (x >= q) throw std::invalid_argument("legendre_symbol: residue out of range");
    if (x == 0) return 0;
    const std::uint64_t r = powmod(x, (q - 1) / 2, q);
    return r == 1 ? 1 : -1;
}

long poly_degree_mod(std::span<const std::uint64_t> coeffs, std::uint64_t q) {
    return static_cast<long>(reduced(coeffs, q).size()) - 1;
}

double weil_sum(std::span<const std::uint64_t> coeffs, const PrimeField& field) {
    const std::uint64_t q = field.modulus();
    if (q > kMaxWeilModulus) throw std::invalid_argument("weil_sum: modulus too large for brute force");
    const Poly p = reduced(coeffs, q);
    if (p.size() < 2) throw std::invalid_argument("weil_sum: polynomial degree must be at least 1");

    std::vector<std::int8_t> chi(q, -1);
    chi[0] = 0;
    for (std::uint64_t z = 1; z <= (q - 1) / 2; ++z) chi[mulmod(z, z, q)] = 1;

    std::int64_t sum = 0;
    for (std::uint64_t x = 0; x < q; ++x) {
        std::uint64_t v = 0;
        for (std::size_t i = p.size(); i-- > 0;) v = (mulmod(v, x, q) + p[i]) % q;
        sum += chi[v];
    }
    return std::abs(static_cast<double>(sum)) / static_cast<double>(q);
}

bool is_squarefree(std::span<const std::uint64_t> coeffs, const PrimeField& field) {
    const std::uint64_t q = field.modulus();
    const Poly p = reduced(coeffs, q);
    if (p.size() < 2) return false;
    const Poly d = derivative(p, q);
    if (d.empty()) return false;
    return poly_gcd_mod(p, d, q).size() == 1;
}

std::uint64_t aghp_modulus(std::size_t n, double epsilon) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
    const double dn = static_cast<double>(n);
    const std::size_t target = ceil_snapped(dn * dn / (epsilon * epsilon));
    return next_prime(std::max<std::uint64_t>(3, target)).modulus();
}

CandidateSet aghp_set(std::size_t n, double epsilon) {
    const PrimeField field(aghp_modulus(n, epsilon));
    const std::uint64_t q = field.modulus();
    CandidateSet s;
    s.n = n;
    s.method = "aghp";
    s.random_bits = 0;
    s.elements.reserve(q);
    for (std::uint64_t x = 0; x < q; ++x) {
        BitVector w(n);
        for (std::size_t i = 1; i <= n; ++i) {
            if (symbol_bit((x + i) % q, field)) w.set(i);
        }
        s.elements.push_back(std::move(w));
    }
    s.params.emplace_back("epsilon", format_real(epsilon));
    s.params.emplace_back("q", std::to_string(q));
    return s;
}

std::size_t shift_set_size(std::size_t n, double epsilon, double delta) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    require_unit_interval(epsilon, delta);
    return ceil_snapped(6.0 * static_cast<double>(n) / (delta * epsilon * epsilon));
}

std::uint64_t shift_modulus(std::size_t ell) {
    const double e_ell = std::numbers::e * static_cast<double>(ell);
    return next_prime(std::max<std::uint64_t>(3, ceil_snapped(4.0 * e_ell * e_ell))).modulus();
}

ShiftParams derive_shift_params(std::size_t n, double epsilon, double delta, EntropySource& src) {
    ShiftParams p;
    p.n = n;
    p.epsilon = epsilon;
    p.delta = delta;
    p.ell = shift_set_size(n, epsilon, delta);
    p.q = shift_modulus(p.ell);
    if (p.ell >= p.q) throw std::logic_error("evaluation set does not fit in F_q");

    const std::uint64_t before = src.bits_consumed();
    // x + s ≡ 0 for some x ∈ {1..ell} exactly when s ∈ [q - ell, q - 1].
    const std::uint64_t forbidden_from = p.q - p.ell;
    for (p.attempts = 1; p.attempts <= kMaxShiftAttempts; ++p.attempts) {
        p.shifts.clear();
        bool collision = false;
        for (std::size_t j = 0; j < n; ++j) {
            const std::uint64_t s = src.draw_mod(p.q);
            collision = collision || s >= forbidden_from;
            p.shifts.push_back(s);
        }
        if (!collision) {
            p.random_bits = src.bits_consumed() - before;
            return p;
        }
    }
    throw ShiftCollisionError("no collision-free shift vector after " + std::to_string(kMaxShiftAttempts) + " attempts");
}

CandidateSet shifted_legendre_set(const ShiftParams& params) {
    if (params.shifts.size() != params.n) throw std::invalid_argument("shift vector length differs from n");
    const PrimeField field(params.q);
    const std::uint64_t q = params.q;
    CandidateSet s;
    s.n = params.n;
    s.method = "legendre-shift";
    s.random_bits = params.random_bits;
    s.elements.reserve(params.ell);
    for (std::uint64_t x = 1; x <= params.ell; ++x) {
        BitVector w(params.n);
        for (std::size_t j = 1; j <= params.n; ++j) {
            const std::uint64_t v = (x + params.shifts[j - 1] % q) % q;
            if (v == 0) throw ShiftCollisionError("x + s_j vanishes for x = " + std::to_string(x));
            if (symbol_bit(v, field)) w.set(j);
        }
        s.elements.push_back(std::move(w));
    }
    s.params.emplace_back("epsilon", format_real(params.epsilon));
    s.params.emplace_back("delta", format_real(params.delta));
    s.params.emplace_back("ell", std::to_string(params.ell));
    s.params.emplace_back("q", std::to_string(q));
    s.params.emplace_back("shifts", join(params.shifts));
    s.params.emplace_back("shift_attempts", std::to_string(params.attempts));
    return s;
}

CandidateSet construct_legendre_shift(std::size_t n, double epsilon, double delta, EntropySource& src) {
    CandidateSet s = shifted_legendre_set(derive_shift_params(n, epsilon, delta, src));
    s.params.emplace_back("seed", src.seed_hex());
    s.params.emplace_back("generator", std::string(kGeneratorId));
    return s;
}

double moment_bound(std::size_t ell, double q, std::size_t k, std::size_t t_size) {
    if (k < 1 || t_size < 1) throw std::invalid_argument("moment_bound: k and |T| must be at least 1");
    const double dk = static_cast<double>(k);
    const double matching = std::numbers::sqrt2 * std::pow(2.0 * dk / (std::numbers::e * static_cast<double>(ell)), dk);
    const double weil = std::pow(2.0 * dk / std::sqrt(q), static_cast<double>(t_size));
    return matching + weil;
}

double markov_tail(std::size_t ell, double q, std::size_t k, std::size_t t_size, double epsilon) {
    return moment_bound(ell, q, k, t_size) / std::pow(epsilon, 2.0 * static_cast<double>(k));
}

double simplified_tail(std::size_t ell, std::size_t t_size, double epsilon) {
    const double w = static_cast<double>(t_size);
    return 2.0 * std::pow(2.0 * w / (std::numbers::e * static_cast<double>(ell) * epsilon * epsilon), w);
}

UnionBound union_bound(std::size_t n, std::size_t ell, double epsilon, double delta) {
    require_unit_interval(epsilon, delta);
    if (ell < 1) throw std::invalid_argument("union_bound: ell must be positive");
    UnionBound u;
    const double dn = static_cast<double>(n);
    u.ratio = 2.0 * dn / (static_cast<double>(ell) * epsilon * epsilon);
    double power = 1.0;
    for (std::size_t w = 1; w <= n; ++w) {
        power *= u.ratio;
        u.series += power;
    }
    u.series *= 2.0;
    u.closed_form = (2.0 * delta / 3.0) / (1.0 - delta / 3.0);
    u.divergent = u.ratio >= 1.0;
    u.below_recommended = static_cast<double>(ell) < 6.0 * dn / (delta * epsilon * epsilon) * (1.0 - 1e-12);
    return u;
}

MatchingProbability matching_probability(std::size_t k, std::size_t ell) {
    if (k < 1 || ell < 1) throw std::invalid_argument("matching_probability: k and ell must be positive");
    MatchingProbability m;
    const double l = static_cast<double>(ell);
    m.exact = 1.0;
    for (std::size_t i = 1; i <= k; ++i) m.exact *= static_cast<double>(2 * i - 1) / l;
    const double dk = static_cast<double>(k);
    m.bound = std::numbers::sqrt2 * std::pow(2.0 * dk / (std::numbers::e * l), dk);
    return m;
}

}  // namespace smallbias
