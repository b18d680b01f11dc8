#pragma once

#include "dhecke/rational_function.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <variant>

namespace dhecke {

/// Raised when a specialization q -> q0 hits a vanishing denominator.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Residue modulo a prime below 2^63; every element carries its modulus.
struct ModP {
    std::uint64_t v = 0;
    std::uint64_t p = 0;

    ModP() = default;
    ModP(std::uint64_t value, std::uint64_t modulus) : v(value % modulus), p(modulus) {}

    bool is_zero() const { return v == 0; }
    ModP operator-() const { return {v == 0 ? 0 : p - v, p}; }
    ModP& operator+=(const ModP& b) {
        v += b.v;
        if (v >= p) v -= p;
        return *this;
    }
    ModP& operator-=(const ModP& b) { return *this += -b; }
    ModP& operator*=(const ModP& b) {
        v = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v) * b.v % p);
        return *this;
    }
    ModP& operator/=(const ModP& b) { return *this *= b.inverse(); }
    ModP pow(std::uint64_t e) const;
    /// Throws DivisionByZero for zero.
    ModP inverse() const;

    friend ModP operator+(ModP a, const ModP& b) { return a += b; }
    friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
    friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
    friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
    friend bool operator==(const ModP& a, const ModP& b) { return a.v == b.v && a.p == b.p; }
};

inline bool is_zero(const ModP& a) { return a.is_zero(); }
inline std::string to_string(const ModP& a) { return std::to_string(a.v); }
inline bool is_zero(const mpq_class& a) { return sgn(a) == 0; }
inline std::string to_string(const mpq_class& a) { return a.get_str(); }

bool is_prime(std::uint64_t n);

/// Largest prime below 2^61; the default modulus for prime-field runs.
inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;

/// How the symbol q is realized: symbolically, at a rational point, or at a
/// residue modulo a large prime.
struct FieldConfig {
    enum class Mode { Exact, Rational, Prime };
    Mode mode = Mode::Exact;
    mpq_class q0 = 0;          // Rational mode
    std::uint64_t prime = 0;   // Prime mode
    std::uint64_t q0_mod = 0;  // Prime mode

    static FieldConfig exact() { return {}; }
    /// Throws std::invalid_argument for q0 in {0, 1, -1}.
    static FieldConfig rational(const mpq_class& q0);
    /// Throws std::invalid_argument unless p is a prime above 2^30 and q0 is not 0 or +-1 mod p.
    static FieldConfig prime_field(std::uint64_t p, std::uint64_t q0);
    /// Prime mode with q0 drawn from the generator.
    static FieldConfig random_prime_field(std::mt19937_64& rng, std::uint64_t p = kDefaultPrime);
    /// Rational mode with q0 = a/b, 2 <= a <= 997, 1 <= b <= 97, drawn from the generator.
    static FieldConfig random_rational(std::mt19937_64& rng);

    std::string name() const;
};

/// "exact", "qnum:<rational>", "qnum", "fp" or "fp:<prime>". A missing q0 or
/// prime q0 is drawn from rng. Throws std::invalid_argument.
FieldConfig parse_scalar(const std::string& text, std::mt19937_64& rng);

/// Q(q) itself.
struct ExactField {
    using value_type = RationalFunction;
    value_type lift(const RationalFunction& a) const { return a; }
    value_type zero() const { return {}; }
    value_type one() const { return 1; }
};

/// Q with q evaluated at q0.
struct RationalField {
    using value_type = mpq_class;
    mpq_class q0;
    value_type lift(const RationalFunction& a) const;
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
};

/// F_p with q evaluated at q0.
struct PrimeField {
    using value_type = ModP;
    std::uint64_t p = kDefaultPrime;
    std::uint64_t q0 = 2;
    value_type lift(const RationalFunction& a) const;
    value_type zero() const { return {0, p}; }
    value_type one() const { return {1, p}; }
};

using Scalar = std::variant<RationalFunction, mpq_class, ModP>;

/// Ring homomorphism Q(q) -> field selected by cfg. The input is already in
/// lowest terms, so removable singularities never raise; a genuine pole
/// throws PoleError.
Scalar specialize(const RationalFunction& a, const FieldConfig& cfg);
std::string to_string(const Scalar& s);

/// Calls fn with the field object matching cfg.
template <class Fn>
decltype(auto) with_field(const FieldConfig& cfg, Fn&& fn) {
    switch (cfg.mode) {
        case FieldConfig::Mode::Rational:
            return fn(RationalField{cfg.q0});
        case FieldConfig::Mode::Prime:
            return fn(PrimeField{cfg.prime, cfg.q0_mod});
        case FieldConfig::Mode::Exact:
            break;
    }
    return fn(ExactField{});
}

}  // namespace dhecke
