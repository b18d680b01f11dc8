#include "dhecke/field.hpp"

#include <array>
#include <stdexcept>

namespace dhecke {

ModP ModP::pow(std::uint64_t e) const {
    ModP base = *this;
    ModP acc{1, p};
    while (e > 0) {
        if (e & 1U) acc *= base;
        base *= base;
        e >>= 1U;
    }
    return acc;
}

ModP ModP::inverse() const {
    if (v == 0) throw DivisionByZero("ModP: inverse of zero");
    return pow(p - 2);
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1U) acc = mulmod(acc, a, m);
        a = mulmod(a, a, m);
        e >>= 1U;
    }
    return acc;
}

ModP residue(const mpq_class& c, std::uint64_t p) {
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    ModP den{mpz_fdiv_ui(c.get_den_mpz_t(), p), p};
    if (den.is_zero()) throw PoleError("coefficient denominator divisible by the field characteristic");
    return ModP{mpz_fdiv_ui(c.get_num_mpz_t(), p), p} / den;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    // These bases are deterministic for all 64-bit n.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FieldConfig FieldConfig::rational(const mpq_class& q0) {
    if (q0 == 0 || q0 == 1 || q0 == -1) throw std::invalid_argument("q0 must not be 0 or +-1");
    FieldConfig cfg;
    cfg.mode = Mode::Rational;
    cfg.q0 = q0;
    return cfg;
}

FieldConfig FieldConfig::prime_field(std::uint64_t p, std::uint64_t q0) {
    if (p <= (std::uint64_t{1} << 30) || p >= (std::uint64_t{1} << 63) || !is_prime(p))
        throw std::invalid_argument("prime field modulus must be a prime in (2^30, 2^63)");
    q0 %= p;
    if (q0 == 0 || q0 == 1 || q0 == p - 1) throw std::invalid_argument("q0 must not be 0 or +-1 mod p");
    FieldConfig cfg;
    cfg.mode = Mode::Prime;
    cfg.prime = p;
    cfg.q0_mod = q0;
    return cfg;
}

FieldConfig FieldConfig::random_prime_field(std::mt19937_64& rng, std::uint64_t p) {
    std::uniform_int_distribution<std::uint64_t> dist(2, p - 2);
    return prime_field(p, dist(rng));
}

FieldConfig FieldConfig::random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(2, 997);
    std::uniform_int_distribution<long> den(1, 97);
    mpq_class q0(num(rng), den(rng));
    q0.canonicalize();
    if (q0 == 1) q0 = 2;
    return rational(q0);
}

FieldConfig parse_scalar(const std::string& text, std::mt19937_64& rng) {
    if (text == "exact") return FieldConfig::exact();
    if (text == "qnum") return FieldConfig::random_rational(rng);
    if (text.rfind("qnum:", 0) == 0) {
        mpq_class q0;
        if (q0.set_str(text.substr(5), 10) != 0) throw std::invalid_argument("cannot parse rational q0 in '" + text + "'");
        q0.canonicalize();
        return FieldConfig::rational(q0);
    }
    if (text == "fp") return FieldConfig::random_prime_field(rng);
    if (text.rfind("fp:", 0) == 0) {
        const std::string digits = text.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 19)
            throw std::invalid_argument("cannot parse prime in '" + text + "'");
        const std::uint64_t p = std::stoull(digits);
        if (p <= (std::uint64_t{1} << 30) || p >= (std::uint64_t{1} << 63) || !is_prime(p))
            throw std::invalid_argument("prime field modulus must be a prime in (2^30, 2^63)");
        return FieldConfig::random_prime_field(rng, p);
    }
    throw std::invalid_argument("unknown scalar mode '" + text + "' (expected exact, qnum:<rational> or fp[:<prime>])");
}

std::string FieldConfig::name() const {
    switch (mode) {
        case Mode::Rational:
            return "qnum:" + q0.get_str();
        case Mode::Prime:
            return "fp:" + std::to_string(prime) + "@" + std::to_string(q0_mod);
        case Mode::Exact:
            break;
    }
    return "exact";
}

mpq_class RationalField::lift(const RationalFunction& a) const {
    mpq_class den = a.denominator().evaluate(q0);
    if (den == 0) throw PoleError("denominator vanishes at q0 = " + q0.get_str());
    mpq_class out = a.numerator().evaluate(q0) / den;
    return out;
}

ModP PrimeField::lift(const RationalFunction& a) const {
    auto eval = [this](const Polynomial& poly) {
        ModP x{q0, p};
        ModP acc{0, p};
        const auto& cs = poly.coeffs();
        for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * x + residue(*it, p);
        return acc;
    };
    ModP den = eval(a.denominator());
    if (den.is_zero()) throw PoleError("denominator vanishes at q0 = " + std::to_string(q0) + " mod p");
    return eval(a.numerator()) / den;
}

Scalar specialize(const RationalFunction& a, const FieldConfig& cfg) {
    return with_field(cfg, [&](const auto& field) -> Scalar { return field.lift(a); });
}

std::string to_string(const Scalar& s) {
    return std::visit([](const auto& x) { return to_string(x); }, s);
}

}  // namespace dhecke
