#pragma once

#include "dhecke/polynomial.hpp"

#include <stdexcept>
#include <string>

namespace dhecke {

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An element of Q(q) in canonical form: gcd(num, den) = 1, den monic,
/// zero stored as 0/1. Equal values have identical representations.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT: constants convert implicitly
    explicit RationalFunction(const mpq_class& c);
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction q() { return RationalFunction(Polynomial::q(), Polynomial(1)); }
    /// q^k for any integer k.
    static RationalFunction q_pow(long k);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const { return RationalFunction(-num_, den_, Normalized{}); }
    RationalFunction& operator+=(const RationalFunction& b);
    RationalFunction& operator-=(const RationalFunction& b);
    RationalFunction& operator*=(const RationalFunction& b);
    RationalFunction& operator/=(const RationalFunction& b);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Throws DivisionByZero for zero.
    RationalFunction inverse() const;

    /// Canonical text "(<numerator>)/(<denominator>)": both sides scaled by one
    /// rational factor to coprime integer coefficients, denominator leading
    /// coefficient positive, descending degree.
    std::string to_string() const;

private:
    struct Normalized {};
    RationalFunction(Polynomial num, Polynomial den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

inline bool is_zero(const RationalFunction& a) { return a.is_zero(); }
inline std::string to_string(const RationalFunction& a) { return a.to_string(); }

}  // namespace dhecke
