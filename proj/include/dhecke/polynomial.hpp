#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dhecke {

/// Univariate polynomial in q with rational coefficients, stored in
/// ascending degree with no trailing zeros (the zero polynomial is empty).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<mpq_class> coeffs);
    Polynomial(long c);  // NOLINT: constants convert implicitly

    static Polynomial monomial(const mpq_class& c, std::size_t degree);
    static Polynomial q() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Lowest power of q with a nonzero coefficient; 0 for the zero polynomial.
    std::size_t valuation() const;
    const mpq_class& lead() const { return coeffs_.back(); }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }
    mpq_class coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : mpq_class(0); }

    bool is_monomial() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const mpq_class& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const mpq_class& c) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Multiply by q^k.
    Polynomial shifted_up(std::size_t k) const;
    /// Divide by q^k; the low k coefficients must be zero.
    Polynomial shifted_down(std::size_t k) const;

    /// Euclidean division; throws std::domain_error on a zero divisor.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
    /// Monic gcd (zero only when both inputs are zero).
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);

    Polynomial monic() const;
    mpq_class evaluate(const mpq_class& x) const;

    /// Coefficients scaled to coprime integers, descending-degree text such as "3q^2-q+1".
    std::string to_string() const;

private:
    void trim();
    std::vector<mpq_class> coeffs_;
};

/// Render integer coefficients (ascending) as a polynomial in q, descending degree.
std::string format_integer_poly(const std::vector<mpz_class>& ascending);

}  // namespace dhecke
