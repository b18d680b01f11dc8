#include "dhecke/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dhecke {

Polynomial::Polynomial(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

Polynomial::Polynomial(long c) {
    if (c != 0) coeffs_.emplace_back(c);
}

Polynomial Polynomial::monomial(const mpq_class& c, std::size_t degree) {
    Polynomial p;
    if (c == 0) return p;
    p.coeffs_.assign(degree + 1, mpq_class(0));
    p.coeffs_[degree] = c;
    return p;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t Polynomial::valuation() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return k;
    return 0;
}

bool Polynomial::is_monomial() const {
    return !coeffs_.empty() && valuation() + 1 == coeffs_.size();
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), mpq_class(0));
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), mpq_class(0));
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const mpq_class& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    Polynomial p;
    p.coeffs_ = std::move(out);
    p.trim();
    return p;
}

Polynomial Polynomial::shifted_up(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    Polynomial p;
    p.coeffs_.assign(k, mpq_class(0));
    p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return p;
}

Polynomial Polynomial::shifted_down(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    if (valuation() < k) throw std::domain_error("Polynomial::shifted_down: not divisible by q^k");
    Polynomial p;
    p.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end());
    return p;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("Polynomial::divmod: division by zero polynomial");
    Polynomial rem = a;
    if (rem.degree() < b.degree()) return {Polynomial{}, rem};
    std::vector<mpq_class> quot(static_cast<std::size_t>(rem.degree() - b.degree() + 1), mpq_class(0));
    const mpq_class inv_lead = 1 / b.lead();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
        mpq_class factor = rem.lead() * inv_lead;
        quot[shift] = factor;
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k) rem.coeffs_[k + shift] -= factor * b.coeffs_[k];
        rem.trim();
    }
    return {Polynomial(std::move(quot)), rem};
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    Polynomial p = *this;
    p *= mpq_class(1 / lead());
    return p;
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    // Powers of q factor out separately; most denominators here are pure q^k.
    const std::size_t common = std::min(a.valuation(), b.valuation());
    Polynomial x = a.shifted_down(a.valuation());
    Polynomial y = b.shifted_down(b.valuation());
    if (x.degree() == 0 || y.degree() == 0) return monomial(1, common);
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic().shifted_up(common);
}

mpq_class Polynomial::evaluate(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string format_integer_poly(const std::vector<mpz_class>& ascending) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = ascending.size(); k-- > 0;) {
        const mpz_class& c = ascending[k];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        if (mag != 1 || k == 0) os << mag.get_str();
        if (k >= 1) os << 'q';
        if (k >= 2) os << '^' << k;
        first = false;
    }
    return first ? "0" : os.str();
}

std::string Polynomial::to_string() const {
    mpz_class denom_lcm = 1;
    for (const auto& c : coeffs_) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> ints;
    ints.reserve(coeffs_.size());
    for (const auto& c : coeffs_) ints.emplace_back(c.get_num() * (denom_lcm / c.get_den()));
    return format_integer_poly(ints);
}

}  // namespace dhecke
