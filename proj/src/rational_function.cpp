#include "dhecke/rational_function.hpp"

namespace dhecke {

RationalFunction::RationalFunction(const mpq_class& c) : num_(Polynomial::monomial(c, 0)), den_(1) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("RationalFunction: zero denominator");
    normalize();
}

RationalFunction RationalFunction::q_pow(long k) {
    if (k >= 0) return {Polynomial::monomial(1, static_cast<std::size_t>(k)), Polynomial(1)};
    return {Polynomial(1), Polynomial::monomial(1, static_cast<std::size_t>(-k))};
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    if (den_.degree() > 0) {
        Polynomial g = Polynomial::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Polynomial::divmod(num_, g).first;
            den_ = Polynomial::divmod(den_, g).first;
        }
    }
    if (den_.lead() != 1) {
        mpq_class inv = 1 / den_.lead();
        num_ *= inv;
        den_ *= inv;
    }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& b) {
    if (b.is_zero()) return *this;
    if (is_zero()) return *this = b;
    if (den_ == b.den_) {
        num_ += b.num_;
    } else {
        num_ = num_ * b.den_ + b.num_ * den_;
        den_ = den_ * b.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& b) { return *this += -b; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& b) {
    if (is_zero()) return *this;
    if (b.is_zero()) return *this = RationalFunction{};
    num_ = num_ * b.num_;
    den_ = den_ * b.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& b) { return *this *= b.inverse(); }

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw DivisionByZero("RationalFunction: inverse of zero");
    return {den_, num_};
}

std::string RationalFunction::to_string() const {
    // One rational scale brings every coefficient of both sides to coprime integers.
    mpz_class denom_lcm = 1;
    for (const auto* p : {&num_, &den_})
        for (const auto& c : p->coeffs()) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> num_int;
    std::vector<mpz_class> den_int;
    for (const auto& c : num_.coeffs()) num_int.emplace_back(c.get_num() * (denom_lcm / c.get_den()));
    for (const auto& c : den_.coeffs()) den_int.emplace_back(c.get_num() * (denom_lcm / c.get_den()));
    mpz_class content = 0;
    for (const auto* v : {&num_int, &den_int})
        for (const auto& c : *v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    for (auto* v : {&num_int, &den_int})
        for (auto& c : *v) c /= content;
    return "(" + format_integer_poly(num_int) + ")/(" + format_integer_poly(den_int) + ")";
}

}  // namespace dhecke
