#include "zsindex/rational.hpp"

#include <stdexcept>

namespace zsindex {

void Rational::normalize() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!(g == BigInt(1))) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    // denominators are positive, so cross-multiplication preserves order
    return num_ * o.den_ <=> o.num_ * den_;
}

BigInt Rational::floor() const {
    auto [q, r] = BigInt::divmod(num_, den_);
    if (r.is_negative()) q = q - BigInt(1);
    return q;
}

std::string Rational::to_string() const {
    return num_.to_string() + "/" + den_.to_string();
}

}  // namespace zsindex
