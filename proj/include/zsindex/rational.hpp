#pragma once

#include <compare>
#include <string>

#include "zsindex/bigint.hpp"

namespace zsindex {

// Exact rational number, always in lowest terms with a positive
// denominator. Zero is stored as 0/1. Equality of values is therefore
// structural equality, which is what makes these usable as exact
// grouping keys.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const;

    BigInt floor() const;  // largest integer <= value

    // "p/q" in lowest terms, q > 0; zero prints as "0/1"
    std::string to_string() const;

private:
    BigInt num_;
    BigInt den_;
    void normalize();
};

}  // namespace zsindex
