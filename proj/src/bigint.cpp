#include "zsindex/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace zsindex {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // careful with LLONG_MIN: negate in unsigned space
    unsigned long long u = v < 0 ? ~static_cast<unsigned long long>(v) + 1ull
                                 : static_cast<unsigned long long>(v);
    while (u) {
        mag_.push_back(static_cast<uint32_t>(u & 0xffffffffull));
        u >>= 32;
    }
}

BigInt BigInt::from_i128(__int128 v) {
    BigInt r;
    if (v == 0) return r;
    r.sign_ = v < 0 ? -1 : 1;
    unsigned __int128 u = v < 0 ? ~static_cast<unsigned __int128>(v) + 1
                                : static_cast<unsigned __int128>(v);
    while (u) {
        r.mag_.push_back(static_cast<uint32_t>(u & 0xffffffffu));
        u >>= 32;
    }
    return r;
}

BigInt BigInt::from_string(std::string_view dec) {
    BigInt r;
    size_t i = 0;
    int sign = 1;
    if (i < dec.size() && (dec[i] == '+' || dec[i] == '-')) {
        if (dec[i] == '-') sign = -1;
        ++i;
    }
    if (i == dec.size()) throw std::invalid_argument("BigInt: empty numeral");
    BigInt ten(10);
    for (; i < dec.size(); ++i) {
        char c = dec[i];
        if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
        r = r * ten + BigInt(c - '0');
    }
    if (sign < 0 && !r.is_zero()) r.sign_ = -1;
    return r;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const auto& lo = a.size() < b.size() ? a : b;
    const auto& hi = a.size() < b.size() ? b : a;
    std::vector<uint32_t> r(hi.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
        uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
        r[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    r[hi.size()] = static_cast<uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// requires |a| >= |b|
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t s = static_cast<int64_t>(a[i]) - (i < b.size() ? b[i] : 0u) - borrow;
        if (s < 0) {
            s += (1ll << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<uint32_t>(s);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t s = static_cast<uint64_t>(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<uint32_t>(s);
            carry = s >> 32;
        }
        r[i + b.size()] += static_cast<uint32_t>(carry);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

size_t BigInt::bit_length(const std::vector<uint32_t>& a) {
    if (a.empty()) return 0;
    size_t bits = (a.size() - 1) * 32;
    uint32_t top = a.back();
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

bool BigInt::get_bit(const std::vector<uint32_t>& a, size_t i) {
    size_t w = i / 32, b = i % 32;
    if (w >= a.size()) return false;
    return (a[w] >> b) & 1u;
}

void BigInt::shl1(std::vector<uint32_t>& a) {
    uint32_t carry = 0;
    for (auto& w : a) {
        uint32_t nc = w >> 31;
        w = (w << 1) | carry;
        carry = nc;
    }
    if (carry) a.push_back(carry);
}

void BigInt::shr1(std::vector<uint32_t>& a) {
    uint32_t carry = 0;
    for (size_t i = a.size(); i-- > 0;) {
        uint32_t nc = a[i] & 1u;
        a[i] = (a[i] >> 1) | (carry << 31);
        carry = nc;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
}

uint32_t BigInt::divmod_small(std::vector<uint32_t>& num, uint32_t den) {
    uint64_t rem = 0;
    for (size_t i = num.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | num[i];
        num[i] = static_cast<uint32_t>(cur / den);
        rem = cur % den;
    }
    while (!num.empty() && num.back() == 0) num.pop_back();
    return static_cast<uint32_t>(rem);
}

// bit-serial long division; operands here are a few limbs at most
void BigInt::divmod_mag(const std::vector<uint32_t>& num, const std::vector<uint32_t>& den,
                        std::vector<uint32_t>& quot, std::vector<uint32_t>& rem) {
    quot.clear();
    rem.clear();
    if (den.empty()) throw std::domain_error("BigInt: division by zero");
    if (cmp_mag(num, den) < 0) {
        rem = num;
        return;
    }
    if (den.size() == 1) {
        quot = num;
        uint32_t r = divmod_small(quot, den[0]);
        if (r) rem.push_back(r);
        return;
    }
    size_t nbits = bit_length(num);
    quot.assign((nbits + 31) / 32, 0);
    for (size_t i = nbits; i-- > 0;) {
        shl1(rem);
        if (get_bit(num, i)) {
            if (rem.empty()) rem.push_back(1);
            else rem[0] |= 1u;
        }
        if (cmp_mag(rem, den) >= 0) {
            rem = sub_mag(rem, den);
            quot[i / 32] |= (1u << (i % 32));
        }
    }
    while (!quot.empty() && quot.back() == 0) quot.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.sign_ = sign_;
        r.mag_ = add_mag(mag_, o.mag_);
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) return r;
        if (c > 0) {
            r.sign_ = sign_;
            r.mag_ = sub_mag(mag_, o.mag_);
        } else {
            r.sign_ = o.sign_;
            r.mag_ = sub_mag(o.mag_, mag_);
        }
    }
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    if (sign_ == 0 || o.sign_ == 0) return r;
    r.sign_ = sign_ * o.sign_;
    r.mag_ = mul_mag(mag_, o.mag_);
    return r;
}

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& num, const BigInt& den) {
    if (den.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    BigInt q, r;
    divmod_mag(num.mag_, den.mag_, q.mag_, r.mag_);
    q.sign_ = q.mag_.empty() ? 0 : num.sign_ * den.sign_;
    r.sign_ = r.mag_.empty() ? 0 : num.sign_;
    return {q, r};
}

BigInt BigInt::operator/(const BigInt& o) const { return divmod(*this, o).first; }
BigInt BigInt::operator%(const BigInt& o) const { return divmod(*this, o).second; }

bool BigInt::operator==(const BigInt& o) const {
    return sign_ == o.sign_ && mag_ == o.mag_;
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ <=> o.sign_;
    int c = cmp_mag(mag_, o.mag_) * (sign_ < 0 ? -1 : 1);
    return c <=> 0;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    // binary gcd on magnitudes
    std::vector<uint32_t> x = a.mag_, y = b.mag_;
    if (x.empty()) {
        BigInt r = b.abs();
        return r;
    }
    if (y.empty()) return a.abs();
    size_t shift = 0;
    while (!get_bit(x, 0) && !get_bit(y, 0)) {
        shr1(x);
        shr1(y);
        ++shift;
    }
    while (!x.empty() && !get_bit(x, 0)) shr1(x);
    while (!y.empty()) {
        while (!y.empty() && !get_bit(y, 0)) shr1(y);
        if (!y.empty() && cmp_mag(x, y) > 0) std::swap(x, y);
        if (!y.empty()) y = sub_mag(y, x);
    }
    BigInt r;
    r.mag_ = x;
    for (size_t i = 0; i < shift; ++i) shl1(r.mag_);
    r.sign_ = r.mag_.empty() ? 0 : 1;
    return r;
}

bool BigInt::fits_i64() const {
    if (mag_.size() > 2) return false;
    unsigned long long u = 0;
    for (size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
    if (sign_ >= 0) return u <= 0x7fffffffffffffffull;
    return u <= 0x8000000000000000ull;
}

long long BigInt::to_i64() const {
    if (!fits_i64()) throw std::overflow_error("BigInt: does not fit in 64 bits");
    unsigned long long u = 0;
    for (size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
    if (sign_ < 0) return static_cast<long long>(~u + 1ull);  // covers LLONG_MIN
    return static_cast<long long>(u);
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<uint32_t> m = mag_;
    std::string out;
    while (!m.empty()) {
        uint32_t chunk = divmod_small(m, 1000000000u);
        for (int i = 0; i < 9; ++i) {
            out.push_back(static_cast<char>('0' + chunk % 10));
            chunk /= 10;
        }
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    if (sign_ < 0) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace zsindex
