#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zsindex {

// Signed arbitrary-precision integer, base 2^32 magnitude limbs.
// Sizes in this project stay small (a handful of limbs), so all
// algorithms are the simple schoolbook ones.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    static BigInt from_i128(__int128 v);
    static BigInt from_string(std::string_view dec);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_odd() const { return sign_ != 0 && (mag_[0] & 1u); }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt operator/(const BigInt& o) const;  // truncates toward zero
    BigInt operator%(const BigInt& o) const;  // sign follows dividend
    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    // quotient truncated toward zero, remainder with dividend's sign
    static std::pair<BigInt, BigInt> divmod(const BigInt& num, const BigInt& den);

    bool operator==(const BigInt& o) const;
    std::strong_ordering operator<=>(const BigInt& o) const;

    BigInt abs() const;
    static BigInt gcd(const BigInt& a, const BigInt& b);  // >= 0

    bool fits_i64() const;
    long long to_i64() const;  // throws std::overflow_error if out of range
    std::string to_string() const;

private:
    int sign_ = 0;                   // -1, 0, +1
    std::vector<uint32_t> mag_;      // little-endian, no leading zero limbs

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& num, const std::vector<uint32_t>& den,
                           std::vector<uint32_t>& quot, std::vector<uint32_t>& rem);
    static uint32_t divmod_small(std::vector<uint32_t>& num, uint32_t den);  // in-place, returns remainder
    static size_t bit_length(const std::vector<uint32_t>& a);
    static bool get_bit(const std::vector<uint32_t>& a, size_t i);
    static void shl1(std::vector<uint32_t>& a);
    static void shr1(std::vector<uint32_t>& a);
};

}  // namespace zsindex
