#pragma once

// Independent reference implementations used only by tests. They follow
// the definitions as literally as possible and deliberately share no
// code with the library paths they check.

#include <array>
#include <vector>

#include "zsindex/arith.hpp"
#include "zsindex/dedekind.hpp"
#include "zsindex/rational.hpp"

namespace oracles {

// s(h,k) as the literal sawtooth sum over r = 1..k-1.
inline zsindex::Rational s_sawtooth(long long h, long long k) {
    zsindex::Rational acc(0);
    for (long long r = 1; r < k; ++r) {
        acc += zsindex::sawtooth(zsindex::Rational(r, k)) *
               zsindex::sawtooth(zsindex::Rational(h * r, k));
    }
    return acc;
}

// t(h,k) as the literal sum over 1 <= r <= k with gcd(r,k) = 1, keeping
// the r = k term (it only survives for k = 1).
inline zsindex::Rational t_literal(long long h, long long k) {
    zsindex::Rational acc(0);
    for (long long r = 1; r <= k; ++r) {
        if (zsindex::gcd_ll(r, k) != 1) continue;
        zsindex::Rational hr(h * r, k);
        acc += zsindex::Rational(r, k) *
               (hr - zsindex::Rational(hr.floor(), zsindex::BigInt(1)) - zsindex::Rational(1, 2));
    }
    return acc;
}

// Quadruple loop over sorted tuples with a bitmask subset check; no
// shortcuts shared with the library's enumeration.
inline std::vector<std::array<long long, 4>> naive_minimal4(long long n) {
    std::vector<std::array<long long, 4>> out;
    for (long long a = 1; a < n; ++a) {
        for (long long b = a; b < n; ++b) {
            for (long long c = b; c < n; ++c) {
                for (long long d = c; d < n; ++d) {
                    const long long e[4] = {a, b, c, d};
                    long long total = 0;
                    for (long long x : e) total += x;
                    if (total % n != 0) continue;
                    bool minimal = true;
                    for (unsigned mask = 1; mask < 15u && minimal; ++mask) {
                        long long sum = 0;
                        for (int i = 0; i < 4; ++i) {
                            if (mask & (1u << i)) sum += e[i];
                        }
                        if (sum % n == 0) minimal = false;
                    }
                    if (minimal) out.push_back({a, b, c, d});
                }
            }
        }
    }
    return out;
}

}  // namespace oracles
