#include "zsindex/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace zsindex {

Residue residue(long long x, long long y) {
    if (y <= 0) throw std::invalid_argument("residue: modulus must be positive");
    long long r = x % y;
    if (r < 0) r += y;
    return {r, y};
}

long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

ExtGcd ext_gcd(long long a, long long b) {
    // invariant: r0 = u0*a + v0*b, r1 = u1*a + v1*b
    long long r0 = a, r1 = b;
    long long u0 = 1, v0 = 0, u1 = 0, v1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long u2 = u0 - q * u1;
        long long v2 = v0 - q * v1;
        r0 = r1; r1 = r2;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    if (r0 < 0) {
        r0 = -r0;
        u0 = -u0;
        v0 = -v0;
    }
    return {r0, u0, v0};
}

Residue mod_inverse(long long x, long long n) {
    if (n <= 0) throw std::invalid_argument("mod_inverse: modulus must be positive");
    if (n == 1) return {0, 1};
    long long xr = residue(x, n).value;
    ExtGcd e = ext_gcd(xr, n);
    if (e.g != 1) throw std::domain_error("mod_inverse: argument not invertible");
    return residue(e.u, n);
}

int mobius(long long d) {
    if (d < 1) throw std::invalid_argument("mobius: argument must be positive");
    int factors = 0;
    for (long long p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            d /= p;
            if (d % p == 0) return 0;
            ++factors;
        }
    }
    if (d > 1) ++factors;
    return (factors & 1) ? -1 : 1;
}

std::vector<long long> divisors(long long n) {
    if (n < 1) throw std::invalid_argument("divisors: argument must be positive");
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<long long> units(long long n) {
    if (n < 2) throw std::invalid_argument("units: modulus must be at least 2");
    std::vector<long long> us;
    for (long long x = 1; x < n; ++x) {
        if (gcd_ll(x, n) == 1) us.push_back(x);
    }
    return us;
}

long long totient(long long n) {
    if (n < 1) throw std::invalid_argument("totient: argument must be positive");
    long long phi = n;
    long long m = n;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            phi -= phi / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) phi -= phi / m;
    return phi;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) return false;
    }
    return true;
}

}  // namespace zsindex
