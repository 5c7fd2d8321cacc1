#pragma once

#include <cstdint>
#include <vector>

namespace zsindex {

// Least nonnegative residue together with its modulus.
struct Residue {
    long long value = 0;
    long long modulus = 1;
    bool operator==(const Residue&) const = default;
};

struct ExtGcd {
    long long g;  // gcd(a, b) >= 0
    long long u;  // u*a + v*b == g
    long long v;
};

// x mod y in [0, y-1], correct for negative x; rejects y <= 0.
Residue residue(long long x, long long y);

long long gcd_ll(long long a, long long b);

ExtGcd ext_gcd(long long a, long long b);

// Inverse of x in (Z/n)*; rejects gcd(x, n) > 1. mod_inverse(x, 1) == 0,
// the only residue mod 1.
Residue mod_inverse(long long x, long long n);

// Moebius function by trial-division factorization.
int mobius(long long d);

// All divisors of n, ascending. Trial division; moduli here are small.
std::vector<long long> divisors(long long n);

// Units of Z/n, i.e. integers in [1, n-1] coprime to n, ascending.
// Rejects n < 2.
std::vector<long long> units(long long n);

// Euler totient via factorization; used as an independent cross-check
// for units().
long long totient(long long n);

bool is_prime(long long n);

}  // namespace zsindex
