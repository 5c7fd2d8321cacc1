#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zsindex/rational.hpp"

namespace zsindex {

/// Sawtooth ((x)): x - floor(x) - 1/2 for non-integer x, 0 at integers.
Rational sawtooth(const Rational& x);

/// Classical Dedekind sum s(h,k) = sum_{r=1}^{k-1} ((r/k))((hr/k)),
/// computed term by term over a common denominator of 4k^2.
/// Accepts any h coprime to k; s(h,k) = s(h mod k, k). s(.,1) = 0.
Rational s_direct(long long h, long long k);

/// Same value as s_direct, via the reciprocity law
///   s(h,k) + s(k,h) = -1/4 + (h/k + k/h + 1/(hk))/12
/// applied along the Euclidean remainder chain; O(log k) steps.
Rational s_fast(long long h, long long k);

/// The sum with the r = k term included, which contributes exactly -1/2:
/// s_paper_literal(h,k) = s_direct(h,k) - 1/2.
Rational s_paper_literal(long long h, long long k);

/// Coprime-restricted sum t(h,k) = sum over 1 <= r <= k with (r,k)=1 of
/// (r/k)(hr/k - floor(hr/k) - 1/2). For k > 1 only 0 < r < k contribute;
/// t(h,1) = -1/2 (the single r = 1 = k term).
Rational t_direct(long long h, long long k);

/// Same value as t_direct via Moebius convolution over divisors of k:
///   t(h,k) = sum_{d|k} mu(d) * (s(h mod (k/d), k/d) - 1/2).
Rational t_mobius(long long h, long long k);

struct CongruenceCheck {
    long long lhs;  // (12k * s(h,k)) mod k
    long long rhs;  // (h + h^-1) mod k
    bool holds;
};

/// 12k*s(h,k) is an integer congruent to h + h^-1 (mod k); k >= 2.
CongruenceCheck dedekind_congruence(long long h, long long k);

enum class SumKind { S, T };

struct CollisionClass {
    Rational value;
    std::vector<long long> members;  // ascending units mod k
};

/// Units of Z/k grouped by exactly equal sum value. Classes are ordered
/// by smallest member; class values are pairwise distinct.
struct CollisionTable {
    long long k;
    SumKind kind;
    std::vector<CollisionClass> classes;
};

/// Parallel over units; output independent of the thread count.
CollisionTable collision_classes(long long k, SumKind kind, int threads = 0);

/// Plain single-loop reference used to cross-check the parallel kernel.
CollisionTable collision_classes_serial(long long k, SumKind kind);

/// True when every class is {h, h^-1 mod k} (the prime collision law).
bool classes_are_inverse_pairs(const CollisionTable& table);

std::string sum_kind_name(SumKind kind);  // "s" or "t"

}  // namespace zsindex
