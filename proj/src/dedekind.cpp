#include "zsindex/dedekind.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "zsindex/arith.hpp"
#include "zsindex/parallel.hpp"

namespace zsindex {

namespace {

void require_coprime(long long h, long long k) {
    if (k < 1) throw std::invalid_argument("dedekind: k must be positive");
    if (gcd_ll(h, k) != 1) throw std::domain_error("dedekind: gcd(h,k) must be 1");
}

}  // namespace

Rational sawtooth(const Rational& x) {
    if (x.is_integer()) return Rational(0);
    return x - Rational(x.floor(), BigInt(1)) - Rational(1, 2);
}

Rational s_direct(long long h, long long k) {
    require_coprime(h, k);
    if (k == 1) return Rational(0);
    long long hr = residue(h, k).value;
    // ((r/k)) = (2r-k)/(2k) and ((hr/k)) = (2(hr mod k)-k)/(2k) for 0 < r < k,
    // so the sum is an integer over the common denominator 4k^2.
    __int128 acc = 0;
    long long m = 0;  // hr mod k, updated incrementally
    for (long long r = 1; r < k; ++r) {
        m += hr;
        if (m >= k) m -= k;
        acc += static_cast<__int128>(2 * r - k) * (2 * m - k);
    }
    return Rational(BigInt::from_i128(acc), BigInt(4) * BigInt(k) * BigInt(k));
}

Rational s_fast(long long h, long long k) {
    require_coprime(h, k);
    long long a = residue(h, k).value;
    long long b = k;
    Rational acc(0);
    int sign = 1;
    // s(a,b) = -1/4 + (a^2 + b^2 + 1)/(12ab) - s(b mod a, a), down to s(0,1) = 0
    while (a != 0 && b != 1) {
        Rational term = Rational(-1, 4) +
                        Rational(BigInt(a) * BigInt(a) + BigInt(b) * BigInt(b) + BigInt(1),
                                 BigInt(12) * BigInt(a) * BigInt(b));
        acc += sign > 0 ? term : -term;
        sign = -sign;
        long long next = b % a;
        b = a;
        a = next;
    }
    return acc;
}

Rational s_paper_literal(long long h, long long k) {
    return s_direct(h, k) - Rational(1, 2);
}

Rational t_direct(long long h, long long k) {
    require_coprime(h, k);
    if (k == 1) return Rational(-1, 2);
    long long hr = residue(h, k).value;
    // (r/k)((hr mod k)/k - 1/2) = r(2(hr mod k) - k) / (2k^2)
    __int128 acc = 0;
    long long m = 0;
    for (long long r = 1; r < k; ++r) {
        m += hr;
        if (m >= k) m -= k;
        if (gcd_ll(r, k) != 1) continue;
        acc += static_cast<__int128>(r) * (2 * m - k);
    }
    return Rational(BigInt::from_i128(acc), BigInt(2) * BigInt(k) * BigInt(k));
}

Rational t_mobius(long long h, long long k) {
    require_coprime(h, k);
    Rational acc(0);
    for (long long d : divisors(k)) {
        int mu = mobius(d);
        if (mu == 0) continue;
        long long kd = k / d;
        Rational term = s_direct(residue(h, kd).value, kd) - Rational(1, 2);
        acc += mu > 0 ? term : -term;
    }
    return acc;
}

CongruenceCheck dedekind_congruence(long long h, long long k) {
    if (k < 2) throw std::invalid_argument("dedekind_congruence: k must be at least 2");
    require_coprime(h, k);
    Rational v = s_fast(h, k) * Rational(12 * k);
    if (!v.is_integer()) throw std::logic_error("dedekind_congruence: 12k*s(h,k) not an integer");
    BigInt lhs_big = v.num() % BigInt(k);
    long long lhs = residue(lhs_big.to_i64(), k).value;
    long long hbar = mod_inverse(h, k).value;
    long long rhs = residue(residue(h, k).value + hbar, k).value;
    return {lhs, rhs, lhs == rhs};
}

namespace {

CollisionTable group_by_value(long long k, SumKind kind,
                              const std::vector<long long>& us,
                              const std::vector<Rational>& values) {
    std::map<Rational, std::vector<long long>> groups;
    for (size_t i = 0; i < us.size(); ++i) groups[values[i]].push_back(us[i]);
    CollisionTable table{k, kind, {}};
    table.classes.reserve(groups.size());
    for (auto& [value, members] : groups) table.classes.push_back({value, members});
    std::sort(table.classes.begin(), table.classes.end(),
              [](const CollisionClass& a, const CollisionClass& b) {
                  return a.members.front() < b.members.front();
              });
    return table;
}

}  // namespace

CollisionTable collision_classes(long long k, SumKind kind, int threads) {
    if (k < 2) throw std::invalid_argument("collision_classes: k must be at least 2");
    std::vector<long long> us = units(k);
    std::vector<Rational> values(us.size());
    const long long nk = k;
    const int nt = resolve_threads(threads);
#pragma omp parallel for schedule(dynamic, 16) num_threads(nt)
    for (long long i = 0; i < static_cast<long long>(us.size()); ++i) {
        values[i] = kind == SumKind::S ? s_fast(us[i], nk) : t_mobius(us[i], nk);
    }
    return group_by_value(k, kind, us, values);
}

CollisionTable collision_classes_serial(long long k, SumKind kind) {
    if (k < 2) throw std::invalid_argument("collision_classes: k must be at least 2");
    std::vector<long long> us = units(k);
    std::vector<Rational> values;
    values.reserve(us.size());
    for (long long h : us) {
        values.push_back(kind == SumKind::S ? s_fast(h, k) : t_mobius(h, k));
    }
    return group_by_value(k, kind, us, values);
}

bool classes_are_inverse_pairs(const CollisionTable& table) {
    for (const auto& cls : table.classes) {
        if (cls.members.empty() || cls.members.size() > 2) return false;
        long long h = cls.members.front();
        long long hbar = mod_inverse(h, table.k).value;
        if (cls.members.size() == 1) {
            if (hbar != h) return false;
        } else {
            if (cls.members[1] != hbar || hbar == h) return false;
        }
    }
    return true;
}

std::string sum_kind_name(SumKind kind) { return kind == SumKind::S ? "s" : "t"; }

}  // namespace zsindex
