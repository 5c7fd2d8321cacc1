#include "zsindex/zerosum.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "zsindex/arith.hpp"
#include "zsindex/parallel.hpp"

namespace zsindex {

ZsSeq::ZsSeq(long long n, std::vector<long long> elems) : n_(n), elems_(std::move(elems)) {
    if (n_ < 2) throw std::invalid_argument("ZsSeq: modulus must be at least 2");
    if (elems_.empty()) throw std::invalid_argument("ZsSeq: sequence must be nonempty");
    for (long long x : elems_) {
        if (x < 1 || x >= n_) {
            throw std::invalid_argument(
                "ZsSeq: elements must lie in [1, n-1] (the identity residue is excluded)");
        }
    }
    std::sort(elems_.begin(), elems_.end());
}

namespace {

long long parse_ll(std::string_view text) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::invalid_argument("ZsSeq: malformed integer '" + std::string(text) + "'");
    }
    return v;
}

}  // namespace

ZsSeq ZsSeq::parse(std::string_view text) {
    size_t colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("ZsSeq: expected \"n:x1,x2,...\"");
    }
    long long n = parse_ll(text.substr(0, colon));
    std::vector<long long> elems;
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
        size_t comma = rest.find(',');
        std::string_view tok = comma == std::string_view::npos ? rest : rest.substr(0, comma);
        elems.push_back(parse_ll(tok));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    if (elems.empty()) throw std::invalid_argument("ZsSeq: expected \"n:x1,x2,...\"");
    return ZsSeq(n, std::move(elems));
}

std::string ZsSeq::to_string() const {
    std::string out = std::to_string(n_) + ":";
    for (size_t i = 0; i < elems_.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(elems_[i]);
    }
    return out;
}

bool is_zero_sum(const ZsSeq& s) {
    long long sum = 0;
    for (long long x : s.elems()) sum = (sum + x) % s.modulus();
    return sum == 0;
}

bool is_minimal_zero_sum(const ZsSeq& s) {
    if (!is_zero_sum(s)) return false;
    const auto& e = s.elems();
    const long long n = s.modulus();
    const size_t k = e.size();
    if (k > 20) throw std::invalid_argument("is_minimal_zero_sum: sequence too long");
    const unsigned full = (1u << k) - 1;
    for (unsigned mask = 1; mask < full; ++mask) {
        long long sum = 0;
        for (size_t i = 0; i < k; ++i) {
            if (mask & (1u << i)) sum += e[i];
        }
        if (sum % n == 0) return false;
    }
    return true;
}

long long gnorm_numerator(const ZsSeq& s, long long g) {
    const long long n = s.modulus();
    long long ginv = mod_inverse(g, n).value;  // rejects non-unit g
    long long sum = 0;
    for (long long x : s.elems()) sum += (ginv * x) % n;
    return sum;
}

std::vector<std::pair<long long, long long>> norm_profile(const ZsSeq& s) {
    std::vector<std::pair<long long, long long>> profile;
    for (long long g : units(s.modulus())) {
        profile.emplace_back(g, gnorm_numerator(s, g));
    }
    return profile;
}

IndexResult index_of(const ZsSeq& s) {
    if (!is_zero_sum(s)) throw std::domain_error("index_of: sequence is not zero-sum");
    const long long n = s.modulus();
    long long best = 0;
    std::vector<long long> argmin;
    for (long long g : units(n)) {
        long long num = gnorm_numerator(s, g);
        if (argmin.empty() || num < best) {
            best = num;
            argmin.assign(1, g);
        } else if (num == best) {
            argmin.push_back(g);
        }
    }
    return {best / n, std::move(argmin)};
}

ZsSeq unit_act(const ZsSeq& s, long long u) {
    const long long n = s.modulus();
    if (gcd_ll(u, n) != 1) throw std::domain_error("unit_act: u is not a unit mod n");
    long long ur = residue(u, n).value;
    std::vector<long long> mapped;
    mapped.reserve(s.length());
    for (long long x : s.elems()) mapped.push_back((ur * x) % n);
    return ZsSeq(n, std::move(mapped));
}

ZsSeq scale_down(const ZsSeq& s, long long d) {
    const long long n = s.modulus();
    if (d < 1 || n % d != 0) throw std::invalid_argument("scale_down: d must divide n");
    if (n / d < 2) throw std::invalid_argument("scale_down: n/d must be at least 2");
    std::vector<long long> scaled;
    scaled.reserve(s.length());
    for (long long x : s.elems()) {
        if (x % d != 0) throw std::invalid_argument("scale_down: d must divide every element");
        scaled.push_back(x / d);
    }
    return ZsSeq(n / d, std::move(scaled));
}

// ---- length-4 enumeration ----------------------------------------------

namespace {

// For a zero-sum 4-tuple of residues in [1, n-1], proper subsets of size
// 1 and 3 never sum to 0 mod n, so minimality reduces to "no pair sums
// to n" (pair sums lie in [2, 2n-2]). The enumeration loops below stage
// those six checks as early as each pair is known.

inline void sort4(std::array<long long, 4>& t) {
    auto cswap = [](long long& x, long long& y) {
        if (y < x) std::swap(x, y);
    };
    cswap(t[0], t[1]);
    cswap(t[2], t[3]);
    cswap(t[0], t[2]);
    cswap(t[1], t[3]);
    cswap(t[1], t[2]);
}

// Lexicographic-minimality of t within its unit orbit; also counts the
// stabilizer so the orbit size comes out of the same scan.
bool canonical_in_orbit(long long n, const std::vector<long long>& us,
                        const std::array<long long, 4>& t, long long& orbit_size) {
    long long stab = 0;
    for (long long u : us) {
        std::array<long long, 4> m{(u * t[0]) % n, (u * t[1]) % n, (u * t[2]) % n,
                                   (u * t[3]) % n};
        sort4(m);
        if (m < t) return false;
        if (m == t) ++stab;
    }
    orbit_size = static_cast<long long>(us.size()) / stab;
    return true;
}

}  // namespace

void for_each_minimal4(long long n,
                       const std::function<void(const std::array<long long, 4>&)>& fn) {
    if (n < 2) throw std::invalid_argument("for_each_minimal4: modulus must be at least 2");
    for (long long x1 = 1; x1 < n; ++x1) {
        for (long long x2 = x1; x2 < n; ++x2) {
            if (x1 + x2 == n) continue;
            for (long long x3 = x2; x3 < n; ++x3) {
                long long rem = (x1 + x2 + x3) % n;
                if (rem == 0) continue;
                long long x4 = n - rem;
                if (x4 < x3) continue;
                if (x1 + x3 == n || x2 + x3 == n) continue;
                if (x1 + x4 == n || x2 + x4 == n || x3 + x4 == n) continue;
                fn({x1, x2, x3, x4});
            }
        }
    }
}

std::vector<ZsSeq> enumerate_minimal(long long n, int k) {
    if (k != 4) throw std::invalid_argument("enumerate_minimal: only length 4 is supported");
    std::vector<ZsSeq> out;
    for_each_minimal4(n, [&](const std::array<long long, 4>& t) {
        out.emplace_back(n, std::vector<long long>{t[0], t[1], t[2], t[3]});
    });
    return out;
}

namespace {

// Orbits with a unit coordinate have their representative in the x1 = 1
// slice; emit the candidates for one fixed x2 (ascending x3).
void scan_unit_slice(long long n, const std::vector<long long>& us, long long x2,
                     std::vector<OrbitRep>& out) {
    if (1 + x2 == n) return;
    for (long long x3 = x2; x3 < n; ++x3) {
        long long rem = (1 + x2 + x3) % n;
        if (rem == 0) continue;
        long long x4 = n - rem;
        if (x4 < x3) continue;
        if (1 + x3 == n || x2 + x3 == n) continue;
        if (1 + x4 == n || x2 + x4 == n || x3 + x4 == n) continue;
        std::array<long long, 4> t{1, x2, x3, x4};
        long long orbit_size = 0;
        if (canonical_in_orbit(n, us, t, orbit_size)) out.push_back({t, orbit_size});
    }
}

// Orbits whose coordinates are all non-units; emit candidates for one
// fixed x1 (an entry of the non-unit list).
void scan_nonunit_slice(long long n, const std::vector<long long>& us,
                        const std::vector<long long>& nonunits, size_t i1,
                        std::vector<OrbitRep>& out) {
    long long x1 = nonunits[i1];
    for (size_t i2 = i1; i2 < nonunits.size(); ++i2) {
        long long x2 = nonunits[i2];
        if (x1 + x2 == n) continue;
        for (size_t i3 = i2; i3 < nonunits.size(); ++i3) {
            long long x3 = nonunits[i3];
            long long rem = (x1 + x2 + x3) % n;
            if (rem == 0) continue;
            long long x4 = n - rem;
            if (x4 < x3 || gcd_ll(x4, n) == 1) continue;
            if (x1 + x3 == n || x2 + x3 == n) continue;
            if (x1 + x4 == n || x2 + x4 == n || x3 + x4 == n) continue;
            std::array<long long, 4> t{x1, x2, x3, x4};
            long long orbit_size = 0;
            if (canonical_in_orbit(n, us, t, orbit_size)) out.push_back({t, orbit_size});
        }
    }
}

}  // namespace

std::vector<OrbitRep> enumerate_minimal_orbits(long long n, int threads) {
    if (n < 2) throw std::invalid_argument("enumerate_minimal_orbits: modulus must be at least 2");
    const std::vector<long long> us = units(n);
    const int nt = resolve_threads(threads);

    // x1 = 1 slice, bucketed by x2 so concatenation order is schedule-free
    std::vector<std::vector<OrbitRep>> unit_buckets(n);
#pragma omp parallel for schedule(dynamic, 4) num_threads(nt)
    for (long long x2 = 1; x2 < n; ++x2) {
        scan_unit_slice(n, us, x2, unit_buckets[x2]);
    }

    std::vector<long long> nonunits;
    for (long long x = 2; x < n; ++x) {
        if (gcd_ll(x, n) > 1) nonunits.push_back(x);
    }
    std::vector<std::vector<OrbitRep>> nonunit_buckets(nonunits.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
    for (long long i = 0; i < static_cast<long long>(nonunits.size()); ++i) {
        scan_nonunit_slice(n, us, nonunits, static_cast<size_t>(i), nonunit_buckets[i]);
    }

    std::vector<OrbitRep> out;
    for (auto& b : unit_buckets) out.insert(out.end(), b.begin(), b.end());
    for (auto& b : nonunit_buckets) out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::vector<OrbitRep> enumerate_minimal_orbits_serial(long long n) {
    if (n < 2) throw std::invalid_argument("enumerate_minimal_orbits: modulus must be at least 2");
    const std::vector<long long> us = units(n);
    std::vector<OrbitRep> out;
    for_each_minimal4(n, [&](const std::array<long long, 4>& t) {
        long long orbit_size = 0;
        if (canonical_in_orbit(n, us, t, orbit_size)) out.push_back({t, orbit_size});
    });
    return out;
}

int index_of_minimal4(long long n, const std::vector<long long>& units_of_n,
                      const std::array<long long, 4>& x) {
    // Scanning h over units covers the same multiset of norms as scanning
    // generators g (h plays g^-1). Index 1 iff some scaled sum equals n;
    // otherwise every scaled sum must be 2n (a 3n forces an n at n-h).
    bool all_two = true;
    for (long long h : units_of_n) {
        long long sum = (h * x[0]) % n + (h * x[1]) % n + (h * x[2]) % n + (h * x[3]) % n;
        if (sum == n) return 1;
        if (sum != 2 * n) all_two = false;
    }
    if (!all_two) throw std::logic_error("index_of_minimal4: norms outside {1,2,3} pattern");
    return 2;
}

}  // namespace zsindex
