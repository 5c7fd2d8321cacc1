#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace zsindex {

// A sequence over Z/n stored as a sorted multiset of residues in
// [1, n-1]. The zero residue is excluded: it cannot occur in a minimal
// zero-sum sequence of length >= 2.
class ZsSeq {
public:
    ZsSeq(long long n, std::vector<long long> elems);

    // "n:x1,x2,...,xk"; elements may arrive unsorted and are canonicalized
    static ZsSeq parse(std::string_view text);

    long long modulus() const { return n_; }
    const std::vector<long long>& elems() const { return elems_; }
    size_t length() const { return elems_.size(); }
    std::string to_string() const;

    bool operator==(const ZsSeq&) const = default;
    auto operator<=>(const ZsSeq&) const = default;

private:
    long long n_;
    std::vector<long long> elems_;
};

bool is_zero_sum(const ZsSeq& s);

// Zero-sum with no nonempty proper sub-multiset summing to 0 (mod n).
bool is_minimal_zero_sum(const ZsSeq& s);

/// Numerator of the g-norm: sum_i (g^-1 x_i mod n), each summand in
/// [1, n-1]. For a zero-sum sequence this is a positive multiple of n
/// and the g-norm itself is the numerator divided by n. Rejects
/// non-unit g.
long long gnorm_numerator(const ZsSeq& s, long long g);

/// (g, gnorm_numerator) for every unit g mod n, ascending by g.
std::vector<std::pair<long long, long long>> norm_profile(const ZsSeq& s);

struct IndexResult {
    long long value;                 // min over generators of gnorm/n
    std::vector<long long> argmin;   // every attaining generator, ascending
};

/// Index of a zero-sum sequence: min_g gnorm(s,g)/n. Rejects sequences
/// that are not zero-sum (the norm numerators would not be divisible
/// by n).
IndexResult index_of(const ZsSeq& s);

/// Multiset image ((u*x_i) mod n), re-canonicalized. The index is
/// invariant under this action. Rejects non-unit u.
ZsSeq unit_act(const ZsSeq& s, long long u);

/// Componentwise division by a common divisor d of n and every element;
/// the result lives over Z/(n/d). Rejects d not dividing n or some x_i,
/// and n/d < 2.
ZsSeq scale_down(const ZsSeq& s, long long d);

// ---- length-4 enumeration ----------------------------------------------

/// Visits every minimal zero-sum sorted 4-tuple over Z/n exactly once,
/// in lexicographic order. Iterates x1 <= x2 <= x3 and solves
/// x4 = -(x1+x2+x3) mod n, emitting when x4 >= x3 and no proper subset
/// sums to zero (for zero-sum 4-tuples of nonzero residues this reduces
/// to: no two elements sum to n).
void for_each_minimal4(long long n, const std::function<void(const std::array<long long, 4>&)>& fn);

/// Convenience wrapper collecting for_each_minimal4 output. Only
/// length 4 is supported.
std::vector<ZsSeq> enumerate_minimal(long long n, int k = 4);

struct OrbitRep {
    std::array<long long, 4> x;  // lexicographically smallest orbit member
    long long orbit_size;        // number of distinct sorted multisets in the orbit
};

/// One representative per orbit of the unit action on minimal length-4
/// zero-sum sequences, in lexicographic order. Representatives with a
/// unit coordinate all start with 1 (normalize by that coordinate's
/// inverse); orbits whose coordinates are all non-units are scanned
/// separately. Parallel over the second coordinate; output is
/// independent of the thread count.
std::vector<OrbitRep> enumerate_minimal_orbits(long long n, int threads = 0);

/// Single-loop reference implementation used to cross-check the
/// parallel kernel.
std::vector<OrbitRep> enumerate_minimal_orbits_serial(long long n);

/// Index of a minimal length-4 zero-sum tuple by scanning unit
/// multipliers: 1 as soon as some scaled sum hits n, else 2 when every
/// scaled sum is 2n. Any other outcome is impossible for minimal input.
int index_of_minimal4(long long n, const std::vector<long long>& units_of_n,
                      const std::array<long long, 4>& x);

}  // namespace zsindex
