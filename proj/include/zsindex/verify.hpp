#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "zsindex/rational.hpp"
#include "zsindex/zerosum.hpp"

namespace zsindex {

// A length-4 sequence with order-significant coordinates. The W sum and
// the pairing checks depend on which coordinate carries which label, so
// they operate on this view rather than on the sorted multiset.
struct LabeledSeq {
    long long n;
    std::array<long long, 4> x;
};

/// Stored (sorted) order of a length-4 sequence.
LabeledSeq labeled(const ZsSeq& s);

/// Apply 1-based label positions: result.x[i] = s.x[order[i]-1].
LabeledSeq relabel(const LabeledSeq& s, const std::array<int, 4>& order);

/// W = sum over units g of (sum_i (g x_i)_n) * (sum_i (-1)^i (g x_i)_n),
/// signs -,+,-,+ on labels 1..4. Zero for every index-2 sequence whose
/// coordinates are all units.
long long w_sum(const LabeledSeq& s);

struct NecessaryCondition {
    long long lhs;       // sum over units g of (g x2)_n (g x4)_n
    long long rhs;       // sum over units g of (g x1)_n (g x3)_n
    bool equal;
    bool all_units;      // the reindexed form below requires unit coordinates
    long long nc2_lhs;   // sum over units g of g * (g inv(x2) x4)_n
    long long nc2_rhs;   // sum over units g of g * (g inv(x1) x3)_n
    bool nc2_equal;
};

/// Both sides of the index-2 necessary condition. The product form is
/// always computed; the reindexed form only when every coordinate is a
/// unit (all_units says which happened).
NecessaryCondition necessary_condition(const LabeledSeq& s);

struct TPairing {
    int a, b, c, d;             // split {ab|cd} of the labels
    long long left_arg;         // (inv(x_a) x_b)_n
    long long right_arg;        // (inv(x_c) x_d)_n
    Rational t_left, t_right;
    bool equal;
};

struct TheoremCheck {
    LabeledSeq seq;
    long long w_value;
    long long nc_lhs, nc_rhs;   // reindexed-form sides
    bool nc_equal;
    std::array<TPairing, 3> pairings;  // the three 2+2 splits
};

/// t(inv(x_a) x_b, n) vs t(inv(x_c) x_d, n) for the splits {12|34},
/// {13|24}, {14|23}, together with W and the necessary condition.
/// Equality of a pairing only depends on the unordered split, so three
/// checks cover every permutation of the labels. Rejects sequences with
/// a non-unit coordinate.
TheoremCheck check_t_equalities(const LabeledSeq& s);

enum class VerifyStatus { VERIFIED_INDEX1, COUNTEREXAMPLE_FOUND, SKIPPED };

std::string verify_status_name(VerifyStatus s);

// Checks attached to one index-2 witness in a report. Falls back to the
// product form of the necessary condition (and no pairings) when some
// coordinate is not a unit.
struct WitnessCheck {
    std::array<long long, 4> x;
    bool all_units;
    long long w_value;
    bool nc_is_reindexed;
    long long nc_lhs, nc_rhs;
    bool nc_equal;
    std::vector<TPairing> pairings;                         // 3 entries or none
    std::vector<std::pair<long long, long long>> gnorms;    // (g, norm value)
};

struct VerifyReport {
    long long n;
    long long total_minimal;
    long long index2_count;   // sequences, counted with orbit multiplicity
    std::vector<std::array<long long, 4>> index2_witnesses;  // orbit representatives
    std::vector<WitnessCheck> theorem_checks;
    long long elapsed_ms;
    VerifyStatus status;
};

/// Full check of one modulus: orbit enumeration, index of every orbit,
/// witness checks. Deterministic for any thread count.
VerifyReport verify_modulus(long long n, int threads = 0);

/// Plain reference used to cross-check the parallel path.
VerifyReport verify_modulus_serial(long long n);

/// Reports for every n in [n_min, n_max] passing the filter, delivered
/// to the sink in ascending order. A failure in one modulus yields a
/// SKIPPED report and does not abort the range.
void verify_range(long long n_min, long long n_max, bool coprime6_only, int threads,
                  const std::function<void(const VerifyReport&)>& sink);

// Survey of minimal sequences with content gcd 1 and at least one
// coordinate sharing a factor with n; each must have index 1.
struct NonUnitCoordSurvey {
    long long n;
    long long orbits_checked;
    long long sequences_checked;
    long long violations;
};

/// Requires gcd(n, 6) = 1.
NonUnitCoordSurvey survey_nonunit_coords(long long n, int threads = 0);

struct PrimeOrderReport {
    VerifyReport base;
    long long sequences_checked;       // all minimal length-4 sequences mod p
    long long s_collisions;            // splits with equal s values
    long long dichotomy_violations;    // collisions with arg1 != arg2 and arg1 != inv(arg2)
    long long zero_pair_sums;          // sequences with x_i + x_j = 0 mod p (impossible)
};

/// Exhaustive confirmation for a prime p >= 5 with gcd(p, 6) = 1, plus a
/// replay of the collision argument: equal s values across a split force
/// the two arguments to coincide or be inverses, and no minimal sequence
/// has two coordinates summing to 0 mod p.
PrimeOrderReport verify_prime_order(long long p, int threads = 0);

}  // namespace zsindex
