#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "zsindex/arith.hpp"
#include "zsindex/dedekind.hpp"
#include "zsindex/report.hpp"

using namespace zsindex;

TEST_CASE("sawtooth") {
    CHECK(sawtooth(Rational(1, 2)) == Rational(0));
    CHECK(sawtooth(Rational(3)) == Rational(0));
    CHECK(sawtooth(Rational(5, 7)) == Rational(3, 14));
    CHECK(sawtooth(Rational(-1, 3)) == Rational(1, 6));
    // odd around 0 and periodic with period 1
    for (long long q = 2; q <= 9; ++q) {
        for (long long p = 1; p < q; ++p) {
            if (gcd_ll(p, q) != 1) continue;
            Rational x(p, q);
            CHECK(sawtooth(x) + sawtooth(-x) == Rational(0));
            CHECK(sawtooth(x + Rational(1)) == sawtooth(x));
        }
    }
}

TEST_CASE("s_direct: examples") {
    CHECK(s_direct(1, 1) == Rational(0));
    CHECK(s_direct(1, 3) == Rational(1, 18));
    CHECK(s_direct(5, 7) == Rational(-1, 14));
    CHECK(s_direct(2, 5) == Rational(0));
    CHECK_THROWS_AS(s_direct(6, 9), std::domain_error);
    CHECK_THROWS_AS(s_direct(1, 0), std::invalid_argument);
}

TEST_CASE("s_direct: closed form for h=1 and sawtooth reference") {
    for (long long k = 1; k <= 50; ++k) {
        CHECK(s_direct(1, k) == Rational((k - 1) * (k - 2), 12 * k));
    }
    for (long long k = 1; k <= 60; ++k) {
        for (long long h = 0; h < std::max(k, 2ll); ++h) {
            if (gcd_ll(h, k) != 1) continue;
            CHECK(s_direct(h, k) == oracles::s_sawtooth(h, k));
        }
    }
}

TEST_CASE("s_direct: periodicity and negation") {
    for (long long k = 2; k <= 40; ++k) {
        for (long long h : units(k)) {
            CHECK(s_direct(h + k, k) == s_direct(h, k));
            CHECK(s_direct(-h, k) == -s_direct(h, k));
            CHECK(s_direct(mod_inverse(h, k).value, k) == s_direct(h, k));
        }
    }
}

TEST_CASE("s_fast equals s_direct") {
    CHECK(s_fast(1, 1) == Rational(0));
    CHECK(s_fast(5, 7) == Rational(-1, 14));
    CHECK(s_fast(2, 5) == Rational(0));
    for (long long k = 1; k <= 120; ++k) {
        if (k == 1) {
            CHECK(s_fast(1, 1) == s_direct(1, 1));
            continue;
        }
        for (long long h : units(k)) CHECK(s_fast(h, k) == s_direct(h, k));
    }
    // also fine far beyond the direct-sum comfort zone
    CHECK(s_fast(12345, 1000003) == s_fast(12345 + 1000003, 1000003));
}

TEST_CASE("s_paper_literal: offset identity") {
    CHECK(s_paper_literal(1, 1) == Rational(-1, 2));
    CHECK(s_paper_literal(1, 3) == Rational(-4, 9));
    CHECK(s_paper_literal(5, 7) == Rational(-4, 7));
    for (long long k = 1; k <= 60; ++k) {
        for (long long h = 0; h < std::max(k, 2ll); ++h) {
            if (gcd_ll(h, k) != 1) continue;
            CHECK(s_paper_literal(h, k) == s_direct(h, k) - Rational(1, 2));
        }
    }
}

TEST_CASE("t_direct: examples and literal reference") {
    CHECK(t_direct(1, 4) == Rational(1, 8));
    CHECK(t_direct(1, 5) == Rational(1, 5));
    CHECK(t_direct(1, 1) == Rational(-1, 2));
    CHECK_THROWS_AS(t_direct(2, 4), std::domain_error);
    for (long long k = 1; k <= 60; ++k) {
        for (long long h = 0; h < std::max(k, 2ll); ++h) {
            if (gcd_ll(h, k) != 1) continue;
            CHECK(t_direct(h, k) == oracles::t_literal(h, k));
        }
    }
}

TEST_CASE("t_mobius equals t_direct") {
    CHECK(t_mobius(1, 4) == Rational(1, 8));
    CHECK(t_mobius(1, 1) == Rational(-1, 2));
    for (long long k = 1; k <= 120; ++k) {
        if (k == 1) {
            CHECK(t_mobius(1, 1) == t_direct(1, 1));
            continue;
        }
        for (long long h : units(k)) CHECK(t_mobius(h, k) == t_direct(h, k));
    }
}

TEST_CASE("t equals s at primes") {
    for (long long p = 2; p <= 101; ++p) {
        if (!is_prime(p)) continue;
        for (long long h : units(p)) CHECK(t_direct(h, p) == s_direct(h, p));
    }
}

TEST_CASE("t: periodicity and inverse symmetry") {
    for (long long k = 2; k <= 60; ++k) {
        for (long long h : units(k)) {
            CHECK(t_direct(h + k, k) == t_direct(h, k));
            CHECK(t_mobius(mod_inverse(h, k).value, k) == t_mobius(h, k));
        }
    }
}

TEST_CASE("reciprocity") {
    for (long long k = 2; k <= 60; ++k) {
        for (long long h = 1; h < k; ++h) {
            if (gcd_ll(h, k) != 1) continue;
            Rational lhs = s_direct(h, k) + s_direct(k % h, h);
            Rational rhs = Rational(-1, 4) +
                           (Rational(h, k) + Rational(k, h) + Rational(1, h * k)) / Rational(12);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("dedekind_congruence") {
    CongruenceCheck c15 = dedekind_congruence(1, 5);
    CHECK(c15.lhs == 2);
    CHECK(c15.rhs == 2);
    CHECK(c15.holds);
    CongruenceCheck c57 = dedekind_congruence(5, 7);
    CHECK(c57.lhs == 1);
    CHECK(c57.rhs == 1);
    CHECK(c57.holds);
    CHECK(dedekind_congruence(1, 2).holds);
    CHECK_THROWS_AS(dedekind_congruence(2, 4), std::domain_error);
    CHECK_THROWS_AS(dedekind_congruence(1, 1), std::invalid_argument);
    for (long long k = 2; k <= 100; ++k) {
        for (long long h : units(k)) {
            Rational twelve_ks = s_direct(h, k) * Rational(12 * k);
            CHECK(twelve_ks.is_integer());
            CHECK(dedekind_congruence(h, k).holds);
        }
    }
}

TEST_CASE("collision_classes: small explicit tables") {
    CollisionTable t7 = collision_classes(7, SumKind::S, 1);
    REQUIRE(t7.classes.size() == 4);
    CHECK(t7.classes[0].members == std::vector<long long>{1});
    CHECK(t7.classes[1].members == std::vector<long long>{2, 4});
    CHECK(t7.classes[2].members == std::vector<long long>{3, 5});
    CHECK(t7.classes[3].members == std::vector<long long>{6});

    CollisionTable t5 = collision_classes(5, SumKind::S, 1);
    REQUIRE(t5.classes.size() == 3);
    CHECK(t5.classes[0].members == std::vector<long long>{1});
    CHECK(t5.classes[1].members == std::vector<long long>{2, 3});
    CHECK(t5.classes[2].members == std::vector<long long>{4});
}

TEST_CASE("collision_classes: prime collision law") {
    for (long long p = 2; p <= 31; ++p) {
        if (!is_prime(p)) continue;
        CollisionTable table = collision_classes(p, SumKind::S, 1);
        CHECK(classes_are_inverse_pairs(table));
        // and explicitly: the partition is exactly the {h, h^-1} pairs
        std::set<std::vector<long long>> expected;
        for (long long h : units(p)) {
            long long hbar = mod_inverse(h, p).value;
            expected.insert(h <= hbar ? std::vector<long long>{h, hbar}
                                      : std::vector<long long>{hbar, h});
        }
        std::set<std::vector<long long>> got;
        for (auto& cls : table.classes) {
            auto m = cls.members;
            if (m.size() == 1) m.push_back(mod_inverse(m[0], p).value);
            got.insert(m);
        }
        CHECK(got == expected);
    }
}

TEST_CASE("collision_classes: partition invariants") {
    for (long long k : {12, 25, 36}) {
        for (SumKind kind : {SumKind::S, SumKind::T}) {
            CollisionTable table = collision_classes(k, kind, 1);
            std::vector<long long> all;
            std::set<std::string> values;
            for (size_t c = 0; c < table.classes.size(); ++c) {
                const auto& cls = table.classes[c];
                CHECK(values.insert(cls.value.to_string()).second);  // pairwise distinct
                CHECK(std::is_sorted(cls.members.begin(), cls.members.end()));
                if (c) CHECK(table.classes[c - 1].members.front() < cls.members.front());
                all.insert(all.end(), cls.members.begin(), cls.members.end());
            }
            std::sort(all.begin(), all.end());
            CHECK(all == units(k));
        }
    }
}

TEST_CASE("collision_classes: t classes for k=25 pair 14 with 19") {
    CollisionTable table = collision_classes(25, SumKind::T, 1);
    bool found = false;
    for (auto& cls : table.classes) {
        bool has14 = std::count(cls.members.begin(), cls.members.end(), 14) > 0;
        bool has19 = std::count(cls.members.begin(), cls.members.end(), 19) > 0;
        if (has14 || has19) {
            CHECK(has14 == has19);
            found = found || (has14 && has19);
        }
    }
    CHECK(found);
}

TEST_CASE("collision_classes: rejects k < 2") {
    CHECK_THROWS_AS(collision_classes(1, SumKind::S, 1), std::invalid_argument);
    CHECK_THROWS_AS(collision_classes_serial(0, SumKind::T), std::invalid_argument);
}

TEST_CASE("collision_classes: parallel equals serial") {
    for (long long k : {12, 25, 97}) {
        for (SumKind kind : {SumKind::S, SumKind::T}) {
            CHECK(collision_csv(collision_classes(k, kind, 3)) ==
                  collision_csv(collision_classes_serial(k, kind)));
        }
    }
}

TEST_CASE("collision csv format") {
    CHECK(collision_csv(collision_classes(5, SumKind::S, 1)) ==
          "k,kind,class_index,value,member\n"
          "5,s,0,1/5,1\n"
          "5,s,1,0/1,2\n"
          "5,s,1,0/1,3\n"
          "5,s,2,-1/5,4\n");
}
