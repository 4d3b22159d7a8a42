#include "hermlcd/cosets.hpp"

#include <numeric>
#include <set>

#include "doctest.h"

using namespace hermlcd;
using namespace hermlcd::cosets;

TEST_CASE("coset table for n=9, Q=4") {
    CosetTable t = coset_table(9, 4);
    CHECK(t.m == 3);
    CHECK(t.leaders == std::vector<std::uint32_t>{0, 1, 2, 3, 6});
    CHECK(t.coset_of(1) == std::vector<std::uint32_t>{1, 4, 7});
    CHECK(t.coset_of(2) == std::vector<std::uint32_t>{2, 5, 8});
    CHECK(t.coset_of(3) == std::vector<std::uint32_t>{3});
    CHECK(t.leader(7) == 1);
    CHECK(t.coset_size(1) == 3);  // |C_1| = |C_2| = 2t+1 at t=1
    CHECK(t.coset_size(2) == 3);
}

TEST_CASE("degenerate and small tables") {
    CosetTable t1 = coset_table(1, 4);
    CHECK(t1.leaders == std::vector<std::uint32_t>{0});
    CHECK(t1.coset_of(0) == std::vector<std::uint32_t>{0});

    CosetTable t5 = coset_table(5, 4);
    CHECK(t5.m == 2);
    CHECK(t5.leaders == std::vector<std::uint32_t>{0, 1, 2});
    CHECK(t5.coset_of(1) == std::vector<std::uint32_t>{1, 4});
    CHECK(t5.coset_of(2) == std::vector<std::uint32_t>{2, 3});

    try {
        coset_table(9, 6);
        FAIL("expected NotCoprime");
    } catch (const error& e) {
        CHECK(e.code() == errc::not_coprime);
    }
}

TEST_CASE("partition property") {
    for (std::uint64_t n : {7ull, 9ull, 15ull, 21ull, 33ull, 63ull, 85ull, 341ull}) {
        CosetTable t = coset_table(n, 4);
        std::size_t total = 0;
        std::set<std::uint32_t> seen;
        for (std::uint32_t s : t.leaders) {
            auto members = t.coset_of(s);
            CHECK(members.front() == s);  // leader is the minimum
            CHECK(t.coset_size(s) % 1 == 0);
            CHECK(t.coset_size(s) == members.size());
            CHECK(t.m % t.coset_size(s) == 0);  // sizes divide ord_n(Q)
            for (auto e : members) CHECK(seen.insert(e).second);
            total += members.size();
        }
        CHECK(total == n);
    }
}

TEST_CASE("leader window covers the expected range") {
    // (n, Q) pairs with their orders
    for (std::uint64_t n : {9ull, 33ull, 63ull, 255ull}) {
        CosetTable t = coset_table(n, 4);
        bool any_window = false;
        for (std::uint64_t s = 1; s < n; ++s) {
            LeaderQuery q = is_leader_in_range(t, s);
            CHECK(q.is_leader == (t.leader(s) == s));
            if (!q.in_window) continue;
            any_window = true;
            CHECK(q.coset_size == t.m);  // |C_s| = m inside the window
            if (s % 4 != 0) {
                REQUIRE(q.predicted_leader.has_value());
                CHECK(*q.predicted_leader);
                CHECK(q.is_leader);  // the prediction is honest
            } else {
                CHECK_FALSE(q.predicted_leader.has_value());
            }
        }
        CHECK(any_window);
    }

    // n = 9: the window is exactly s <= 2 (9*16/63 = 2.28)
    CosetTable t9 = coset_table(9, 4);
    CHECK(is_leader_in_range(t9, 1).in_window);
    CHECK(is_leader_in_range(t9, 2).in_window);
    CHECK_FALSE(is_leader_in_range(t9, 3).in_window);

    // n = 63: window reaches s = 16
    CosetTable t63 = coset_table(63, 4);
    CHECK(is_leader_in_range(t63, 16).in_window);
    CHECK_FALSE(is_leader_in_range(t63, 17).in_window);
}

TEST_CASE("exceptional non-leaders for n = (4^m-1)/3") {
    // even m: single exception (2^(m+1)+1)/3
    CHECK(leader_exceptions_third(2) == std::vector<std::uint32_t>{3});
    CHECK(leader_exceptions_third(4) == std::vector<std::uint32_t>{11});
    for (unsigned m : {2u, 4u, 6u, 8u}) {
        CHECK(leader_exceptions_third(m) == leader_exception_formula_third(m));
    }
    // odd m: the two-exception closed form, confirmed by scan
    CHECK(leader_exceptions_third(5) == std::vector<std::uint32_t>{22, 27});
    for (unsigned m : {5u, 7u, 9u}) {
        CHECK(leader_exceptions_third(m) == leader_exception_formula_third(m));
    }
    // all 4-free i in range have full-size orbits
    for (unsigned m : {2u, 4u, 5u, 6u, 7u}) {
        const std::uint64_t n = (pow_u64(4, m) - 1) / 3;
        for (std::uint64_t i = 1; i <= pow_u64(2, m); ++i) {
            if (i % 4 == 0) continue;
            CHECK(orbit_size(n, 4, i) == m);
        }
    }
    try {
        leader_exceptions_third(3);
        FAIL("expected UnsupportedM");
    } catch (const error& e) {
        CHECK(e.code() == errc::unsupported_m);
    }
    CHECK_THROWS_AS(leader_exceptions_third(1), error);
}

TEST_CASE("offset coset symmetries at n = 63") {
    // C_{nhat+i} = C_{nhat+j} iff C_i = C_j, and C_{nhat+Qi} = C_{nhat+i}
    CosetTable t = coset_table(63, 4);
    for (std::uint64_t e : {1ull, 3ull}) {
        const std::uint64_t nhat = 63 / e;
        for (std::uint64_t i = 0; i < 63; ++i) {
            CHECK(t.leader((nhat + 4 * i) % 63) == t.leader((nhat + i) % 63));
            for (std::uint64_t j = 0; j < 63; ++j) {
                bool plain = t.leader(i) == t.leader(j);
                bool offset = t.leader((nhat + i) % 63) == t.leader((nhat + j) % 63);
                CHECK(plain == offset);
            }
        }
    }
}

TEST_CASE("J set examples") {
    // n = 63, e = 3, delta = 8: |J+| = |J-| = 18 and they share one coset
    CosetTable t = coset_table(63, 4);
    auto [jp, jm] = j_sets(t, 21, 2, 8);
    CHECK(jp.size() == 18);
    CHECK(jm.size() == 18);
    CHECK(set_intersection(jp, jm).size() == 3);  // u^2 m with u=1, m=3

    // delta = 2 below the first threshold: empty intersection
    auto [jp2, jm2] = j_sets(t, 21, 2, 2);
    CHECK(set_intersection(jp2, jm2).size() == 0);

    // n = 85 (m = 4), base 0, q = 2, delta = 11: intersection 2m = 8
    CosetTable t85 = coset_table(85, 4);
    auto [jp3, jm3] = j_sets(t85, 0, 2, 11);
    CHECK(set_intersection(jp3, jm3).size() == 8);
}

TEST_CASE("closed-form intersection sizes match the explicit sets") {
    // primitive kind: q in {2, 3}, both parities of m
    struct PrimCase {
        std::uint64_t q;
        unsigned m;
    };
    for (PrimCase pc : {PrimCase{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}}) {
        const std::uint64_t Q = pc.q * pc.q;
        const std::uint64_t n = pow_u64(Q, pc.m) - 1;
        CosetTable t = coset_table(n, Q);
        REQUIRE(t.m == pc.m);
        const std::uint64_t dmax = pow_u64(Q, (pc.m + 1) / 2) + 1;
        for (std::uint64_t e = 1; e <= pc.q + 1; ++e) {
            if ((pc.q + 1) % e != 0) continue;
            const std::uint64_t nhat = n / e;
            for (std::uint64_t delta = 2; delta <= dmax; ++delta) {
                auto [jp, jm] = j_sets(t, nhat, pc.q, delta);
                std::uint64_t got = set_intersection(jp, jm).size();
                std::uint64_t want =
                    j_intersection_size_formula(JKind::primitive, pc.q, pc.m, delta);
                CHECK_MESSAGE(got == want, "q=", pc.q, " m=", pc.m, " e=", e,
                              " delta=", delta);
            }
        }
    }

    // quaternary kinds
    for (unsigned m : {2u, 4u, 6u}) {
        const std::uint64_t n = (pow_u64(4, m) - 1) / 3;
        CosetTable t = coset_table(n, 4);
        for (std::uint64_t delta = 2; delta <= pow_u64(2, m); ++delta) {
            auto [jp, jm] = j_sets(t, 0, 2, delta);
            std::uint64_t got = set_intersection(jp, jm).size();
            if (m == 2 && delta == 4) {
                // the even-m closed form overshoots n here; out of range
                CHECK_THROWS_AS(
                    j_intersection_size_formula(JKind::third_even, 2, m, delta), error);
                continue;
            }
            CHECK(got == j_intersection_size_formula(JKind::third_even, 2, m, delta));
        }
    }
    for (unsigned m : {5u, 7u}) {
        const std::uint64_t n = (pow_u64(4, m) - 1) / 3;
        CosetTable t = coset_table(n, 4);
        for (std::uint64_t delta = 2; delta <= pow_u64(2, m); ++delta) {
            auto [jp, jm] = j_sets(t, 0, 2, delta);
            std::uint64_t got = set_intersection(jp, jm).size();
            CHECK(got == j_intersection_size_formula(JKind::third_odd, 2, m, delta));
        }
    }
}

TEST_CASE("formula guard rails") {
    CHECK_THROWS_AS(j_intersection_size_formula(JKind::primitive, 2, 1, 2), error);
    CHECK_THROWS_AS(j_intersection_size_formula(JKind::primitive, 2, 3, 18), error);
    CHECK_THROWS_AS(j_intersection_size_formula(JKind::third_even, 2, 3, 4), error);
    CHECK_THROWS_AS(j_intersection_size_formula(JKind::third_odd, 2, 3, 4), error);
    CHECK_THROWS_AS(j_intersection_size_formula(JKind::third_odd, 3, 5, 4), error);
    // spot values straight from the statements
    CHECK(j_intersection_size_formula(JKind::primitive, 2, 3, 7) == 0);
    CHECK(j_intersection_size_formula(JKind::third_even, 2, 4, 14) == 16);  // 4m
    CHECK(j_intersection_size_formula(JKind::third_odd, 2, 5, 32) == 15);   // 3m
}
