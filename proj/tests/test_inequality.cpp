#include <doctest.h>

#include <gmpxx.h>

#include <vector>

#include "lcw/inequality.hpp"

using namespace lcw;

TEST_CASE("fiber-count threshold formula") {
    CHECK(threshold_b(1, 1) == 1);
    CHECK(threshold_b(2, 1) == 2);
    CHECK(threshold_b(3, 1) == 6);
    CHECK(threshold_b(1, 2) == 4);
    CHECK(threshold_b(2, 2) == 36);
    CHECK(threshold_b(1, 3) == 27);
    // ((n+a-1)!/(a-1)!)^a at n = 2, a = 3: (4!/2!)^3 = 12^3
    CHECK(threshold_b(2, 3) == 1728);
}

TEST_CASE("product minimum closed form equals brute force on a spot grid") {
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k <= 4; ++k)
            for (int c = k + 1; c <= 8; ++c)
                for (int m = k + 1; m <= k * (n + 1); m += 3) {
                    OptInstance inst(n, m, k, c);
                    CAPTURE(n);
                    CAPTURE(m);
                    CAPTURE(k);
                    CAPTURE(c);
                    CHECK(optlemma_closed_form(inst) == optlemma_bruteforce(inst));
                }
}

TEST_CASE("product minimum: both regimes of the closed form") {
    // m >= nk caps every coordinate: minimum (C-k)^n
    CHECK(optlemma_closed_form(OptInstance(3, 12, 4, 10)) == 6 * 6 * 6);
    // m = kq + r with q < n: q full coordinates, one partial, rest at C
    // n=3, m=5, k=4, C=10: q=1, r=1 -> (10-4)(10-1)(10) = 540
    CHECK(optlemma_closed_form(OptInstance(3, 5, 4, 10)) == 540);
}

TEST_CASE("majorization test and its preconditions") {
    CHECK(majorizes({4, 2, 1}, {3, 3, 1}));
    CHECK(!majorizes({3, 3, 1}, {4, 2, 1}));
    CHECK(majorizes({4, 2, 1}, {4, 2, 1}));
    CHECK(!majorizes({4, 2, 1}, {4, 2, 2}));  // sums differ
    CHECK_THROWS(majorizes({1, 2}, {2, 1}));  // not sorted descending
}

TEST_CASE("majorizing pairs never increase the log-product objective") {
    KaramataReport r = karamata_property_check(500, kDefaultPrecision, 9);
    CHECK(r.samples == 500);
    CHECK(r.violations == 0);
    CHECK(r.inconclusive == 0);
    CHECK(r.confirmed == 500);
}

TEST_CASE("per-tuple count lower bound formula values") {
    // a^{a-s} (n+a-1)^s prod_{i=2}^{n-1}(n+a-i)^a
    CHECK(coloringbound_lower(2, 2, 0) == 4);
    CHECK(coloringbound_lower(2, 2, 1) == 6);
    CHECK(coloringbound_lower(2, 2, 2) == 9);
    CHECK(coloringbound_lower(3, 3, 0) == 27 * 64);     // a^a (n+a-2)^a
    CHECK(coloringbound_lower(3, 3, 1) == 9 * 5 * 64);  // a^{a-1} (n+a-1) (n+a-2)^a
    CHECK_THROWS(coloringbound_lower(3, 2, 0));         // defined only for n <= a
}

TEST_CASE("restricted count lower bound is positive and exact at s = 0") {
    IntervalScalar z = nminus1to1_lower(3, 3, 0);
    // s = 0: (n+a-2)^a * prod_{i=3}^n (n+a-i)^a = 4^3 * 3^3
    CHECK(z.lower_d() == 64 * 27);
    CHECK(z.upper_d() == 64 * 27);
    IntervalScalar w = nminus1to1_lower(3, 3, 2);
    CHECK(w.lower_d() > 0);
    CHECK(w.lower_d() <= w.upper_d());
}

TEST_CASE("key inequality holds on a spot grid with equality only at s = 0") {
    for (int n = 2; n <= 4; ++n)
        for (int a = n; a <= 8; ++a)
            for (int s = 0; s <= a; ++s) {
                KeyVerdict v = key_inequality_check(n, a, s);
                CAPTURE(n);
                CAPTURE(a);
                CAPTURE(s);
                CHECK(v.verdict == "holds");
                CHECK(v.rhs == mpz_class(1) << (n - 1));
            }
    KeyVerdict eq = key_inequality_check(3, 5, 0);
    CHECK(eq.lhs.lower_d() == 4.0);
    CHECK(eq.lhs.upper_d() == 4.0);
}

TEST_CASE("large-s regime forces the first term alone past the target") {
    CHECK(bigsineq_check(3, 4, 4));    // s = 4 > 0.73 * 5
    CHECK(bigsineq_check(4, 6, 6));
    CHECK_THROWS(bigsineq_check(3, 8, 2));  // precondition s > 0.73(n+a-2) fails
}

TEST_CASE("small-s regime sign polynomials and display") {
    for (int a = 4; a <= 12; ++a) CHECK(smallsineq_check(4, a, a / 3));
    for (int a = 3; a <= 12; ++a) CHECK(smallsineq_check(3, a, a / 3));
    CHECK(smallsineq_check(5, 5, 0));
}

TEST_CASE("two-row case of the key display") {
    for (int a = 2; a <= 12; ++a)
        for (int s = 0; s <= a; ++s) {
            CAPTURE(a);
            CAPTURE(s);
            CHECK(nis2_check(a, s));
        }
}

TEST_CASE("geometric-mean gluing step") {
    CHECK(amgm_glue_check(3, 4, 1));
    CHECK(amgm_glue_check(4, 6, 2));
    CHECK(amgm_glue_check(3, 10, 0));
}

TEST_CASE("calculus facts verify with certified derivatives on a coarse grid") {
    FactReport r = verify_analytic_facts(kDefaultPrecision, 16);
    CHECK(r.facts == 11);
    CHECK(r.cells > 0);
    CHECK(r.all_verified());
}
