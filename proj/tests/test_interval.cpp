#include <doctest.h>

#include "lcw/interval.hpp"

using namespace lcw;

namespace {

bool encloses(const IntervalScalar& x, double v) {
    return x.lower_d() <= v && v <= x.upper_d();
}

}  // namespace

TEST_CASE("exact values are point intervals") {
    IntervalScalar x = IntervalScalar::exact(7);
    CHECK(x.lower_d() == 7.0);
    CHECK(x.upper_d() == 7.0);
    CHECK(IntervalScalar::exact(0).is_exact_zero());
    CHECK(!x.is_exact_zero());
    mpz_class big("123456789012345678901234567890");
    IntervalScalar y = IntervalScalar::exact(big, 256);
    CHECK(y.ge(IntervalScalar::exact(0, 256)));
    CHECK(y.to_string().find("1.234567890123456789e+29") != std::string::npos);
}

TEST_CASE("ratio encloses the true rational") {
    IntervalScalar third = IntervalScalar::ratio(1, 3);
    CHECK(third.lower_d() < third.upper_d());  // 1/3 is not a binary float
    CHECK(encloses(third, 1.0 / 3.0));
    IntervalScalar half = IntervalScalar::ratio(mpq_class(1, 2));
    CHECK(half.lower_d() == 0.5);
    CHECK(half.upper_d() == 0.5);
}

TEST_CASE("arithmetic encloses the real result") {
    IntervalScalar a = IntervalScalar::ratio(1, 3);
    IntervalScalar b = IntervalScalar::ratio(1, 7);
    CHECK(encloses(a + b, 10.0 / 21.0));
    CHECK(encloses(a - b, 4.0 / 21.0));
    CHECK(encloses(a * b, 1.0 / 21.0));
    CHECK(encloses(a / b, 7.0 / 3.0));
    // 1/3 + 1/7 stays a tight enclosure (width limited only by double readout)
    IntervalScalar s = a + b;
    CHECK(s.upper_d() - s.lower_d() < 1e-15);
}

TEST_CASE("division by an interval containing zero throws") {
    // a thin enclosure of zero still contains zero
    IntervalScalar spans = IntervalScalar::ratio(-1, 3) + IntervalScalar::ratio(1, 3);
    CHECK_THROWS(IntervalScalar::exact(1) / spans);
    CHECK_THROWS(spans.log());
}

TEST_CASE("exp and log are inverse up to enclosure") {
    IntervalScalar x = IntervalScalar::ratio(3, 2);
    IntervalScalar back = x.exp().log();
    CHECK(back.lower_d() <= 1.5);
    CHECK(back.upper_d() >= 1.5);
    CHECK(encloses(IntervalScalar::exact(1).exp(), 2.718281828459045));
    CHECK(encloses(IntervalScalar::exact(8).log(), 2.0794415416798357));
}

TEST_CASE("integer powers match repeated multiplication") {
    IntervalScalar x = IntervalScalar::ratio(5, 4);
    IntervalScalar p = x.pow_int(8);
    double expect = 5.9604644775390625;  // (5/4)^8 exactly
    CHECK(encloses(p, expect));
    CHECK(p.upper_d() - p.lower_d() < 1e-25);
    CHECK(encloses(x.pow_mpz(mpz_class(8)), expect));
    // general pow agrees on integer exponents
    CHECK(encloses(x.pow(IntervalScalar::exact(8)), expect));
    // exact-zero base with a positive exponent is exact zero
    CHECK(IntervalScalar::exact(0).pow(IntervalScalar::ratio(1, 2)).is_exact_zero());
}

TEST_CASE("fractional powers: 2^(1/2) encloses sqrt(2)") {
    IntervalScalar r = IntervalScalar::exact(2).pow(IntervalScalar::ratio(1, 2));
    CHECK(encloses(r, 1.4142135623730951));
    CHECK(r.upper_d() - r.lower_d() < 1e-15);
}

TEST_CASE("comparisons are certified, not approximate") {
    IntervalScalar a = IntervalScalar::ratio(1, 3);
    IntervalScalar b = IntervalScalar::ratio(1, 2);
    CHECK(a.lt(b));
    CHECK(b.gt(a));
    CHECK(!a.lt(a));  // an interval overlapping itself certifies no strict order
    CHECK(!a.gt(a));
    // nonzero-width intervals cannot even certify <= against themselves
    CHECK(!a.le(a));
    IntervalScalar point = IntervalScalar::exact(3);
    CHECK(point.le(point));
    CHECK(point.ge(point));
}

TEST_CASE("precision propagates and higher precision tightens enclosures") {
    IntervalScalar coarse = IntervalScalar::ratio(1, 3, 24);
    IntervalScalar fine = IntervalScalar::ratio(1, 3, 256);
    CHECK(coarse.upper_d() - coarse.lower_d() > fine.upper_d() - fine.lower_d());
    CHECK(fine.precision_bits() == 256);
}

TEST_CASE("copy, move, and assignment preserve the enclosure") {
    IntervalScalar a = IntervalScalar::ratio(22, 7);
    IntervalScalar b = a;
    IntervalScalar c(std::move(b));
    IntervalScalar d(64);
    d = c;
    CHECK(encloses(d, 22.0 / 7.0));
    CHECK(d.precision_bits() == a.precision_bits());
}
