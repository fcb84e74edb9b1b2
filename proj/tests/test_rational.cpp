#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "tessera/rational.hpp"

using tessera::QuadraticSurd;
using tessera::Rational;
using tessera::RationalOverflow;

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, -7).den() == 1);
    CHECK(Rational(6, 3).is_integer());
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
    Rational a(1, 6), b(1, 10);
    CHECK(a + b == Rational(4, 15));
    CHECK(a - b == Rational(1, 15));
    CHECK(a * b == Rational(1, 60));
    CHECK(a / b == Rational(5, 3));
    CHECK(-a == Rational(-1, 6));

    // 1 - 7/2 + 7/3, the canonical curvature-style sum.
    Rational k = Rational(1) - Rational(7, 2) + Rational(7, 3);
    CHECK(k == Rational(-1, 6));

    // Accumulate many small terms and come back to an integer.
    Rational s(0);
    for (int i = 0; i < 42; ++i) s += Rational(1, 42);
    CHECK(s == Rational(1));

    CHECK_THROWS_AS(a / Rational(0), std::invalid_argument);
}

TEST_CASE("rational ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 3) > Rational(2));
    CHECK(Rational(4, 2) <= Rational(2));
    CHECK(Rational(5, 7).sign() == 1);
    CHECK(Rational(-5, 7).sign() == -1);
    CHECK(Rational(0).sign() == 0);
}

TEST_CASE("rational floor") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(6, 3).floor() == 2);
    CHECK(Rational(0).floor() == 0);
    // floor(n^2/(4q) + n/2 + 1) for q = 3, n = 7.
    Rational w = Rational(49, 12) + Rational(7, 2) + Rational(1);
    CHECK(w.floor() == 8);
}

TEST_CASE("rational parse and print") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK(Rational::parse("17") == Rational(17));
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK(Rational(-8, 2).str() == "-4");
    CHECK_THROWS_AS(Rational::parse("x/y"), tessera::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/2z"), tessera::ParseError);
}

TEST_CASE("rational overflow is detected, not wrapped") {
    Rational big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * Rational(8), RationalOverflow);
    Rational nearmax(INT64_MAX - 1, 1);
    CHECK_THROWS_AS(nearmax + nearmax, RationalOverflow);
    // Reduction can rescue large intermediates.
    Rational x(INT64_MAX / 3, 5), y(5, INT64_MAX / 3);
    CHECK(x * y == Rational(1));
}

TEST_CASE("surd collapses perfect squares") {
    QuadraticSurd s(Rational(1), Rational(3), 9);  // 1 + 3*sqrt(9) = 10
    CHECK(s.root() == 0);
    CHECK(s.rational_part() == Rational(10));
    CHECK(s.sign() == 1);
}

TEST_CASE("surd sign analysis") {
    // sqrt(5) - 2 > 0, sqrt(5) - 9/4 < 0 (sqrt5 = 2.2360...).
    CHECK(QuadraticSurd(Rational(-2), Rational(1), 5).sign() == 1);
    CHECK(QuadraticSurd(Rational(-9, 4), Rational(1), 5).sign() == -1);
    // 3 - sqrt(9) = 0 via collapse; 7/3 - sqrt(49/9) needs cross terms: use 7 - 3*sqrt(5) > 0 high side.
    CHECK(QuadraticSurd(Rational(7), Rational(-3), 5).sign() == 1);    // 49 > 45
    CHECK(QuadraticSurd(Rational(-7), Rational(3), 5).sign() == -1);   // mirrored
    CHECK(QuadraticSurd(Rational(0), Rational(0), 5).sign() == 0);
    CHECK(QuadraticSurd(Rational(0), Rational(-2), 7).sign() == -1);
    // Exact zero with mixed signs: 2*sqrt(4) - 4 after collapse.
    CHECK(QuadraticSurd(Rational(-4), Rational(2), 4).sign() == 0);
}

TEST_CASE("surd comparisons against rationals") {
    QuadraticSurd golden(Rational(1, 2), Rational(1, 2), 5);  // (1+sqrt5)/2
    CHECK(golden > Rational(8, 5));
    CHECK(golden < Rational(13, 8));
    CHECK(golden.to_double() == doctest::Approx(1.6180339887).epsilon(1e-9));

    QuadraticSurd alpha(Rational(3, 2), Rational(1, 2), 5);  // (3+sqrt5)/2
    CHECK(alpha > Rational(2));
    CHECK(alpha < Rational(3));
    CHECK(alpha.to_double() == doctest::Approx(2.6180339887).epsilon(1e-9));

    // Affine operations stay exact: alpha - 1 == golden.
    QuadraticSurd diff = alpha - Rational(1) - golden;
    CHECK(diff.sign() == 0);

    // Scaling: 21 * (alpha - 1) vs 56 decides a telescoped-sum comparison.
    QuadraticSurd scaled = (alpha - Rational(1)) * Rational(21);
    CHECK(scaled < Rational(56));   // 21*1.618 = 33.97...
    CHECK(scaled > Rational(33));
}

TEST_CASE("surd mixing distinct radicands is rejected") {
    QuadraticSurd a(Rational(0), Rational(1), 5), b(Rational(0), Rational(1), 7);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_NOTHROW(a + QuadraticSurd(Rational(3)));  // rational surd merges freely
}

TEST_CASE("surd handles large layer-ratio comparisons") {
    // Ratios with ~1e10 numerators against (1+sqrt5)/2 = 1.61803398874989...;
    // the squaring path must stay inside 128 bits and resolve the 11th digit.
    QuadraticSurd bound(Rational(1, 2), Rational(1, 2), 5);
    Rational low(16180339887LL, 10000000000LL);    // 1.6180339887 < bound
    Rational high(16180339888LL, 10000000000LL);   // 1.6180339888 > bound
    CHECK((QuadraticSurd(low) - bound).sign() == -1);
    CHECK((QuadraticSurd(high) - bound).sign() == 1);
}
