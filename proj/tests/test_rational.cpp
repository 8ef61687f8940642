#include <doctest.h>

#include "longrun/rational.hpp"

#include <stdexcept>

using namespace longrun;

TEST_CASE("rational arithmetic normalizes") {
    Rational a(2, 4);
    CHECK(numerator(a) == 1);
    CHECK(denominator(a) == 2);
    // division normalizes the sign into the numerator
    Rational c = Rational(3) / Rational(-6);
    CHECK(numerator(c) == -1);
    CHECK(denominator(c) == 2);

    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(-Rational(2, 3) == Rational(-2, 3));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
}

TEST_CASE("rational parsing accepts integers, fractions, decimals") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-7/2") == Rational(-7, 2));
    CHECK(parse_rational("5") == Rational(5));
    CHECK(parse_rational("-12") == Rational(-12));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("-0.1") == Rational(-1, 10));
    CHECK(parse_rational(" 2/6 ") == Rational(1, 3));
}

TEST_CASE("rational parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1e5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.2345678901234"), std::invalid_argument);
}

TEST_CASE("decimal conversion is exact for short decimals") {
    CHECK(rational_from_decimal(0.5) == Rational(1, 2));
    CHECK(rational_from_decimal(0.1) == Rational(1, 10));
    CHECK(rational_from_decimal(-2.75) == Rational(-11, 4));
    CHECK(rational_from_decimal(3.0) == Rational(3));
}

TEST_CASE("format round-trips") {
    for (const char* s : {"3/4", "-7/2", "5", "0", "-1/3"}) {
        Rational r = parse_rational(s);
        CHECK(parse_rational(format_rational(r)) == r);
    }
    CHECK(format_rational(Rational(3, 4)) == "3/4");
    CHECK(format_rational(Rational(5)) == "5");
    CHECK(format_rational(Rational(-1, 3)) == "-1/3");
}

TEST_CASE("ceil_div on exact rationals") {
    CHECK(ceil_div(Rational(7), Rational(2)) == 4);
    CHECK(ceil_div(Rational(-7), Rational(2)) == -3);
    CHECK(ceil_div(Rational(6), Rational(3)) == 2);
    CHECK(ceil_div(Rational(1, 3), Rational(1, 2)) == 1);
    CHECK(ceil_div(Rational(0), Rational(5)) == 0);
}

TEST_CASE("to_double is accurate") {
    CHECK(to_double(Rational(1, 3)) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(to_double(Rational(-10, 19)) == doctest::Approx(-10.0 / 19.0).epsilon(1e-15));
}
