#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pwt/errors.hpp"
#include "pwt/rational.hpp"
#include "pwt/rng.hpp"

using pwt::Rational;

TEST_CASE("canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, -7) == Rational(0));
    CHECK(Rational(0).to_string() == "0/1");
    CHECK(Rational(3, 4).to_string() == "3/4");
    CHECK_THROWS_AS(Rational(1, 0), pwt::ValidationError);
}

TEST_CASE("parsing") {
    CHECK(Rational::from_string("3/4") == Rational(3, 4));
    CHECK(Rational::from_string("-3/4") == Rational(-3, 4));
    CHECK(Rational::from_string("7") == Rational(7));
    CHECK(Rational::from_string("6/8") == Rational(3, 4));
    CHECK_THROWS_AS(Rational::from_string("0.75"), pwt::ValidationError);
    CHECK_THROWS_AS(Rational::from_string("1e-3"), pwt::ValidationError);
    CHECK_THROWS_AS(Rational::from_string("1/2/3"), pwt::ValidationError);
    CHECK_THROWS_AS(Rational::from_string("1/0"), pwt::ValidationError);
}

TEST_CASE("field identities on random values") {
    pwt::Rng rng(5);
    auto rand_q = [&] {
        long long n = static_cast<long long>(rng.below(2001)) - 1000;
        long long d = 1 + static_cast<long long>(rng.below(64));
        return Rational(n, d);
    };
    for (int i = 0; i < 2000; ++i) {
        Rational a = rand_q(), b = rand_q(), c = rand_q();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}

TEST_CASE("ordering is exact") {
    CHECK(Rational(1, 3) < Rational(34, 100));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(1000000007, 1000000009) < Rational(1));
}

TEST_CASE("floor and frac") {
    CHECK(Rational(7, 2).floor().to_ll() == 3);
    CHECK(Rational(-7, 2).floor().to_ll() == -4);
    CHECK(Rational(-3).floor().to_ll() == -3);
    CHECK(Rational(7, 2).frac() == Rational(1, 2));
    CHECK(Rational(-7, 2).frac() == Rational(1, 2));
    CHECK(Rational(5, 4).frac() == Rational(1, 4));
    CHECK(Rational(1).frac() == Rational(0));
    pwt::Rng rng(17);
    for (int i = 0; i < 1000; ++i) {
        Rational r(static_cast<long long>(rng.below(400)) - 200, 1 + static_cast<long long>(rng.below(32)));
        Rational f = r.frac();
        CHECK(f >= Rational(0));
        CHECK(f < Rational(1));
        CHECK((r - f).is_integer());
    }
}
