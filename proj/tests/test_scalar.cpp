#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rank1det/random.hpp"
#include "rank1det/rational.hpp"

using rank1det::GaussianRational;
using rank1det::Rational;

TEST_CASE("rationals are stored reduced with positive denominator") {
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(2, -4).to_string() == "-1/2");
    CHECK(Rational(-6, -3).to_string() == "2");
    CHECK(Rational(0, 7) == Rational(0));
}

TEST_CASE("rational arithmetic is exact") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK(a.sign() == 1);
    CHECK((-a).sign() == -1);
    CHECK(Rational(0).is_zero());
    CHECK(Rational(-5, 7).abs() == Rational(5, 7));
}

TEST_CASE("rational division by zero throws") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational powers handle negative exponents") {
    CHECK(Rational::pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(Rational::pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(Rational::pow(Rational(5), 0) == Rational(1));
    CHECK(Rational::pow(Rational(-2), -3) == Rational(-1, 8));
    CHECK_THROWS_AS(Rational::pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("rational string conversion round-trips") {
    CHECK(Rational::from_string("11") == Rational(11));
    CHECK(Rational::from_string("-192/35") == Rational(-192, 35));
    CHECK(Rational::from_string("2/4") == Rational(1, 2));
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("a/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1.5"), std::invalid_argument);

    rank1det::Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        const Rational r(rng.int_in(-1000000, 1000000), rng.int_in(1, 999983));
        CHECK(Rational::from_string(r.to_string()) == r);
    }
}

TEST_CASE("gaussian rational arithmetic") {
    const GaussianRational u(Rational(1), Rational(2));
    const GaussianRational v(Rational(3), Rational(4));
    CHECK(u * v == GaussianRational(Rational(-5), Rational(10)));
    CHECK(u + v == GaussianRational(Rational(4), Rational(6)));
    CHECK(u.conj() == GaussianRational(Rational(1), Rational(-2)));
    CHECK(u.norm_sq() == Rational(5));
    CHECK((u / v) * v == u);
    CHECK_THROWS_AS(u / GaussianRational(0), std::domain_error);

    const GaussianRational i(Rational(0), Rational(1));
    CHECK(i * i == GaussianRational(-1));
}

TEST_CASE("rational to_double is faithful for representable values") {
    CHECK(Rational(1, 4).to_double() == 0.25);
    CHECK(Rational(-3).to_double() == -3.0);
    CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}
