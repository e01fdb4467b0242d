#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "relpos/errors.hpp"
#include "relpos/quadratic.hpp"
#include "relpos/rational.hpp"

using namespace relpos;

TEST_CASE("rationals reduce and normalize signs") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(7).is_integer());
    CHECK_THROWS_AS(Rational(1, 0), BadInput);
}

TEST_CASE("rational arithmetic") {
    Rational a(1, 6), b(1, 10);
    CHECK(a + b == Rational(4, 15));
    CHECK(a - b == Rational(1, 15));
    CHECK(a * b == Rational(1, 60));
    CHECK(a / b == Rational(5, 3));
    CHECK(-a == Rational(-1, 6));
    CHECK_FALSE(a < b);
    CHECK(b < a);
    CHECK(Rational(1, 3) > Rational(1, 4));
    CHECK_THROWS_AS(a / Rational(0), BadInput);
    CHECK(Rational(1, 3).str() == "1/3");
    CHECK(Rational(-4).str() == "-4");
}

TEST_CASE("rational overflow is detected, not wrapped") {
    Rational huge(std::int64_t{1} << 62);
    CHECK_THROWS_AS(huge * Rational(4), ArithmeticOverflow);
}

TEST_CASE("quadratic numbers normalize their discriminant") {
    QuadraticNumber root8(Rational(0), Rational(1), 8);
    CHECK(root8.discriminant() == 2);
    CHECK(root8.surd_coeff() == Rational(2));
    QuadraticNumber root9(Rational(1), Rational(1), 9);  // 1 + sqrt 9 = 4
    CHECK(root9.is_rational());
    CHECK(root9.as_rational() == Rational(4));
    QuadraticNumber zero_y(Rational(5), Rational(0), 7);
    CHECK(zero_y.discriminant() == 0);
    CHECK_THROWS_AS(QuadraticNumber(Rational(0), Rational(1), -5), BadInput);
}

TEST_CASE("quadratic field arithmetic") {
    QuadraticNumber tau(Rational(1, 2), Rational(1, 2), 5);
    // tau^2 = tau + 1.
    CHECK(tau * tau == tau + QuadraticNumber(Rational(1)));
    // 1/tau = tau - 1.
    CHECK(QuadraticNumber(Rational(1)) / tau == tau - QuadraticNumber(Rational(1)));
    CHECK(tau.conjugate() * tau == QuadraticNumber(Rational(-1)));
    CHECK(tau.norm() == Rational(-1));
    CHECK(tau.sign() == 1);
    CHECK(tau.conjugate().sign() == -1);
    CHECK((tau - tau).is_zero());
    CHECK(tau > QuadraticNumber(Rational(8, 5)));
    CHECK(tau < QuadraticNumber(Rational(13, 8)));
    QuadraticNumber root2(Rational(0), Rational(1), 2);
    CHECK_THROWS_AS(tau + root2, FieldMismatch);
    CHECK(tau.to_double() == doctest::Approx(1.6180339887).epsilon(1e-9));
}

TEST_CASE("mixing rationals into any field is fine") {
    QuadraticNumber tau(Rational(1, 2), Rational(1, 2), 5);
    QuadraticNumber two(Rational(2));
    CHECK((tau + two).discriminant() == 5);
    CHECK((two * tau).rational_part() == Rational(1));
}

TEST_CASE("square roots of rationals") {
    CHECK(QuadraticNumber::sqrt_of(Rational(9, 4)) == QuadraticNumber(Rational(3, 2)));
    QuadraticNumber r = QuadraticNumber::sqrt_of(Rational(8));
    CHECK(r.discriminant() == 2);
    CHECK(r.surd_coeff() == Rational(2));
    CHECK(r * r == QuadraticNumber(Rational(8)));
    QuadraticNumber half = QuadraticNumber::sqrt_of(Rational(1, 2));
    CHECK(half * half == QuadraticNumber(Rational(1, 2)));
    CHECK(QuadraticNumber::sqrt_of(Rational(0)).is_zero());
    CHECK_THROWS_AS(QuadraticNumber::sqrt_of(Rational(-1)), BadInput);
}

TEST_CASE("square roots inside a fixed field") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        // Build t at random and check sqrt(t^2) = |t|.
        std::int64_t d = std::vector<std::int64_t>{2, 3, 5, 7, 13}[rng() % 5];
        Rational x(static_cast<std::int64_t>(rng() % 19) - 9, 1 + static_cast<std::int64_t>(rng() % 4));
        Rational y(static_cast<std::int64_t>(rng() % 19) - 9, 1 + static_cast<std::int64_t>(rng() % 4));
        if (y.is_zero()) continue;
        QuadraticNumber t(x, y, d);
        auto root = sqrt_in_field(t * t);
        REQUIRE(root.has_value());
        CHECK(*root * *root == t * t);
        CHECK(root->sign() >= 0);
    }
    // 3 + 2 sqrt(2) = (1 + sqrt 2)^2.
    auto root = sqrt_in_field(QuadraticNumber(Rational(3), Rational(2), 2));
    REQUIRE(root.has_value());
    CHECK(*root == QuadraticNumber(Rational(1), Rational(1), 2));
    // 1 + sqrt 2 itself is not a square in Q(sqrt 2).
    CHECK_FALSE(sqrt_in_field(QuadraticNumber(Rational(1), Rational(1), 2)).has_value());
}

TEST_CASE("extended reals") {
    ExtendedQuad inf = ExtendedQuad::plus_infinity();
    CHECK_FALSE(inf.finite());
    CHECK(inf.str() == "+inf");
    ExtendedQuad v{QuadraticNumber(Rational(3, 2))};
    CHECK(v.finite());
    CHECK(v.value().as_rational() == Rational(3, 2));
}
