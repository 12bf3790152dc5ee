#include <sepset/exact_value.hpp>

#include "oracle_interval.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <stdexcept>

using sepset::ExactValue;
using sepset::RadicalSum;
using sepset::Rational;
using sepset::Surd;
using sepset::triangle_holds;

namespace oracle = sepset::testing;

static oracle::Rat to_rat(const Rational& r) { return oracle::Rat(r.numerator(), r.denominator()); }

TEST_CASE("radical sums canonicalize and multiply with the gcd rule") {
    RadicalSum r8 = RadicalSum::sqrt_of(Rational(8));
    CHECK(r8 == RadicalSum::from_surd(Surd(Rational(0), Rational(2), Rational(2))));
    REQUIRE(r8.radical_terms().size() == 1);
    CHECK(r8.radical_terms().begin()->second == Rational(2));

    RadicalSum r2 = RadicalSum::sqrt_of(Rational(2));
    RadicalSum r3 = RadicalSum::sqrt_of(Rational(3));
    CHECK(r2 * r2 == RadicalSum(Rational(2)));
    CHECK(r2 * r3 == RadicalSum::sqrt_of(Rational(6)));
    // sqrt(6) * sqrt(10) = 2 sqrt(15)
    CHECK(RadicalSum::sqrt_of(Rational(6)) * RadicalSum::sqrt_of(Rational(10)) ==
          RadicalSum::sqrt_of(Rational(15)).scaled(Rational(2)));

    RadicalSum prod = (RadicalSum(Rational(1)) + r2) * (RadicalSum(Rational(1)) + r3);
    RadicalSum expect = RadicalSum(Rational(1)) + r2 + r3 + RadicalSum::sqrt_of(Rational(6));
    CHECK(prod == expect);

    CHECK((r8 - r2.scaled(Rational(2))).is_zero());
}

TEST_CASE("multi-radical signs") {
    RadicalSum r2 = RadicalSum::sqrt_of(Rational(2));
    RadicalSum r3 = RadicalSum::sqrt_of(Rational(3));
    CHECK((RadicalSum(Rational(1)) + r2 - r3).sign() == 1);
    CHECK((r2 + r3 - RadicalSum::sqrt_of(Rational(5))).sign() == 1);
    CHECK((r2 + r3 - RadicalSum::sqrt_of(Rational(10))).sign() == -1);
    CHECK((RadicalSum(Rational(3)) - r2 - r3).sign() == -1);
    RadicalSum sq = (RadicalSum(Rational(1)) + r2) * (RadicalSum(Rational(1)) + r2);
    CHECK((sq - RadicalSum(Rational(3)) - r2.scaled(Rational(2))).sign() == 0);
    CHECK(RadicalSum().sign() == 0);
    CHECK(RadicalSum(Rational(-1, 7)).compare(Rational(0)) == std::strong_ordering::less);
}

TEST_CASE("randomized radical sum signs agree with the interval oracle") {
    std::mt19937_64 rng(991);
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 10);
    std::uniform_int_distribution<int> rad(2, 60);

    for (int iter = 0; iter < 4000; ++iter) {
        Rational q0(num(rng), den(rng));
        RadicalSum sum(q0);
        std::vector<oracle::RadTerm> raw;
        int nterms = 1 + int(rng() % 3);
        for (int t = 0; t < nterms; ++t) {
            Rational q(num(rng), den(rng));
            int m = rad(rng);
            sum = sum + RadicalSum::sqrt_of(Rational(m)).scaled(q);
            raw.push_back({to_rat(q), oracle::Int(m)});
        }
        auto expected = oracle::interval_sign(to_rat(q0), raw);
        int got = sum.sign();
        if (expected) {
            if (got != *expected) {
                CAPTURE(sum.str(), got, *expected);
                FAIL("sign disagrees with interval oracle");
            }
        } else {
            CHECK(got == 0);
        }
    }
    SUCCEED();
}

TEST_CASE("randomized products keep exact signs") {
    std::mt19937_64 rng(1717);
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> rad(2, 30);
    for (int iter = 0; iter < 2000; ++iter) {
        Rational a0(num(rng)), a1(num(rng)), b0(num(rng)), b2(num(rng));
        int m1 = rad(rng), m2 = rad(rng);
        RadicalSum x = RadicalSum(a0) + RadicalSum::sqrt_of(Rational(m1)).scaled(a1);
        RadicalSum y = RadicalSum(b0) + RadicalSum::sqrt_of(Rational(m2)).scaled(b2);
        RadicalSum prod = x * y;

        std::vector<oracle::RadTerm> raw = {{to_rat(a0 * b2), oracle::Int(m2)},
                                            {to_rat(a1 * b0), oracle::Int(m1)},
                                            {to_rat(a1 * b2), oracle::Int(m1) * m2}};
        auto expected = oracle::interval_sign(to_rat(a0 * b0), raw);
        if (expected)
            CHECK(prod.sign() == *expected);
        else
            CHECK(prod.sign() == 0);
    }
}

TEST_CASE("square roots classify into rational, surd, or deferred root") {
    ExactValue five_halves = ExactValue::sqrt_of(Rational(25, 4));
    REQUIRE(five_halves.is_rational());
    CHECK(five_halves.as_rational() == Rational(5, 2));

    ExactValue root8 = ExactValue::sqrt_of(Rational(8));
    REQUIRE(root8.is_surd());
    CHECK(root8.as_surd() == Surd(Rational(0), Rational(2), Rational(2)));
    CHECK_THROWS_AS(ExactValue::sqrt_of(Rational(-1)), std::domain_error);

    // sqrt(3 + 2 sqrt(2)) denests to 1 + sqrt(2).
    RadicalSum nested = RadicalSum(Rational(3)) + RadicalSum::sqrt_of(Rational(2)).scaled(Rational(2));
    ExactValue denested = ExactValue::sqrt_of_sum(nested);
    REQUIRE(denested.is_surd());
    CHECK(denested.as_surd() == Surd(Rational(1), Rational(1), Rational(2)));

    // sqrt(1 + sqrt(2)) does not denest and stays symbolic.
    RadicalSum stuck = RadicalSum(Rational(1)) + RadicalSum::sqrt_of(Rational(2));
    ExactValue root = ExactValue::sqrt_of_sum(stuck);
    REQUIRE(root.is_root());
    CHECK(root.squared() == stuck);
    CHECK(root.compare(Rational(3, 2)) == std::strong_ordering::greater);
    CHECK(root.compare(Rational(8, 5)) == std::strong_ordering::less);
    CHECK(root.compare(Rational(-1)) == std::strong_ordering::greater);

    RadicalSum negative = RadicalSum(Rational(-3)) + RadicalSum::sqrt_of(Rational(2));
    CHECK_THROWS_AS(ExactValue::sqrt_of_sum(negative), std::domain_error);
}

TEST_CASE("same_value crosses representations") {
    ExactValue a = ExactValue::sqrt_of(Rational(8));
    ExactValue b(Surd(Rational(0), Rational(2), Rational(2)));
    CHECK(a.same_value(b));
    CHECK(a == b);

    RadicalSum nested = RadicalSum(Rational(3)) + RadicalSum::sqrt_of(Rational(2)).scaled(Rational(2));
    CHECK(ExactValue::sqrt_of_sum(nested).same_value(ExactValue(Surd(Rational(1), Rational(1), Rational(2)))));

    CHECK(!ExactValue(Rational(2)).same_value(ExactValue(Rational(-2))));
    CHECK(!ExactValue(Rational(2)).same_value(ExactValue::sqrt_of(Rational(2))));
}

TEST_CASE("approximate values compare within tolerance") {
    ExactValue ap = ExactValue::approx(1.0, 0.1);
    CHECK(!ap.is_exact());
    CHECK(ap.compare(Rational(1)) == std::strong_ordering::equal);
    CHECK(ap.compare(Rational(21, 20)) == std::strong_ordering::equal);
    CHECK(ap.compare(Rational(2)) == std::strong_ordering::less);
    CHECK(ap.compare(Rational(1, 2)) == std::strong_ordering::greater);
    CHECK_THROWS_AS(ExactValue::approx(-1.0, 0.1), std::domain_error);
    CHECK_THROWS_AS(ExactValue::approx(1.0, -0.1), std::domain_error);
}

TEST_CASE("scaling by positive rationals") {
    CHECK(ExactValue::sqrt_of(Rational(2)).scaled(Rational(3)) ==
          ExactValue(Surd(Rational(0), Rational(3), Rational(2))));
    RadicalSum stuck = RadicalSum(Rational(1)) + RadicalSum::sqrt_of(Rational(2));
    ExactValue scaled = ExactValue::sqrt_of_sum(stuck).scaled(Rational(2));
    CHECK(scaled.squared() == stuck.scaled(Rational(4)));
    CHECK_THROWS_AS(ExactValue(Rational(1)).scaled(Rational(0)), std::domain_error);
    CHECK_THROWS_AS(ExactValue(Rational(1)).scaled(Rational(-1)), std::domain_error);
}

TEST_CASE("doubles convert exactly") {
    CHECK(ExactValue::double_to_rational(0.25) == Rational(1, 4));
    CHECK(ExactValue::double_to_rational(-1.5) == Rational(-3, 2));
    CHECK(ExactValue::double_to_rational(0.1).to_double() == 0.1);
    CHECK(ExactValue::double_to_rational(0.0) == Rational(0));
    CHECK_THROWS_AS(ExactValue::double_to_rational(1.0 / 0.0), std::domain_error);
}

TEST_CASE("triangle decision") {
    ExactValue one(Rational(1));
    CHECK(triangle_holds(one, one, one));
    CHECK(triangle_holds(ExactValue(Rational(2)), one, one));
    CHECK(!triangle_holds(ExactValue(Rational(5, 2)), one, one));
    CHECK(triangle_holds(ExactValue::sqrt_of(Rational(2)), one, one));
    CHECK(!triangle_holds(ExactValue(Rational(3)), ExactValue::sqrt_of(Rational(2)),
                          ExactValue::sqrt_of(Rational(2))));
    RadicalSum stuck = RadicalSum(Rational(1)) + RadicalSum::sqrt_of(Rational(2));
    CHECK(triangle_holds(ExactValue::sqrt_of_sum(stuck), one, one));
}

TEST_CASE("randomized triangle decisions agree with the interval oracle") {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<int> coeff(0, 10);
    std::uniform_int_distribution<int> rad(2, 30);
    std::uniform_int_distribution<int> pick(0, 1);

    auto draw = [&](oracle::Rat& q0, std::vector<oracle::RadTerm>& raw, int side) -> ExactValue {
        if (pick(rng)) {
            Rational q(coeff(rng));
            q0 += oracle::Rat(side) * to_rat(q);
            return ExactValue(q);
        }
        Rational q(coeff(rng));
        int m = rad(rng);
        raw.push_back({oracle::Rat(side) * to_rat(q), oracle::Int(m)});
        return ExactValue(Surd(Rational(0), q, Rational(m)));
    };

    for (int iter = 0; iter < 2000; ++iter) {
        oracle::Rat q0 = 0;
        std::vector<oracle::RadTerm> raw;
        ExactValue a = draw(q0, raw, -1);
        ExactValue b = draw(q0, raw, 1);
        ExactValue c = draw(q0, raw, 1);
        bool got = triangle_holds(a, b, c);
        auto margin = oracle::interval_sign(q0, raw);  // sign of b + c - a
        bool expected = !margin || *margin >= 0;
        if (got != expected) {
            CAPTURE(a.str(), b.str(), c.str(), got, expected);
            FAIL("triangle decision disagrees with interval oracle");
        }
    }
    SUCCEED();
}
