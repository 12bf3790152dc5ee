#include <sepset/surd.hpp>

#include "oracle_interval.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <stdexcept>

using sepset::Rational;
using sepset::Surd;
using sepset::surd_cmp;
using sepset::surd_linear;

namespace oracle = sepset::testing;

static oracle::Rat to_rat(const Rational& r) { return oracle::Rat(r.numerator(), r.denominator()); }

static int as_int(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

TEST_CASE("perfect squares collapse to rationals") {
    Surd s = Surd::sqrt_of(Rational(25, 4));
    CHECK(s.is_rational());
    CHECK(s.rational_part() == Rational(5, 2));
    CHECK(surd_cmp(s, Rational(1)) == std::strong_ordering::greater);

    CHECK(Surd::sqrt_of(Rational(0)).is_rational());
    CHECK(Surd::sqrt_of(Rational(0)).rational_part() == Rational(0));
    CHECK_THROWS_AS(Surd::sqrt_of(Rational(-1)), std::domain_error);
}

TEST_CASE("canonical form folds square factors and denominators") {
    CHECK(Surd(Rational(0), Rational(1), Rational(8)) == Surd(Rational(0), Rational(2), Rational(2)));
    // sqrt(1/2) = (1/2) sqrt(2)
    Surd half = Surd::sqrt_of(Rational(1, 2));
    CHECK(half.coefficient() == Rational(1, 2));
    CHECK(half.radicand() == Rational(2));
    // Rebuilding from the canonical fields is the identity.
    Surd s(Rational(3, 7), Rational(-5, 2), Rational(12));
    CHECK(Surd(s.rational_part(), s.coefficient(), s.radicand()) == s);
    CHECK(s.radicand() == Rational(3));
    CHECK(s.coefficient() == Rational(-5));
}

TEST_CASE("comparison against rationals") {
    CHECK(surd_cmp(Surd(Rational(2), Rational(1), Rational(2)), Rational(7, 2)) ==
          std::strong_ordering::less);
    CHECK(surd_cmp(Surd(Rational(0), Rational(1), Rational(2)), Rational(0)) ==
          std::strong_ordering::greater);
    CHECK(surd_cmp(Surd(Rational(1), Rational(-1), Rational(2)), Rational(0)) ==
          std::strong_ordering::less);
    // 3 - sqrt(4) compares equal to 1 after canonicalization.
    CHECK(surd_cmp(Surd(Rational(3), Rational(-1), Rational(4)), Rational(1)) ==
          std::strong_ordering::equal);
}

TEST_CASE("linear combinations stay in one extension or refuse") {
    auto sum = surd_linear(Surd(Rational(1), Rational(2), Rational(3)),
                           Surd(Rational(2), Rational(-1), Rational(3)));
    REQUIRE(sum.has_value());
    CHECK(*sum == Surd(Rational(3), Rational(1), Rational(3)));

    CHECK(!surd_linear(Surd(Rational(1), Rational(1), Rational(2)),
                       Surd(Rational(1), Rational(1), Rational(3)))
               .has_value());

    // sqrt(8) and -2 sqrt(2) cancel exactly.
    auto cancel = surd_linear(Surd(Rational(1), Rational(1), Rational(8)),
                              Surd(Rational(1), Rational(-2), Rational(2)));
    REQUIRE(cancel.has_value());
    CHECK(cancel->is_rational());
    CHECK(cancel->rational_part() == Rational(2));
}

TEST_CASE("squaring") {
    Surd s(Rational(1), Rational(1), Rational(2));
    CHECK(s.squared() == Surd(Rational(3), Rational(2), Rational(2)));
    CHECK(Surd(Rational(0), Rational(3), Rational(5)).squared() == Surd(Rational(45)));
    CHECK(s.negated().squared() == s.squared());
    CHECK(s.scaled(Rational(0)) == Surd());
    CHECK(s.scaled(Rational(-2)) == Surd(Rational(-2), Rational(-2), Rational(2)));
}

TEST_CASE("randomized comparisons agree with the interval oracle") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<int> num(-1000, 1000);
    std::uniform_int_distribution<int> den(1, 1000);
    std::uniform_int_distribution<int> rad_num(0, 1000);
    std::uniform_int_distribution<int> rad_den(1, 50);

    for (int iter = 0; iter < 10000; ++iter) {
        Rational a(num(rng), den(rng));
        Rational b(num(rng), den(rng));
        Rational c(rad_num(rng), rad_den(rng));
        Rational r(num(rng), den(rng));

        Surd s(a, b, c);
        int got = as_int(surd_cmp(s, r));

        // Raw value a + b sqrt(p/q) = a + (b/q) sqrt(p q), fed to the oracle
        // before any canonicalization.
        oracle::Rat coeff = to_rat(b) / oracle::Rat(c.denominator());
        oracle::Int radicand = c.numerator() * c.denominator();
        int expected = oracle::oracle_cmp(to_rat(a), coeff, radicand, to_rat(r));

        if (got != expected) {
            CAPTURE(a.str(), b.str(), c.str(), r.str(), s.str(), got, expected);
            FAIL("surd comparison disagrees with interval oracle");
        }
    }
    SUCCEED();
}

TEST_CASE("constructed equalities are detected") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-60, 60);
    std::uniform_int_distribution<int> den(1, 20);
    std::uniform_int_distribution<int> root(0, 40);
    for (int iter = 0; iter < 500; ++iter) {
        Rational a(num(rng), den(rng));
        Rational b(num(rng), den(rng));
        Rational k(root(rng), den(rng));
        // a + b sqrt(k^2) == a + b k
        Surd s(a, b, square(k));
        CHECK(surd_cmp(s, a + b * k) == std::strong_ordering::equal);
        CHECK(s.is_rational());
    }
}
