#include <catch2/catch_amalgamated.hpp>

#include "padic/number.hpp"

#include "test_support.hpp"

using namespace padic;
using test_support::make_rng;
using test_support::random_int;
using test_support::random_padic;

namespace {
const i64 kPrimes[] = {2, 3, 5, 7, 13, 29};
}

TEST_CASE("from_rational canonical expansions") {
    SECTION("constant one") {
        const PadicNumber x = from_rational(1, 1, 5, 4);
        REQUIRE(x.valuation() == 0);
        REQUIRE(x.leading_digit() == 1);
        REQUIRE(x.unit() == 1);
        REQUIRE(x.abs_precision() == 4);
    }
    SECTION("minus one is all (p-1) digits") {
        const PadicNumber x = from_rational(-1, 1, 5, 4);
        REQUIRE(x.valuation() == 0);
        REQUIRE(x.digits() == std::vector<i64>{4, 4, 4, 4});
    }
    SECTION("one third mod 25") {
        const PadicNumber x = from_rational(1, 3, 5, 2);
        REQUIRE(x.valuation() == 0);
        REQUIRE(x.digits() == std::vector<i64>{2, 3});
        // oracle: 3 * 17 == 1 (mod 25)
        REQUIRE(x.unit() == 17);
        REQUIRE((3 * 17) % 25 == 1);
    }
    SECTION("ten in Q_5 has valuation one") {
        const PadicNumber x = from_rational(10, 1, 5, 4);
        REQUIRE(x.valuation() == 1);
        REQUIRE(x.leading_digit() == 2);
    }
    SECTION("zero denominator") {
        REQUIRE_THROWS_AS(from_rational(1, 0, 5, 4), Error);
        try {
            from_rational(1, 0, 5, 4);
        } catch (const Error& e) {
            REQUIRE(e.code() == ErrorCode::ZeroDenominator);
        }
    }
    SECTION("numerator divisible beyond precision collapses to zero") {
        const PadicNumber x = from_rational(625, 1, 5, 3);
        REQUIRE(x.is_zero_to_precision());
        REQUIRE(x.abs_precision() == 3);
    }
}

TEST_CASE("addition and the strong triangle inequality") {
    SECTION("norms of different size: |5 + 1| = max") {
        const PadicNumber s = add(from_integer(5, 5, 8), from_integer(1, 5, 8));
        REQUIRE(norm(s) == NormValue{false, 0});
    }
    SECTION("1 + (-1) cancels to zero") {
        const PadicNumber s = add(from_integer(1, 5, 6), from_integer(-1, 5, 6));
        REQUIRE(s.is_zero_to_precision());
    }
    SECTION("1/3 + 2/3 = 1") {
        const PadicNumber s = add(from_rational(1, 3, 5, 6), from_rational(2, 3, 5, 6));
        REQUIRE(equals_to_precision(s, one(5, 6)));
    }
    SECTION("prime mismatch") {
        REQUIRE_THROWS_AS(add(from_integer(1, 3, 4), from_integer(1, 5, 4)), Error);
    }
}

TEST_CASE("multiplication, inversion, division") {
    SECTION("5 * (1/5) = 1 in Q_5") {
        const PadicNumber x = from_integer(5, 5, 8);
        REQUIRE(equals_to_precision(mul(x, invert(x)), one(5, 7)));
    }
    SECTION("invert(3) equals from_rational(1,3)") {
        const PadicNumber x = invert(from_integer(3, 5, 2));
        REQUIRE(x.digits() == std::vector<i64>{2, 3});
        REQUIRE(x == from_rational(1, 3, 5, 2));
    }
    SECTION("theta squared for p=3, J=-1") {
        const PadicNumber theta = from_rational(1, 9, 3, 44); // 3^(2J), J = -1
        const PadicNumber theta_sq = mul(theta, theta);
        REQUIRE(theta_sq.valuation() == -4);
        REQUIRE(norm(theta_sq) == NormValue{false, -4});
    }
    SECTION("inverting zero-to-precision fails") {
        try {
            invert(PadicNumber::zero(5, 10));
            FAIL("expected DivisionByZeroToPrecision");
        } catch (const Error& e) {
            REQUIRE(e.code() == ErrorCode::DivisionByZeroToPrecision);
        }
    }
}

TEST_CASE("norm values") {
    REQUIRE(norm(PadicNumber::zero(3, 8)).is_zero);
    REQUIRE(norm(from_integer(56, 3, 8)) == NormValue{false, 0}); // 56 = 2^3 * 7
    // |p^(4J) + 3|_p = p^(-4J) for J < 0 (ultrametric dominance)
    const PadicNumber x = add(from_rational(1, 625, 5, 40), from_integer(3, 5, 40));
    REQUIRE(norm(x) == NormValue{false, -4});
}

TEST_CASE("ultrametric and multiplicativity properties") {
    auto rng = make_rng(20250810);
    for (int iter = 0; iter < 400; ++iter) {
        const i64 p = kPrimes[random_int(rng, 0, 5)];
        const PadicNumber x = random_padic(rng, p);
        const PadicNumber y = random_padic(rng, p);

        const PadicNumber s = add(x, y);
        if (!s.is_zero_to_precision())
            REQUIRE(s.valuation() >= std::min(x.valuation(), y.valuation()));
        if (x.valuation() != y.valuation()) {
            REQUIRE_FALSE(s.is_zero_to_precision());
            REQUIRE(s.valuation() == std::min(x.valuation(), y.valuation()));
        }

        const PadicNumber prod = mul(x, y);
        REQUIRE(prod.valuation() == x.valuation() + y.valuation());
        REQUIRE(invert(prod).valuation() == -prod.valuation());
    }
}

TEST_CASE("rational round trip: den * from_rational(num, den) == num") {
    auto rng = make_rng(7);
    for (int iter = 0; iter < 500; ++iter) {
        const i64 p = kPrimes[random_int(rng, 0, 5)];
        const i64 numerator = random_int(rng, -100000, 100000);
        i64 denominator = 0;
        while (denominator == 0) denominator = random_int(rng, -100000, 100000);
        const i64 precision = random_int(rng, 2, 60);
        const PadicNumber x = from_rational(numerator, denominator, p, precision);
        const PadicNumber back = sub(mul_exact(x, denominator), from_integer(numerator, p, precision));
        REQUIRE(back.is_zero_to_precision());
    }
}

TEST_CASE("serialization record round trip is bit-identical") {
    auto rng = make_rng(99);
    for (int iter = 0; iter < 300; ++iter) {
        const i64 p = kPrimes[random_int(rng, 0, 5)];
        const PadicNumber x = random_padic(rng, p);
        REQUIRE(from_record(to_record(x)) == x);
    }
    const PadicNumber z = PadicNumber::zero(7, 12);
    REQUIRE(from_record(to_record(z)) == z);
    const PadicNumber neg_val = from_rational(3, 49, 7, 9);
    REQUIRE(from_record(to_record(neg_val)) == neg_val);
}

TEST_CASE("shift and exact scaling") {
    const PadicNumber x = from_integer(7, 5, 10);
    REQUIRE(shift(x, 3).valuation() == 3);
    REQUIRE(shift(x, 3).abs_precision() == 13);
    REQUIRE(mul_exact(x, 25) == from_integer(175, 5, 12));
    REQUIRE(div_exact(from_integer(175, 5, 12), 25) == x);
}
