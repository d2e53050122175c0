#include <catch2/catch_amalgamated.hpp>

#include "padic/number.hpp"
#include "padic/sqrt.hpp"

#include "test_support.hpp"

using namespace padic;
using test_support::make_rng;
using test_support::random_int;
using test_support::random_padic;
using test_support::sqrt_exists_oracle;
using test_support::squares_mod_p6;

TEST_CASE("square-root existence criterion") {
    SECTION("odd valuation never has a root") {
        REQUIRE_FALSE(sqrt_exists(from_integer(5, 5, 8)));
    }
    SECTION("sqrt(-1) exists exactly for p == 1 (mod 4)") {
        REQUIRE(sqrt_exists(from_integer(-1, 5, 8)));
        REQUIRE_FALSE(sqrt_exists(from_integer(-1, 7, 8)));
    }
    SECTION("2-adic obstruction: unit must be 1 mod 8") {
        REQUIRE(sqrt_exists(from_integer(17, 2, 10)));
        REQUIRE_FALSE(sqrt_exists(from_integer(3, 2, 10)));
    }
    SECTION("2-adic test needs three known unit digits") {
        try {
            sqrt_exists(from_integer(1, 2, 2));
            FAIL("expected InsufficientPrecision");
        } catch (const Error& e) {
            REQUIRE(e.code() == ErrorCode::InsufficientPrecision);
        }
    }
    SECTION("zero-to-precision argument is rejected") {
        REQUIRE_THROWS_AS(sqrt_exists(PadicNumber::zero(5, 8)), Error);
    }
}

TEST_CASE("square-root extraction and the canonical branch") {
    SECTION("sqrt(4) picks 2, not the opposite branch") {
        const PadicNumber r = sqrt(from_integer(4, 5, 8));
        REQUIRE(equals_to_precision(r, from_integer(2, 5, 8)));
    }
    SECTION("sqrt(-1) in Q_5 starts 2 + 1*5") {
        const PadicNumber r = sqrt(from_integer(-1, 5, 12));
        const auto d = r.digits();
        REQUIRE(d[0] == 2);
        REQUIRE(d[1] == 1);
        REQUIRE(sub(mul(r, r), from_integer(-1, 5, 12)).is_zero_to_precision());
    }
    SECTION("sqrt(5) in Q_5 reports the odd valuation") {
        try {
            sqrt(from_integer(5, 5, 8));
            FAIL("expected NotASquare");
        } catch (const Error& e) {
            REQUIRE(e.code() == ErrorCode::NotASquare);
            REQUIRE(e.obstruction() == SquareObstruction::OddValuation);
        }
    }
    SECTION("non-residue and 2-adic sub-reasons") {
        try {
            sqrt(from_integer(2, 5, 8));
        } catch (const Error& e) {
            REQUIRE(e.obstruction() == SquareObstruction::NonResidue);
        }
        try {
            sqrt(from_integer(3, 2, 8));
        } catch (const Error& e) {
            REQUIRE(e.obstruction() == SquareObstruction::TwoAdicObstruction);
        }
    }
    SECTION("odd p: leading digit of the root lies in [1, (p-1)/2]") {
        auto rng = make_rng(31);
        for (int iter = 0; iter < 100; ++iter) {
            const i64 p = (iter % 2) ? 13 : 29;
            PadicNumber a = random_padic(rng, p, 6, 30);
            a = mul(a, a);
            const PadicNumber r = sqrt(a);
            REQUIRE(r.leading_digit() >= 1);
            REQUIRE(r.leading_digit() <= (p - 1) / 2);
        }
    }
    SECTION("p = 2: root unit is 1 mod 4 and one digit of precision is lost") {
        auto rng = make_rng(32);
        for (int iter = 0; iter < 100; ++iter) {
            PadicNumber a = random_padic(rng, 2, 6, 30);
            a = mul(a, a);
            const PadicNumber r = sqrt(a);
            REQUIRE(r.unit() % 4 == 1);
            REQUIRE(r.abs_precision() == a.valuation() / 2 + a.unit_digit_count() - 1);
            REQUIRE(sub(mul(r, r), a).is_zero_to_precision());
        }
    }
}

TEST_CASE("soundness against the residue-search oracle") {
    auto rng = make_rng(2024);
    for (i64 p : {2, 3, 5}) {
        const auto square_set = squares_mod_p6(p);
        for (int iter = 0; iter < 100; ++iter) {
            const PadicNumber a = random_padic(rng, p, 8, 30);
            const bool exists = sqrt_exists(a);
            REQUIRE(exists == sqrt_exists_oracle(a, square_set));
            if (exists) {
                const PadicNumber r = sqrt(a);
                REQUIRE(sub(mul(r, r), a).is_zero_to_precision());
            }
        }
    }
}

TEST_CASE("sqrt(-1) exists iff p == 1 (mod 4), all primes below 1000") {
    for (i64 p = 2; p < 1000; ++p) {
        if (!is_probable_prime(static_cast<u64>(p))) continue;
        REQUIRE(sqrt_exists(from_integer(-1, p, 12)) == (p % 4 == 1));
    }
}
