#include <catch2/catch_amalgamated.hpp>

#include "padic/exp_log.hpp"
#include "padic/number.hpp"

#include "test_support.hpp"

using namespace padic;
using test_support::make_rng;
using test_support::random_int;

namespace {

// Random x in the joint convergence disc: v(x) >= 1 for odd p, >= 2 for p = 2.
PadicNumber random_in_domain(std::mt19937_64& rng, i64 p, i64 precision) {
    const i64 t_min = (p == 2) ? 2 : 1;
    const i64 t = random_int(rng, t_min, t_min + 3);
    BigInt unit = random_int(rng, 1, p - 1);
    for (i64 i = 1; i < precision - t; ++i)
        unit += BigInt(random_int(rng, 0, p - 1)) * p_pow(p, i);
    return PadicNumber::make(p, t, unit, precision);
}

} // namespace

TEST_CASE("log and exp basics") {
    SECTION("log(1) = 0") {
        REQUIRE(log_p(one(5, 10)).is_zero_to_precision());
    }
    SECTION("|log(1+p)| = |p|") {
        const PadicNumber lg = log_p(from_integer(1 + 5, 5, 14));
        REQUIRE(norm(lg) == NormValue{false, 1});
    }
    SECTION("exp(log(1+p)) = 1+p") {
        const PadicNumber x = from_integer(1 + 5, 5, 14);
        REQUIRE(equals_to_precision(exp_p(log_p(x)), x));
    }
    SECTION("exp(1) diverges in Q_3") {
        REQUIRE_THROWS_AS(exp_p(one(3, 10)), Error);
        try {
            exp_p(one(3, 10));
        } catch (const Error& e) {
            REQUIRE(e.code() == ErrorCode::DomainError);
        }
    }
    SECTION("log outside B(1,1) diverges") {
        REQUIRE_THROWS_AS(log_p(from_integer(3, 5, 10)), Error);
    }
    SECTION("p = 2 needs valuation 2 for exp") {
        REQUIRE_THROWS_AS(exp_p(from_integer(2, 2, 12)), Error);
        REQUIRE_FALSE(exp_p(from_integer(4, 2, 12)).is_zero_to_precision());
    }
}

TEST_CASE("the five norm and inversion identities") {
    auto rng = make_rng(1105);
    for (i64 p : {2, 3, 5, 7, 13}) {
        for (int iter = 0; iter < 100; ++iter) {
            const i64 precision = 32;
            const PadicNumber x = random_in_domain(rng, p, precision);
            const PadicNumber one_plus_x = add(one(p, precision), x);

            const PadicNumber e = exp_p(x);
            REQUIRE(norm(e) == NormValue{false, 0});                       // |exp x| = 1
            REQUIRE(norm(sub(e, one(p, precision))) == norm(x));           // |exp x - 1| = |x|
            REQUIRE(norm(log_p(one_plus_x)) == norm(x));                   // |log(1+x)| = |x|
            REQUIRE(equals_to_precision(log_p(e), x));                     // log(exp x) = x
            REQUIRE(equals_to_precision(exp_p(log_p(one_plus_x)), one_plus_x)); // exp(log(1+x)) = 1+x
        }
    }
}
