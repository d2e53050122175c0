#include <catch2/catch_amalgamated.hpp>

#include "padic/residue.hpp"

#include "test_support.hpp"

using namespace padic;
using namespace padic::residue;

namespace {

// Exhaustive quadratic-residue oracle.
bool is_square_mod(i64 a, i64 p) {
    const i64 r = ((a % p) + p) % p;
    for (i64 y = 0; y < p; ++y)
        if ((y * y) % p == r) return true;
    return false;
}

} // namespace

TEST_CASE("Euler criterion") {
    REQUIRE(euler_is_qr(4, 5));
    REQUIRE(euler_is_qr(5, 11)); // 4^2 = 16 == 5
    REQUIRE(euler_is_qr(-3, 19)); // 4^2 = 16 == -3 (mod 19); the table's '-' entry is a typo
    REQUIRE_FALSE(euler_is_qr(2, 11));
    SECTION("multiples of p are rejected") {
        try {
            euler_is_qr(22, 11);
            FAIL("expected ZeroResidue");
        } catch (const Error& e) {
            REQUIRE(e.code() == ErrorCode::ZeroResidue);
        }
    }
    SECTION("agrees with exhaustive enumeration for all p < 200") {
        for (i64 p = 3; p < 200; ++p) {
            if (!is_probable_prime(static_cast<u64>(p))) continue;
            for (i64 a = 1; a < p; ++a) REQUIRE(euler_is_qr(a, p) == is_square_mod(a, p));
        }
    }
}

TEST_CASE("sqrt_mod returns the smaller root") {
    REQUIRE(sqrt_mod(5, 11).value == 4);
    REQUIRE(sqrt_mod(-3, 7).value == 2);
    REQUIRE(sqrt_mod(-1, 13).value == 5);
    SECTION("non-residues are rejected") {
        try {
            sqrt_mod(2, 11);
            FAIL("expected NonResidue");
        } catch (const Error& e) {
            REQUIRE(e.code() == ErrorCode::NonResidue);
        }
    }
}

TEST_CASE("translation-invariant existence verdicts") {
    REQUIRE(ti_condition(3, 1).count == 1);
    REQUIRE(ti_condition(3, 1).reason == Reason::SmallPrime);
    REQUIRE(ti_condition(29, 1).count == 3); // x0 = 11, 2*x0 - 6 = 16 = 4^2
    REQUIRE(ti_condition(11, 1).count == 1); // 2*x0 - 6 in {2, 8}, neither a QR mod 11
    REQUIRE(ti_condition(11, 1).reason == Reason::NonResidueRoot);
    REQUIRE(ti_condition(7, -2).count == 3);
    REQUIRE(ti_condition(7, -2).reason == Reason::NegativeCoupling);
    REQUIRE(ti_condition(7, 1).reason == Reason::NonResidueDiscriminant); // 5 is not a QR mod 7
    REQUIRE_THROWS_AS(ti_condition(7, 0), Error);
}

TEST_CASE("2-periodic existence verdicts") {
    REQUIRE(periodic_condition(5, 1).count == 2);
    REQUIRE(periodic_condition(2, 3).count == 0);
    REQUIRE(periodic_condition(7, 1).count == 0); // 7 == 3 (mod 4)
    REQUIRE(periodic_condition(7, -1).count == 2); // x0 = 2, x^2 == 2 solvable by 3
    REQUIRE(periodic_condition(11, -1).count == 0);
    REQUIRE(periodic_condition(3, -1).count == 0);
    SECTION("count is always 0 or 2") {
        for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 29, 31, 43}) {
            for (i64 j : {-2, -1, 1, 2}) {
                const int c = periodic_condition(p, j).count;
                REQUIRE((c == 0 || c == 2));
            }
        }
    }
}

TEST_CASE("the verdicts do not depend on the choice of root") {
    SECTION("TI: (x0-3)/2 and (-x0-3)/2 are reciprocal units") {
        for (i64 p = 7; p < 500; ++p) {
            if (!is_probable_prime(static_cast<u64>(p)) || !euler_is_qr(5, p)) continue;
            const BigInt x0 = sqrt_mod(5, p).value;
            const BigInt other = p - x0;
            const BigInt inv2 = mod_inverse(2, p);
            const BigInt a = mod_floor((x0 - 3) * inv2, p);
            const BigInt b = mod_floor((other - 3) * inv2, p);
            REQUIRE(mod_floor(a * b, p) == 1);
            REQUIRE(congruence_solvable(2 * x0 - 6, p) == congruence_solvable(2 * other - 6, p));
        }
    }
    SECTION("periodic: (x0-1)/2 and (-x0-1)/2 are reciprocal units") {
        for (i64 p = 7; p < 500; ++p) {
            if (!is_probable_prime(static_cast<u64>(p)) || !euler_is_qr(-3, p)) continue;
            const BigInt x0 = sqrt_mod(-3, p).value;
            const BigInt other = p - x0;
            const BigInt inv2 = mod_inverse(2, p);
            const BigInt a = mod_floor((x0 - 1) * inv2, p);
            const BigInt b = mod_floor((other - 1) * inv2, p);
            REQUIRE(mod_floor(a * b, p) == 1);
            REQUIRE(congruence_solvable(2 * x0 - 2, p) == congruence_solvable(2 * other - 2, p));
        }
    }
}
