#pragma once

// Square roots in Q_p. Existence follows the classical criterion: the
// valuation must be even, and the unit part must be a quadratic residue
// mod p (p odd) resp. congruent to 1 mod 8 (p = 2). Extraction lifts a
// Tonelli-Shanks residue root by Newton iteration; for p = 2 the lift
// proceeds bit by bit and surrenders one digit of absolute precision.

#include <cstdint>

#include "padic/errors.hpp"
#include "padic/intops.hpp"
#include "padic/number.hpp"

namespace padic {

namespace detail {

inline SquareObstruction square_obstruction(const PadicNumber& a) {
    if (a.is_zero_to_precision())
        throw Error(ErrorCode::ZeroToPrecision, "square-root test on a value that is zero to precision");
    if (a.prime() == 2 && a.unit_digit_count() < 3)
        throw Error(ErrorCode::InsufficientPrecision,
                    "2-adic square-root test needs at least 3 known unit digits");
    if (a.valuation() % 2 != 0) return SquareObstruction::OddValuation;
    if (a.prime() == 2) {
        return (a.unit() % 8 == 1) ? SquareObstruction::None : SquareObstruction::TwoAdicObstruction;
    }
    return euler_criterion(BigInt(a.leading_digit()), a.prime()) ? SquareObstruction::None
                                                                 : SquareObstruction::NonResidue;
}

// Newton lift of r0^2 == u (mod p) to r^2 == u (mod p^m), p odd.
inline BigInt newton_sqrt_lift(const BigInt& u, const BigInt& r0, i64 p, i64 m) {
    BigInt r = r0;
    i64 e = 1;
    while (e < m) {
        e = std::min(2 * e, m);
        const BigInt mod = p_pow(p, e);
        const BigInt inv2 = mod_inverse(BigInt(2), mod);
        r = mod_floor((r + mod_floor(u, mod) * mod_inverse(mod_floor(r, mod), mod)) * inv2, mod);
    }
    return r;
}

// Bit-by-bit lift for p = 2: given u == 1 (mod 8), returns r < 2^(m-1) with
// r^2 == u (mod 2^m). The root is only determined modulo 2^(m-1).
inline BigInt two_adic_sqrt_lift(const BigInt& u, i64 m) {
    BigInt r = 1;
    for (i64 k = 3; k < m; ++k) {
        const BigInt diff = mod_floor(r * r - u, p_pow(2, k + 1));
        if ((diff >> k) & 1) r += p_pow(2, k - 1);
    }
    return r;
}

} // namespace detail

inline bool sqrt_exists(const PadicNumber& a) {
    return detail::square_obstruction(a) == SquareObstruction::None;
}

// Canonical branch: for p odd the leading digit of the root lies in
// [1, (p-1)/2]; for p = 2 the root unit is == 1 (mod 4).
inline PadicNumber sqrt(const PadicNumber& a) {
    const auto obstruction = detail::square_obstruction(a);
    if (obstruction != SquareObstruction::None)
        throw Error(ErrorCode::NotASquare, "no square root in Q_p", obstruction);

    const i64 p = a.prime();
    const i64 v = a.valuation();
    const i64 m = a.unit_digit_count();

    if (p == 2) {
        BigInt r = detail::two_adic_sqrt_lift(a.unit(), m);
        if (mod_floor(r, 4) == 3) r = p_pow(2, m - 1) - r;
        return PadicNumber::make(2, v / 2, std::move(r), v / 2 + m - 1);
    }

    const BigInt r0 = tonelli_shanks(BigInt(a.leading_digit()), p);
    BigInt r = detail::newton_sqrt_lift(a.unit(), r0, p, m);
    if (r % p > (p - 1) / 2) r = p_pow(p, m) - r;
    return PadicNumber::make(p, v / 2, std::move(r), v / 2 + m);
}

} // namespace padic
