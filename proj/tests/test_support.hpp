#pragma once

// Shared helpers for the test suites: deterministic RNG, random value
// generators, and the independent residue-search oracle used to check
// square-root existence. The oracle enumerates squares directly and never
// touches the library's Euler/Tonelli path.

#include <cstdint>
#include <random>
#include <vector>

#include "padic/number.hpp"

namespace test_support {

using padic::BigInt;
using padic::i64;
using padic::u64;

inline std::mt19937_64 make_rng(u64 seed) { return std::mt19937_64(seed); }

inline i64 random_int(std::mt19937_64& rng, i64 lo, i64 hi) {
    return std::uniform_int_distribution<i64>(lo, hi)(rng);
}

// Random nonzero value p^v * unit with v in [-6, 6] and min..max known
// unit digits.
inline padic::PadicNumber random_padic(std::mt19937_64& rng, i64 p, int min_digits = 1,
                                       int max_digits = 40) {
    const i64 v = random_int(rng, -6, 6);
    const i64 m = random_int(rng, min_digits, max_digits);
    BigInt unit = random_int(rng, 1, p - 1);
    for (i64 i = 1; i < m; ++i) unit += BigInt(random_int(rng, 0, p - 1)) * padic::p_pow(p, i);
    return padic::PadicNumber::make(p, v, unit, v + m);
}

// The set of squares modulo p^6, by exhaustive enumeration of y.
inline std::vector<bool> squares_mod_p6(i64 p) {
    u64 mod = 1;
    for (int i = 0; i < 6; ++i) mod *= static_cast<u64>(p);
    std::vector<bool> is_square(mod, false);
    for (u64 y = 0; y < mod; ++y) is_square[static_cast<size_t>((y * y) % mod)] = true;
    return is_square;
}

// Independent square-root existence oracle: even valuation and the unit part
// is a square modulo p^6.
inline bool sqrt_exists_oracle(const padic::PadicNumber& a, const std::vector<bool>& square_set) {
    if (a.valuation() % 2 != 0) return false;
    const u64 mod = static_cast<u64>(square_set.size());
    const u64 unit = static_cast<u64>(a.unit() % mod);
    return square_set[static_cast<size_t>(unit)];
}

} // namespace test_support
