#pragma once

// Arbitrary-precision integer primitives shared by the p-adic core and the
// residue classifier: floor reduction, p-valuation, modular inverse,
// Euler's criterion, Tonelli-Shanks roots, and a Miller-Rabin primality
// check with a witness set that is deterministic below 2^64.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <utility>

#include "padic/errors.hpp"

namespace padic {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;
using i64 = std::int64_t;
using u64 = std::uint64_t;

inline BigInt big_pow(const BigInt& base, i64 exp) {
    BigInt r = 1, b = base;
    i64 e = exp;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// p^e for e >= 0. The same few (p, e) pairs dominate partition sums, so
// small exponents are memoized per thread.
inline BigInt p_pow(i64 p, i64 e) {
    if (p < (i64{1} << 40) && e >= 0 && e < 2048) {
        thread_local std::map<std::pair<i64, i64>, BigInt> cache;
        auto [it, inserted] = cache.try_emplace({p, e});
        if (inserted) it->second = big_pow(BigInt(p), e);
        return it->second;
    }
    return big_pow(BigInt(p), e);
}

// Reduce into [0, m).
inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

// Largest j with p^j | n, plus n / p^j. Requires n != 0.
inline std::pair<i64, BigInt> split_p_power(BigInt n, i64 p) {
    i64 v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return {v, std::move(n)};
}

inline i64 valuation_of(const BigInt& n, i64 p) { return split_p_power(n, p).first; }

inline BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt old_r = mod_floor(a, m), r = m;
    BigInt old_s = 1, s = 0;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = std::exchange(r, tmp);
        tmp = old_s - q * s;
        old_s = std::exchange(s, tmp);
    }
    if (old_r != 1)
        throw Error(ErrorCode::DomainError, "element not invertible modulo given modulus");
    return mod_floor(old_s, m);
}

// a^(p-1)/2 == 1 test; caller guarantees p odd prime and p does not divide a.
inline bool euler_criterion(const BigInt& a, i64 p) {
    BigInt r = boost::multiprecision::powm(mod_floor(a, p), BigInt((p - 1) / 2), BigInt(p));
    return r == 1;
}

// Square root of a quadratic residue a modulo an odd prime p.
// Returns a root in [0, p); the caller picks the branch it wants.
inline BigInt tonelli_shanks(const BigInt& a_in, i64 p) {
    const BigInt P(p);
    BigInt a = mod_floor(a_in, P);
    if (a == 0) return 0;
    if (p % 4 == 3) return boost::multiprecision::powm(a, (P + 1) / 4, P);

    // p - 1 = q * 2^s with q odd
    i64 s = 0;
    BigInt q = P - 1;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }

    // any quadratic non-residue works as the generator
    BigInt z = 2;
    while (euler_criterion(z, p)) ++z;

    BigInt c = boost::multiprecision::powm(z, q, P);
    BigInt r = boost::multiprecision::powm(a, (q + 1) / 2, P);
    BigInt t = boost::multiprecision::powm(a, q, P);
    i64 m = s;
    while (t != 1) {
        BigInt t2 = t;
        i64 i = 0;
        while (t2 != 1) {
            t2 = (t2 * t2) % P;
            ++i;
        }
        BigInt b = c;
        for (i64 j = 0; j < m - i - 1; ++j) b = (b * b) % P;
        r = (r * b) % P;
        c = (b * b) % P;
        t = (t * c) % P;
        m = i;
    }
    return r;
}

namespace detail {

inline u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

inline u64 powmod_u64(u64 b, u64 e, u64 m) {
    u64 r = 1;
    b %= m;
    while (e > 0) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

} // namespace detail

// Miller-Rabin with the standard witness set that is deterministic for all
// n < 2^64.
inline bool is_probable_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = detail::powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = detail::mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// p-adic valuation of an exact rational (num/den both nonzero-safe; r != 0).
inline i64 rational_valuation(const BigRational& r, i64 p) {
    if (r == 0) throw Error(ErrorCode::ZeroToPrecision, "valuation of exact zero");
    return valuation_of(boost::multiprecision::numerator(r), p) -
           valuation_of(boost::multiprecision::denominator(r), p);
}

} // namespace padic
