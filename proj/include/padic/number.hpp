#pragma once

// Truncated canonical p-adic expansions with absolute-precision tracking.
//
// A nonzero value is stored as p^v * u where u is the unit part reduced
// modulo p^(K - v); K is the absolute precision ("known modulo p^K").
// Finite sums of such values stay exact modulo the shared p^K, so
// partition-function sums are order-independent. "Zero to precision" is an
// explicit state: the value is indistinguishable from 0 modulo p^K.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "padic/errors.hpp"
#include "padic/intops.hpp"

namespace padic {

inline constexpr i64 kDefaultPrecision = 48;
inline constexpr i64 kGuardDigits = 4;

class PadicNumber {
public:
    static PadicNumber zero(i64 p, i64 abs_precision) {
        check_prime(p);
        PadicNumber x;
        x.prime_ = p;
        x.zero_ = true;
        x.valuation_ = abs_precision;
        x.abs_precision_ = abs_precision;
        x.unit_ = 0;
        return x;
    }

    // Canonicalize p^v * unit known modulo p^K: reduce the unit into
    // [0, p^(K-v)), strip p factors into the valuation, collapse to the
    // zero state when nothing is left.
    static PadicNumber make(i64 p, i64 v, BigInt unit, i64 abs_precision) {
        check_prime(p);
        if (v >= abs_precision) return zero(p, abs_precision);
        const i64 m = abs_precision - v;
        unit = mod_floor(unit, p_pow(p, m));
        if (unit == 0) return zero(p, abs_precision);
        auto [extra, reduced] = split_p_power(std::move(unit), p);
        PadicNumber x;
        x.prime_ = p;
        x.zero_ = false;
        x.valuation_ = v + extra;
        x.abs_precision_ = abs_precision;
        x.unit_ = std::move(reduced);
        return x;
    }

    i64 prime() const { return prime_; }
    bool is_zero_to_precision() const { return zero_; }
    i64 abs_precision() const { return abs_precision_; }

    i64 valuation() const {
        if (zero_)
            throw Error(ErrorCode::ZeroToPrecision, "valuation of a value that is zero to precision");
        return valuation_;
    }

    // v for nonzero values, K for zero-to-precision ones (all we know is
    // valuation >= K). Convenient for guard checks.
    i64 valuation_lower_bound() const { return zero_ ? abs_precision_ : valuation_; }

    // Unit part as an integer in [0, p^(K-v)); 0 for the zero state.
    const BigInt& unit() const { return unit_; }

    // Number of known unit digits, K - v.
    i64 unit_digit_count() const { return zero_ ? 0 : abs_precision_ - valuation_; }

    // Little-endian base-p digits of the unit part, d0 != 0.
    std::vector<i64> digits() const {
        std::vector<i64> d;
        if (zero_) return d;
        BigInt u = unit_;
        for (i64 i = 0; i < unit_digit_count(); ++i) {
            d.push_back(static_cast<i64>(u % prime_));
            u /= prime_;
        }
        return d;
    }

    i64 leading_digit() const {
        if (zero_) throw Error(ErrorCode::ZeroToPrecision, "leading digit of zero to precision");
        return static_cast<i64>(unit_ % prime_);
    }

    bool operator==(const PadicNumber& o) const {
        return prime_ == o.prime_ && zero_ == o.zero_ && abs_precision_ == o.abs_precision_ &&
               (zero_ || (valuation_ == o.valuation_ && unit_ == o.unit_));
    }
    bool operator!=(const PadicNumber& o) const { return !(*this == o); }

private:
    static void check_prime(i64 p) {
        if (p < 2) throw Error(ErrorCode::DomainError, "prime must be >= 2");
    }

    i64 prime_ = 2;
    bool zero_ = true;
    i64 valuation_ = 0;
    i64 abs_precision_ = 1;
    BigInt unit_ = 0;
};

// --- construction ---------------------------------------------------------

inline PadicNumber from_rational(BigInt num, BigInt den, i64 p, i64 abs_precision) {
    if (den == 0) throw Error(ErrorCode::ZeroDenominator, "denominator is zero");
    if (abs_precision < 1) throw Error(ErrorCode::DomainError, "precision must be >= 1");
    if (num == 0) return PadicNumber::zero(p, abs_precision);
    auto [vn, un] = split_p_power(std::move(num), p);
    auto [vd, ud] = split_p_power(std::move(den), p);
    const i64 v = vn - vd;
    if (v >= abs_precision) return PadicNumber::zero(p, abs_precision);
    const BigInt mod = p_pow(p, abs_precision - v);
    BigInt unit = mod_floor(un, mod) * mod_inverse(mod_floor(ud, mod), mod);
    return PadicNumber::make(p, v, std::move(unit), abs_precision);
}

inline PadicNumber from_integer(const BigInt& n, i64 p, i64 abs_precision) {
    return from_rational(n, 1, p, abs_precision);
}

inline PadicNumber from_big_rational(const BigRational& r, i64 p, i64 abs_precision) {
    return from_rational(boost::multiprecision::numerator(r),
                         boost::multiprecision::denominator(r), p, abs_precision);
}

inline PadicNumber one(i64 p, i64 abs_precision) { return from_integer(1, p, abs_precision); }

// --- ring operations ------------------------------------------------------

namespace detail {
inline void require_same_prime(const PadicNumber& x, const PadicNumber& y) {
    if (x.prime() != y.prime())
        throw Error(ErrorCode::PrimeMismatch, "operands live in different p-adic fields");
}
} // namespace detail

// Restrict to a smaller absolute precision (never inflates).
inline PadicNumber truncate(const PadicNumber& x, i64 abs_precision) {
    if (abs_precision >= x.abs_precision()) return x;
    if (x.is_zero_to_precision()) return PadicNumber::zero(x.prime(), abs_precision);
    return PadicNumber::make(x.prime(), x.valuation(), x.unit(), abs_precision);
}

// Exact multiplication by p^s: valuation and precision both shift.
inline PadicNumber shift(const PadicNumber& x, i64 s) {
    if (x.is_zero_to_precision()) return PadicNumber::zero(x.prime(), x.abs_precision() + s);
    PadicNumber r = PadicNumber::make(x.prime(), x.valuation() + s, x.unit(), x.abs_precision() + s);
    return r;
}

inline PadicNumber neg(const PadicNumber& x) {
    if (x.is_zero_to_precision()) return x;
    const BigInt mod = p_pow(x.prime(), x.unit_digit_count());
    return PadicNumber::make(x.prime(), x.valuation(), mod - x.unit(), x.abs_precision());
}

inline PadicNumber add(const PadicNumber& x, const PadicNumber& y) {
    detail::require_same_prime(x, y);
    const i64 K = std::min(x.abs_precision(), y.abs_precision());
    if (x.is_zero_to_precision()) return truncate(y, K);
    if (y.is_zero_to_precision()) return truncate(x, K);
    const i64 v0 = std::min(x.valuation(), y.valuation());
    if (v0 >= K) return PadicNumber::zero(x.prime(), K);
    const i64 m = K - v0;
    const BigInt mod = p_pow(x.prime(), m);
    BigInt s = 0;
    if (x.valuation() - v0 < m) s += x.unit() * p_pow(x.prime(), x.valuation() - v0);
    if (y.valuation() - v0 < m) s += y.unit() * p_pow(x.prime(), y.valuation() - v0);
    return PadicNumber::make(x.prime(), v0, std::move(s), K);
}

inline PadicNumber sub(const PadicNumber& x, const PadicNumber& y) { return add(x, neg(y)); }

inline PadicNumber mul(const PadicNumber& x, const PadicNumber& y) {
    detail::require_same_prime(x, y);
    if (x.is_zero_to_precision() || y.is_zero_to_precision()) {
        // x = O(p^Kx), y = p^vy * u  =>  x*y = O(p^(Kx+vy)); similarly the
        // symmetric and doubly-zero cases.
        const i64 ax = x.is_zero_to_precision() ? x.abs_precision() : x.valuation();
        const i64 ay = y.is_zero_to_precision() ? y.abs_precision() : y.valuation();
        return PadicNumber::zero(x.prime(), ax + ay);
    }
    const i64 m = std::min(x.unit_digit_count(), y.unit_digit_count());
    const i64 v = x.valuation() + y.valuation();
    BigInt u = mod_floor(x.unit() * y.unit(), p_pow(x.prime(), m));
    return PadicNumber::make(x.prime(), v, std::move(u), v + m);
}

inline PadicNumber invert(const PadicNumber& x) {
    if (x.is_zero_to_precision())
        throw Error(ErrorCode::DivisionByZeroToPrecision, "cannot invert a value that is zero to precision");
    const i64 m = x.unit_digit_count();
    const BigInt mod = p_pow(x.prime(), m);
    return PadicNumber::make(x.prime(), -x.valuation(), mod_inverse(x.unit(), mod), -x.valuation() + m);
}

inline PadicNumber div(const PadicNumber& x, const PadicNumber& y) { return mul(x, invert(y)); }

// Exact scaling by a nonzero integer constant: the constant carries no
// truncation, so only the valuation bookkeeping moves.
inline PadicNumber mul_exact(const PadicNumber& x, const BigInt& c) {
    if (c == 0) throw Error(ErrorCode::DomainError, "mul_exact by zero");
    if (x.is_zero_to_precision()) {
        return PadicNumber::zero(x.prime(), x.abs_precision() + valuation_of(c, x.prime()));
    }
    auto [vc, uc] = split_p_power(c, x.prime());
    const i64 m = x.unit_digit_count();
    BigInt u = mod_floor(x.unit() * uc, p_pow(x.prime(), m));
    return PadicNumber::make(x.prime(), x.valuation() + vc, std::move(u), x.abs_precision() + vc);
}

inline PadicNumber div_exact(const PadicNumber& x, const BigInt& c) {
    if (c == 0) throw Error(ErrorCode::ZeroDenominator, "div_exact by zero");
    auto [vc, uc] = split_p_power(c, x.prime());
    if (x.is_zero_to_precision()) return PadicNumber::zero(x.prime(), x.abs_precision() - vc);
    const i64 m = x.unit_digit_count();
    const BigInt mod = p_pow(x.prime(), m);
    BigInt u = mod_floor(x.unit() * mod_inverse(mod_floor(uc, mod), mod), mod);
    return PadicNumber::make(x.prime(), x.valuation() - vc, std::move(u), x.abs_precision() - vc);
}

inline PadicNumber pow_int(const PadicNumber& x, i64 e) {
    if (e < 0) return pow_int(invert(x), -e);
    PadicNumber r = one(x.prime(), x.is_zero_to_precision() ? x.abs_precision() : x.unit_digit_count());
    PadicNumber b = x;
    i64 k = e;
    while (k > 0) {
        if (k & 1) r = mul(r, b);
        b = mul(b, b);
        k >>= 1;
    }
    return r;
}

inline PadicNumber operator+(const PadicNumber& x, const PadicNumber& y) { return add(x, y); }
inline PadicNumber operator-(const PadicNumber& x, const PadicNumber& y) { return sub(x, y); }
inline PadicNumber operator*(const PadicNumber& x, const PadicNumber& y) { return mul(x, y); }
inline PadicNumber operator/(const PadicNumber& x, const PadicNumber& y) { return div(x, y); }
inline PadicNumber operator-(const PadicNumber& x) { return neg(x); }

// --- norm -----------------------------------------------------------------

// |x|_p on a log scale: ZERO, or the exponent e with |x|_p = p^(-e).
struct NormValue {
    bool is_zero = true;
    i64 exponent = 0;

    bool operator==(const NormValue&) const = default;
};

inline NormValue norm(const PadicNumber& x) {
    if (x.is_zero_to_precision()) return NormValue{true, 0};
    return NormValue{false, x.valuation()};
}

// --- comparisons ----------------------------------------------------------

// Equality in the only sense available at finite precision: the difference
// vanishes modulo the shared p^K.
inline bool equals_to_precision(const PadicNumber& x, const PadicNumber& y) {
    return sub(x, y).is_zero_to_precision();
}

// "Zero at guard precision": indistinguishable from 0 modulo p^threshold.
inline bool zero_to_guard(const PadicNumber& x, i64 threshold) {
    return x.valuation_lower_bound() >= threshold;
}

// --- serialization record ---------------------------------------------------

// Structured record used verbatim by the CLI JSON output; round-trips
// bit-identically.
struct PadicRecord {
    i64 prime = 2;
    bool zero_flag = true;
    i64 valuation = 0;
    std::vector<i64> digits;
    i64 abs_precision = 1;

    bool operator==(const PadicRecord&) const = default;
};

inline PadicRecord to_record(const PadicNumber& x) {
    PadicRecord r;
    r.prime = x.prime();
    r.zero_flag = x.is_zero_to_precision();
    r.valuation = r.zero_flag ? 0 : x.valuation();
    r.digits = x.digits();
    r.abs_precision = x.abs_precision();
    return r;
}

inline PadicNumber from_record(const PadicRecord& r) {
    if (r.zero_flag) return PadicNumber::zero(r.prime, r.abs_precision);
    BigInt u = 0;
    for (auto it = r.digits.rbegin(); it != r.digits.rend(); ++it) u = u * r.prime + *it;
    return PadicNumber::make(r.prime, r.valuation, std::move(u), r.abs_precision);
}

inline std::string to_string(const PadicNumber& x) {
    if (x.is_zero_to_precision())
        return "O(" + std::to_string(x.prime()) + "^" + std::to_string(x.abs_precision()) + ")";
    std::string s = std::to_string(x.prime()) + "^" + std::to_string(x.valuation()) + "*[";
    const auto d = x.digits();
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(d[i]);
    }
    s += "]";
    return s;
}

} // namespace padic
