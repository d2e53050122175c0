#pragma once

// p-adic exponential and logarithm, summed as truncated power series in the
// PadicNumber arithmetic itself. Every series term of either function has
// absolute precision >= K (the argument's precision), so the partial sums
// stay correct modulo p^K; the cut-off index is chosen so that all dropped
// terms have valuation >= K.

#include <algorithm>

#include "padic/errors.hpp"
#include "padic/number.hpp"

namespace padic {

namespace detail {

// v_p(n!) = (n - digitsum_p(n)) / (p - 1)
inline i64 factorial_valuation(i64 n, i64 p) {
    i64 s = 0, q = n;
    while (q > 0) {
        q /= p;
        s += q;
    }
    return s;
}

// Smallest N such that every term x^n/n! with n > N has valuation >= K,
// given v(x) = t. Uses v_p(n!) <= (n-1)/(p-1), which makes the lower bound
// n*t - (n-1)/(p-1) increasing in n.
inline i64 exp_series_cutoff(i64 t, i64 K, i64 p) {
    i64 n = 1;
    while (n * t - (n - 1) / (p - 1) < K) ++n;
    return n;
}

// Smallest N such that every term x^n/n with n > N has valuation >= K:
// n*t - log_p(n) is increasing in n for t >= 1.
inline i64 log_series_cutoff(i64 t, i64 K, i64 p) {
    i64 n = 1;
    auto value = [&](i64 k) {
        i64 lg = 0, q = k;
        while (q >= p) {
            q /= p;
            ++lg;
        }
        return k * t - lg;
    };
    while (value(n + 1) < K) ++n;
    return n;
}

} // namespace detail

// exp_p(x) for v(x) >= 1 (p odd) resp. v(x) >= 2 (p = 2).
inline PadicNumber exp_p(const PadicNumber& x) {
    const i64 p = x.prime();
    const i64 t_min = (p == 2) ? 2 : 1;
    if (x.is_zero_to_precision()) {
        if (x.abs_precision() < t_min)
            throw Error(ErrorCode::DomainError, "exp_p argument not known to lie in the convergence disc");
        return one(p, x.abs_precision());
    }
    const i64 t = x.valuation();
    if (t < t_min)
        throw Error(ErrorCode::DomainError, "exp_p argument outside the disc of convergence");
    const i64 K = x.abs_precision();
    const i64 N = detail::exp_series_cutoff(t, K, p);

    PadicNumber acc = one(p, K);
    PadicNumber term = one(p, K);
    for (i64 n = 1; n <= N; ++n) {
        term = div_exact(mul(term, x), BigInt(n));
        acc = add(acc, term);
    }
    return acc;
}

// log_p(x) for |x - 1|_p < 1.
inline PadicNumber log_p(const PadicNumber& x) {
    if (x.is_zero_to_precision())
        throw Error(ErrorCode::DomainError, "log_p argument outside B(1,1)");
    const i64 p = x.prime();
    const PadicNumber z = sub(x, one(p, x.abs_precision()));
    if (z.is_zero_to_precision()) return PadicNumber::zero(p, z.abs_precision());
    const i64 t = z.valuation();
    if (t < 1) throw Error(ErrorCode::DomainError, "log_p argument outside B(1,1)");
    const i64 K = z.abs_precision();
    const i64 N = detail::log_series_cutoff(t, K, p);

    PadicNumber acc = PadicNumber::zero(p, K);
    PadicNumber power = one(p, z.unit_digit_count());
    for (i64 n = 1; n <= N; ++n) {
        power = mul(power, z);
        const PadicNumber term = div_exact(power, BigInt(n));
        acc = add(acc, (n % 2 == 1) ? term : neg(term));
    }
    return acc;
}

} // namespace padic
