#pragma once

// Model parameters: prime p, integer couplings, precision policy. The
// solver theory requires J1 = J2 = J != 0; the Hamiltonian evaluator also
// accepts unequal couplings. theta = p^(2J) is realized exactly (valuation
// 2J, unit 1).
//
// Precision policy: `precision` is the user-facing K; guard checks certify
// "zero" at valuation >= K - guard. Internal computations run at a padded
// working precision so that chains of multiplications through negative
// valuations (J < 0) still land above the guard threshold.

#include <cstdlib>

#include "padic/errors.hpp"
#include "padic/number.hpp"

namespace padic::gibbs {

struct ModelParams {
    i64 p = 3;
    i64 J1 = 1;
    i64 J2 = 1;
    i64 precision = kDefaultPrecision;
    i64 guard = kGuardDigits;

    static ModelParams make(i64 p, i64 J, i64 precision = kDefaultPrecision) {
        if (J == 0) throw Error(ErrorCode::ZeroCoupling, "coupling J must be nonzero");
        return ModelParams{p, J, J, precision, kGuardDigits};
    }

    static ModelParams make_general(i64 p, i64 J1, i64 J2, i64 precision = kDefaultPrecision) {
        return ModelParams{p, J1, J2, precision, kGuardDigits};
    }

    i64 coupling() const {
        if (J1 != J2)
            throw Error(ErrorCode::UnequalCouplings, "solver theory requires J1 = J2");
        if (J1 == 0) throw Error(ErrorCode::ZeroCoupling, "coupling J must be nonzero");
        return J1;
    }

    i64 max_abs_coupling() const { return std::max(std::abs(J1), std::abs(J2)); }

    // Padded precision for internal arithmetic.
    i64 working_precision() const { return precision + 24 * (max_abs_coupling() + 1); }

    i64 guard_threshold() const { return precision - guard; }

    bool zero_to_guard(const PadicNumber& x) const { return padic::zero_to_guard(x, guard_threshold()); }

    PadicNumber theta() const { return shift(one(p, working_precision()), 2 * coupling()); }

    PadicNumber working_one() const { return one(p, working_precision()); }
    PadicNumber working_int(const BigInt& n) const { return from_integer(n, p, working_precision()); }
};

} // namespace padic::gibbs
