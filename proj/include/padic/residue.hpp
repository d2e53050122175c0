#pragma once

// Pure modular-arithmetic predicates deciding the existence statements for
// translation-invariant and 2-periodic boundary fields. Everything here
// works on residues only — no p-adic number is ever built — so the verdicts
// serve as an independent cross-check on the constructive solvers.

#include <cstdint>
#include <vector>

#include "padic/errors.hpp"
#include "padic/intops.hpp"

namespace padic::residue {

struct Residue {
    i64 modulus = 2;
    BigInt value = 0;

    bool operator==(const Residue&) const = default;
};

enum class Reason {
    SmallPrime,
    NegativeCoupling,
    NonResidueDiscriminant,
    NonResidueRoot,
    CongruenceSolvable,
};

inline const char* reason_name(Reason r) {
    switch (r) {
        case Reason::SmallPrime: return "SmallPrime";
        case Reason::NegativeCoupling: return "NegativeCoupling";
        case Reason::NonResidueDiscriminant: return "NonResidueDiscriminant";
        case Reason::NonResidueRoot: return "NonResidueRoot";
        case Reason::CongruenceSolvable: return "CongruenceSolvable";
    }
    return "?";
}

struct ExistenceVerdict {
    int count = 0;
    Reason reason = Reason::SmallPrime;
    std::vector<Residue> witnesses;
};

inline bool euler_is_qr(const BigInt& a, i64 p) {
    if (p == 2 || !is_probable_prime(static_cast<u64>(p)))
        throw Error(ErrorCode::DomainError, "euler_is_qr requires an odd prime modulus");
    if (mod_floor(a, p) == 0)
        throw Error(ErrorCode::ZeroResidue, "quadratic-residue test on a multiple of p");
    return euler_criterion(a, p);
}

// The smaller of the two square roots of a mod p.
inline Residue sqrt_mod(const BigInt& a, i64 p) {
    if (!euler_is_qr(a, p)) throw Error(ErrorCode::NonResidue, "not a quadratic residue");
    BigInt r = tonelli_shanks(a, p);
    if (r > (p - 1) / 2) r = p - r;
    return Residue{p, std::move(r)};
}

// x^2 == c (mod p), with c == 0 counted as solvable (x = 0).
inline bool congruence_solvable(const BigInt& c, i64 p) {
    if (mod_floor(c, p) == 0) return true;
    return euler_is_qr(c, p);
}

// Number of translation-invariant quasi Gibbs boundary fields for (p, J).
// J < 0: always three. J > 0: one for p in {2,3,5}; for p > 5 three exactly
// when x^2 == 5 (mod p) has a root x0 and x^2 == 2*x0 - 6 (mod p) is
// solvable (the verdict does not depend on which root +-x0 is picked).
inline ExistenceVerdict ti_condition(i64 p, i64 j) {
    if (j == 0) throw Error(ErrorCode::ZeroCoupling, "coupling J must be nonzero");
    if (j < 0) return {3, Reason::NegativeCoupling, {}};
    if (p == 2 || p == 3 || p == 5) return {1, Reason::SmallPrime, {}};
    if (!euler_is_qr(5, p)) return {1, Reason::NonResidueDiscriminant, {}};
    const Residue x0 = sqrt_mod(5, p);
    const BigInt c = mod_floor(2 * x0.value - 6, p);
    if (!congruence_solvable(c, p)) return {1, Reason::NonResidueRoot, {x0}};
    const Residue w = (c == 0) ? Residue{p, 0} : sqrt_mod(c, p);
    return {3, Reason::CongruenceSolvable, {x0, w}};
}

// Number of 2-periodic quasi Gibbs boundary fields for (p, J); always 0 or 2.
// J > 0: two exactly when p == 1 (mod 4). J < 0: none for p in {2,3};
// otherwise two exactly when -3 is a QR mod p with root x0 and
// x^2 == 2*x0 - 2 (mod p) is solvable.
inline ExistenceVerdict periodic_condition(i64 p, i64 j) {
    if (j == 0) throw Error(ErrorCode::ZeroCoupling, "coupling J must be nonzero");
    if (j > 0) {
        if (p == 2) return {0, Reason::SmallPrime, {}};
        if (p % 4 != 1) return {0, Reason::NonResidueRoot, {}};
        return {2, Reason::CongruenceSolvable, {sqrt_mod(BigInt(-1), p)}};
    }
    if (p == 2 || p == 3) return {0, Reason::SmallPrime, {}};
    if (!euler_is_qr(BigInt(-3), p)) return {0, Reason::NonResidueDiscriminant, {}};
    const Residue x0 = sqrt_mod(BigInt(-3), p);
    const BigInt c = mod_floor(2 * x0.value - 2, p);
    if (!congruence_solvable(c, p)) return {0, Reason::NonResidueRoot, {x0}};
    const Residue w = (c == 0) ? Residue{p, 0} : sqrt_mod(c, p);
    return {2, Reason::CongruenceSolvable, {x0, w}};
}

} // namespace padic::residue
