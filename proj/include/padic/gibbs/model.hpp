#pragma once

// Finite-volume machinery for the Vannimenus Hamiltonian on the rooted
// binary tree: configuration weights p^H * prod h_x^sigma(x), brute-force
// partition sums, measures, the Kolmogorov consistency check, the
// boundary-field recurrence, and the a_h / A_n partition-growth apparatus.
//
// Two evaluation paths exist side by side: truncated p-adic arithmetic
// (always available) and exact rationals (available when every boundary
// value is rational). The brute-force sums ARE the oracle — there is no
// transfer-matrix shortcut here by design.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "padic/errors.hpp"
#include "padic/gibbs/field.hpp"
#include "padic/gibbs/params.hpp"
#include "padic/gibbs/tree.hpp"
#include "padic/number.hpp"

namespace padic::gibbs {

enum class EvalMode { PadicTruncated, ExactRational };

// H_n(sigma) = J1 * sum over edges + J2 * sum over sibling pairs; exact.
inline i64 hamiltonian(const SpinConfig& sigma, const ModelParams& params) {
    i64 edge_sum = 0, sibling_sum = 0;
    const i64 count = sigma.size();
    for (i64 x = 1; 2 * x + 1 <= count; ++x) {
        edge_sum += sigma.at(x) * (sigma.at(2 * x) + sigma.at(2 * x + 1));
        sibling_sum += sigma.at(2 * x) * sigma.at(2 * x + 1);
    }
    return params.J1 * edge_sum + params.J2 * sibling_sum;
}

// p^H * prod_{x in W_n} h_x^{sigma(x)}; the p^H factor is a pure valuation
// shift, hence exact.
inline PadicNumber weight(const SpinConfig& sigma, const BoundaryField& field,
                          const ModelParams& params) {
    const i64 H = hamiltonian(sigma, params);
    PadicNumber prod = one(params.p, params.working_precision());
    const int n = sigma.depth();
    for (i64 x = level_first(n); x < level_first(n) + level_size(n); ++x) {
        const FieldValue& fv = field.at(x);
        prod = mul(prod, sigma.at(x) > 0 ? fv.h : invert(fv.h));
    }
    return shift(prod, H);
}

inline BigRational weight_exact(const SpinConfig& sigma, const BoundaryField& field,
                                const ModelParams& params) {
    if (!field.is_rational())
        throw Error(ErrorCode::ModeUnavailable, "exact-rational mode requires a rational boundary field");
    const i64 H = hamiltonian(sigma, params);
    BigRational w = (H >= 0) ? BigRational(p_pow(params.p, H)) : BigRational(1, p_pow(params.p, -H));
    const int n = sigma.depth();
    for (i64 x = level_first(n); x < level_first(n) + level_size(n); ++x) {
        const BigRational& h = *field.at(x).exact;
        if (sigma.at(x) > 0)
            w *= h;
        else
            w /= h;
    }
    return w;
}

namespace detail {

inline void check_partition_depth(int n) {
    if (n < 0 || n > kMaxPartitionDepth)
        throw Error(ErrorCode::DepthLimit, "exhaustive partition sums are limited to depth <= 3");
}

// Cached (h, h^-1) pairs for the leaf level, so exhaustive sums do not
// re-invert per configuration.
struct LeafFactors {
    int depth;
    std::vector<std::pair<PadicNumber, PadicNumber>> factors;

    LeafFactors(int n, const BoundaryField& field) : depth(n) {
        for (i64 x = level_first(n); x < level_first(n) + level_size(n); ++x) {
            const PadicNumber& h = field.at(x).h;
            factors.emplace_back(h, invert(h));
        }
    }
};

inline PadicNumber weight_cached(const SpinConfig& sigma, const LeafFactors& leafs,
                                 const ModelParams& params) {
    const i64 H = hamiltonian(sigma, params);
    PadicNumber prod = one(params.p, params.working_precision());
    const i64 base = level_first(leafs.depth);
    for (size_t i = 0; i < leafs.factors.size(); ++i)
        prod = mul(prod, sigma.at(base + static_cast<i64>(i)) > 0 ? leafs.factors[i].first
                                                                  : leafs.factors[i].second);
    return shift(prod, H);
}

} // namespace detail

// Z_{n,h}: exhaustive sum over all 2^|V_n| configurations.
inline PadicNumber partition(int n, const BoundaryField& field, const ModelParams& params) {
    detail::check_partition_depth(n);
    const detail::LeafFactors leafs(n, field);
    const i64 bits = vertex_count(n);
    PadicNumber z = PadicNumber::zero(params.p, params.working_precision());
    for (u64 mask = 0; mask < (u64{1} << bits); ++mask)
        z = add(z, detail::weight_cached(SpinConfig::from_mask(n, mask), leafs, params));
    return z;
}

inline BigRational partition_exact(int n, const BoundaryField& field, const ModelParams& params) {
    detail::check_partition_depth(n);
    const i64 bits = vertex_count(n);
    BigRational z = 0;
    for (u64 mask = 0; mask < (u64{1} << bits); ++mask)
        z += weight_exact(SpinConfig::from_mask(n, mask), field, params);
    return z;
}

inline PadicNumber measure_with_partition(const SpinConfig& sigma, const BoundaryField& field,
                                          const ModelParams& params, const PadicNumber& z) {
    if (z.is_zero_to_precision())
        throw Error(ErrorCode::DegeneratePartition, "partition function is zero to precision");
    return div(weight(sigma, field, params), z);
}

inline PadicNumber measure(const SpinConfig& sigma, const BoundaryField& field,
                           const ModelParams& params) {
    return measure_with_partition(sigma, field, params, partition(sigma.depth(), field, params));
}

inline BigRational measure_exact(const SpinConfig& sigma, const BoundaryField& field,
                                 const ModelParams& params) {
    const BigRational z = partition_exact(sigma.depth(), field, params);
    if (z == 0)
        throw Error(ErrorCode::DegeneratePartition, "partition function vanishes exactly");
    return weight_exact(sigma, field, params) / z;
}

// --- consistency (the finite-volume compatibility identity) -----------------

struct ConsistencyReport {
    int depth = 0;
    bool pass = false;
    // true when every difference vanished outright at its full precision
    bool mismatch_zero_to_precision = false;
    // valuation lower bound of the largest-norm mismatch
    i64 worst_valuation = 0;
    std::string worst_config;
};

// For every sigma on V_(n-1), sums mu^(n) over all boundary assignments on
// W_n and compares with mu^(n-1)(sigma).
inline ConsistencyReport check_consistency(int n, const BoundaryField& field,
                                           const ModelParams& params) {
    if (n < 1 || n > kMaxPartitionDepth)
        throw Error(ErrorCode::DepthLimit, "consistency check is limited to 1 <= n <= 3");
    const PadicNumber z_n = partition(n, field, params);
    const PadicNumber z_prev = partition(n - 1, field, params);

    ConsistencyReport report;
    report.depth = n;
    report.mismatch_zero_to_precision = true;
    bool first = true;
    bool all_pass = true;

    if (z_n.is_zero_to_precision() || z_prev.is_zero_to_precision())
        throw Error(ErrorCode::DegeneratePartition, "partition function is zero to precision");

    const detail::LeafFactors leafs_n(n, field);
    const detail::LeafFactors leafs_prev(n - 1, field);
    const i64 inner_bits = vertex_count(n - 1);
    const i64 boundary_bits = level_size(n);
    for (u64 mask = 0; mask < (u64{1} << inner_bits); ++mask) {
        const SpinConfig sigma = SpinConfig::from_mask(n - 1, mask);
        PadicNumber boundary_sum = PadicNumber::zero(params.p, params.working_precision());
        for (u64 phi = 0; phi < (u64{1} << boundary_bits); ++phi)
            boundary_sum = add(boundary_sum, detail::weight_cached(sigma.extended(phi), leafs_n, params));
        const PadicNumber lhs = div(boundary_sum, z_n);
        const PadicNumber rhs = div(detail::weight_cached(sigma, leafs_prev, params), z_prev);
        const PadicNumber mismatch = sub(lhs, rhs);

        if (!mismatch.is_zero_to_precision()) report.mismatch_zero_to_precision = false;
        const i64 bound = mismatch.valuation_lower_bound();
        if (first || bound < report.worst_valuation) {
            report.worst_valuation = bound;
            report.worst_config = sigma.to_string();
            first = false;
        }
        if (!params.zero_to_guard(mismatch)) all_pass = false;
    }
    report.pass = all_pass;
    return report;
}

// --- the boundary-field recurrence ------------------------------------------

// u_x = (theta^2 u_y u_z + u_y + u_z + 1) / (u_y u_z + u_y + u_z + theta^2),
// theta^2 = p^(4J).
inline PadicNumber recurrence(const PadicNumber& u_y, const PadicNumber& u_z,
                              const ModelParams& params) {
    const i64 J = params.coupling();
    const PadicNumber unit = params.working_one();
    const PadicNumber prod = mul(u_y, u_z);
    const PadicNumber su = add(u_y, u_z);
    const PadicNumber num = add(add(shift(prod, 4 * J), su), unit);
    const PadicNumber den = add(add(prod, su), shift(unit, 4 * J));
    if (den.is_zero_to_precision())
        throw Error(ErrorCode::DenominatorZeroToPrecision, "recurrence denominator vanishes to precision");
    return div(num, den);
}

// True iff u_x = recurrence(u_y, u_z) holds to guard precision at every
// internal vertex of V_n, with u = h^2.
inline bool field_compatible(const BoundaryField& field, int n, const ModelParams& params) {
    for (i64 x = 1; x <= vertex_count(n - 1); ++x) {
        const PadicNumber u_x = pow_int(field.at(x).h, 2);
        const PadicNumber u_y = pow_int(field.at(2 * x).h, 2);
        const PadicNumber u_z = pow_int(field.at(2 * x + 1).h, 2);
        if (!params.zero_to_guard(sub(u_x, recurrence(u_y, u_z, params)))) return false;
    }
    return true;
}

// --- partition growth: a_h(x) and A_n ---------------------------------------

// The per-vertex constant of the telescoping identity: computed from the
// sigma(x) = +1 instance,
//   a = (p^(3J) h_y h_z + p^(-J)(h_y^-1 h_z + h_y h_z^-1 + h_y^-1 h_z^-1)) / h_x,
// cross-checked against the sigma(x) = -1 instance and against the closed
// radicand form a^2 p^(2J) h_y^2 h_z^2 = (p^(4J)u_yu_z + u_y + u_z + 1) *
// (u_yu_z + u_y + u_z + p^(4J)).
inline PadicNumber a_coeff(const PadicNumber& h_x, const PadicNumber& h_y, const PadicNumber& h_z,
                           const ModelParams& params) {
    const i64 J = params.coupling();
    const PadicNumber iy = invert(h_y);
    const PadicNumber iz = invert(h_z);

    const PadicNumber plus_side =
        add(shift(mul(h_y, h_z), 3 * J), shift(add(add(mul(iy, h_z), mul(h_y, iz)), mul(iy, iz)), -J));
    const PadicNumber a_plus = div(plus_side, h_x);

    const PadicNumber minus_side =
        add(shift(add(add(mul(h_y, h_z), mul(iy, h_z)), mul(h_y, iz)), -J), shift(mul(iy, iz), 3 * J));
    const PadicNumber a_minus = mul(minus_side, h_x);

    if (!params.zero_to_guard(sub(a_plus, a_minus)))
        throw Error(ErrorCode::InconsistentField,
                    "the two defining instances of a_h(x) disagree; field does not solve the recurrence");

    const PadicNumber u_y = mul(h_y, h_y);
    const PadicNumber u_z = mul(h_z, h_z);
    const PadicNumber unit = params.working_one();
    const PadicNumber prod = mul(u_y, u_z);
    const PadicNumber radicand =
        mul(add(add(add(shift(prod, 4 * J), u_y), u_z), unit),
            add(add(add(prod, u_y), u_z), shift(unit, 4 * J)));
    const PadicNumber square_route = shift(mul(mul(a_plus, a_plus), prod), 2 * J);
    if (!params.zero_to_guard(sub(square_route, radicand)))
        throw Error(ErrorCode::InconsistentField, "a_h(x)^2 does not match the closed radicand form");

    return a_plus;
}

// A_n = prod over x in W_n of a_h(x).
inline PadicNumber level_growth_factor(int n, const BoundaryField& field, const ModelParams& params) {
    PadicNumber a_level = one(params.p, params.working_precision());
    for (i64 x = level_first(n); x < level_first(n) + level_size(n); ++x)
        a_level = mul(a_level, a_coeff(field.at(x).h, field.at(2 * x).h, field.at(2 * x + 1).h, params));
    return a_level;
}

// Z_{n+1} == A_n * Z_n, both partitions by brute force.
inline bool verify_Z_recursion(int n, const BoundaryField& field, const ModelParams& params) {
    if (n < 0 || n > 2)
        throw Error(ErrorCode::DepthLimit, "Z-recursion check needs brute force at depth n+1 <= 3");
    const PadicNumber lhs = partition(n + 1, field, params);
    const PadicNumber rhs = mul(level_growth_factor(n, field, params), partition(n, field, params));
    return params.zero_to_guard(sub(lhs, rhs));
}

} // namespace padic::gibbs
