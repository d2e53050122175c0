#pragma once

// Boundary fields x -> h_x: translation-invariant, two-periodic by level,
// or explicit per-vertex. Every h_x must be invertible (not zero to
// precision). Entries optionally carry an exact rational value, which
// enables the exact-rational evaluation path.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padic/errors.hpp"
#include "padic/gibbs/tree.hpp"
#include "padic/number.hpp"

namespace padic::gibbs {

struct FieldValue {
    PadicNumber h;
    std::optional<BigRational> exact;

    FieldValue(PadicNumber value, std::optional<BigRational> rational = std::nullopt)
        : h(std::move(value)), exact(std::move(rational)) {
        if (h.is_zero_to_precision())
            throw Error(ErrorCode::DomainError, "boundary field value must be invertible");
    }

    static FieldValue rational(const BigRational& r, i64 p, i64 precision) {
        return FieldValue(from_big_rational(r, p, precision), r);
    }

    FieldValue negated() const {
        return FieldValue(neg(h), exact ? std::optional<BigRational>(-*exact) : std::nullopt);
    }
};

class BoundaryField {
public:
    enum class Kind { TranslationInvariant, TwoPeriodicByLevel, Explicit };

    static BoundaryField translation_invariant(FieldValue h) {
        BoundaryField f(Kind::TranslationInvariant);
        f.values_.push_back(std::move(h));
        return f;
    }

    static BoundaryField two_periodic(FieldValue h_even, FieldValue h_odd) {
        BoundaryField f(Kind::TwoPeriodicByLevel);
        f.values_.push_back(std::move(h_even));
        f.values_.push_back(std::move(h_odd));
        return f;
    }

    static BoundaryField explicit_field(std::map<i64, FieldValue> by_vertex) {
        BoundaryField f(Kind::Explicit);
        f.by_vertex_ = std::move(by_vertex);
        return f;
    }

    Kind kind() const { return kind_; }

    const FieldValue& at(i64 vertex) const {
        switch (kind_) {
            case Kind::TranslationInvariant:
                return values_[0];
            case Kind::TwoPeriodicByLevel:
                return values_[static_cast<size_t>(level_of(vertex) % 2)];
            case Kind::Explicit: {
                auto it = by_vertex_.find(vertex);
                if (it == by_vertex_.end())
                    throw Error(ErrorCode::DomainError, "explicit boundary field does not cover vertex");
                return it->second;
            }
        }
        throw Error(ErrorCode::DomainError, "unreachable");
    }

    // True when every entry carries an exact rational value (the requirement
    // for the exact-rational evaluation mode).
    bool is_rational() const {
        for (const auto& v : values_)
            if (!v.exact) return false;
        for (const auto& [_, v] : by_vertex_)
            if (!v.exact) return false;
        return true;
    }

    BoundaryField negated() const {
        BoundaryField f(kind_);
        for (const auto& v : values_) f.values_.push_back(v.negated());
        for (const auto& [k, v] : by_vertex_) f.by_vertex_.emplace(k, v.negated());
        return f;
    }

    std::string describe() const {
        switch (kind_) {
            case Kind::TranslationInvariant: return "translation-invariant";
            case Kind::TwoPeriodicByLevel: return "two-periodic-by-level";
            case Kind::Explicit: return "explicit";
        }
        return "?";
    }

private:
    explicit BoundaryField(Kind kind) : kind_(kind) {}

    Kind kind_;
    std::vector<FieldValue> values_;
    std::map<i64, FieldValue> by_vertex_;
};

} // namespace padic::gibbs
