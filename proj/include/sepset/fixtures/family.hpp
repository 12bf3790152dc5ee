#pragma once

/**
 * @file family.hpp
 * @brief The finite label family {Y_0, ..., Y_{N-1}} that parameterizes every
 *        fixture space, with per-fixture validation.
 */

#include <sepset/errors.hpp>
#include <sepset/rational.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sepset {

struct Label {
    std::string name;
    // Dyadic fixture: position inside (3n, 3n+1).  Circle fixture: the
    // rational parameter t of the label's circle point.
    std::optional<Rational> value;
};

struct FamilySet {
    std::vector<Label> labels;
};

// Ordered list of label sets; the family index n is the position.
struct FamilyY {
    std::vector<FamilySet> sets;
    std::size_t size() const { return sets.size(); }
};

inline void validate_family_base(const FamilyY& f) {
    if (f.sets.empty()) throw ValidationError("family needs at least one label set");
    std::set<std::string> seen;
    for (const auto& set : f.sets) {
        if (set.labels.empty()) throw ValidationError("label sets must be nonempty");
        for (const auto& l : set.labels) {
            if (l.name.empty()) throw ValidationError("labels need nonempty names");
            if (!seen.insert(l.name).second)
                throw ValidationError("duplicate label '" + l.name + "' across the family");
        }
    }
}

inline bool is_dyadic_rational(const Rational& v) {
    BigInt q = v.denominator();
    while (q % 2 == 0) q /= 2;
    return q == 1;
}

// Dyadic fixture: every label carries a rational position in the open unit
// interval above 3n that avoids both dyadic ladders.
inline void validate_dyadic_family(const FamilyY& f) {
    validate_family_base(f);
    for (std::size_t n = 0; n < f.sets.size(); ++n) {
        std::set<Rational> values;
        for (const auto& l : f.sets[n].labels) {
            if (!l.value)
                throw ValidationError("label '" + l.name + "' needs a rational position");
            const Rational& v = *l.value;
            Rational lo(static_cast<long long>(3 * n));
            if (!(lo < v && v < lo + Rational(1)))
                throw ValidationError("label '" + l.name + "' lies outside (3n, 3n+1)");
            if (is_dyadic_rational(v))
                throw ValidationError("label '" + l.name + "' collides with the dyadic ladder");
            if (is_dyadic_rational(v - Rational(1, 3)))
                throw ValidationError("label '" + l.name + "' collides with the shifted ladder");
            if (!values.insert(v).second)
                throw ValidationError("labels in set " + std::to_string(n) +
                                      " share the position " + v.str());
        }
    }
}

// Circle fixture: labels carry pairwise distinct rational parameters.
inline void validate_circle_family(const FamilyY& f) {
    validate_family_base(f);
    for (std::size_t n = 0; n < f.sets.size(); ++n) {
        std::set<Rational> params;
        for (const auto& l : f.sets[n].labels) {
            if (!l.value)
                throw ValidationError("label '" + l.name + "' needs a rational parameter");
            if (!params.insert(*l.value).second)
                throw ValidationError("labels in set " + std::to_string(n) +
                                      " share the parameter " + l.value->str());
        }
    }
}

}  // namespace sepset
