#pragma once

/**
 * @file fixtures.hpp
 * @brief Shared fixture machinery: identity reports, the exhaustive axiom
 *        audit over a truncation, and the corruption wrapper used by the
 *        negative controls.
 */

#include <sepset/errors.hpp>
#include <sepset/exact_value.hpp>
#include <sepset/finite_space.hpp>
#include <sepset/space.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sepset {

// One checked identity.  `counterexample` is empty on pass and otherwise
// names the offending points together with the computed value.
struct IdentityEntry {
    std::string identity;
    bool pass = true;
    std::string counterexample;
};

struct IdentityReport {
    std::vector<IdentityEntry> entries;

    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }

    const IdentityEntry* find(std::string_view name) const {
        for (const auto& e : entries)
            if (e.identity == name) return &e;
        return nullptr;
    }
};

// Re-checks the axioms of a space exhaustively over its first `horizon`
// enumerated points by funneling the distance matrix through FiniteSpace,
// whose constructor audits symmetry, the triangle inequality and, for a
// declared metric, definiteness.  Throws ValidationError on any failure.
template <SpaceLike S>
void audit_axioms(const S& space, std::uint64_t horizon) {
    auto pts = materialize_points(space, horizon);
    std::vector<std::string> ids;
    ids.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) ids.push_back("P" + std::to_string(i + 1));
    std::vector<std::vector<ExactValue>> matrix(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        matrix[i].reserve(pts.size());
        for (std::size_t j = 0; j < pts.size(); ++j)
            matrix[i].push_back(space.distance(pts[i], pts[j]));
    }
    FiniteSpace audit(ids, matrix, space.kind());
    (void)audit;
}

template <typename S>
concept CaseTaggedSpace = SpaceLike<S> && requires(const S& s, const typename S::point_type& p) {
    { s.metric_case(p, p) } -> std::convertible_to<std::uint32_t>;
};

/**
 * Wraps a fixture and tampers with exactly one of its metric cases: matching
 * nonzero distances are scaled by `factor`, matching zero distances are
 * replaced by `zero_bump`.  Everything else passes through unchanged, so a
 * certificate or identity check that still reports success against the
 * wrapper would be vacuous.
 */
template <CaseTaggedSpace S>
class CorruptSpace {
  public:
    using point_type = typename S::point_type;

    CorruptSpace(const S& inner, std::uint32_t target_case,
                 Rational factor = Rational(9, 8), Rational zero_bump = Rational(1, 2))
        : inner_(&inner), target_case_(target_case), factor_(std::move(factor)),
          zero_bump_(std::move(zero_bump)) {
        if (!(factor_ > Rational(0)) || factor_ == Rational(1))
            throw ValidationError("corruption factor must be positive and different from 1");
        if (!(zero_bump_ > Rational(0)))
            throw ValidationError("corruption bump must be positive");
    }

    ExactValue distance(const point_type& p, const point_type& q) const {
        ExactValue d = inner_->distance(p, q);
        if (inner_->metric_case(p, q) != target_case_) return d;
        if (d.is_zero()) return ExactValue(zero_bump_);
        return d.scaled(factor_);
    }

    std::optional<std::uint64_t> dense_size() const { return inner_->dense_size(); }
    point_type dense_point(std::uint64_t i) const { return inner_->dense_point(i); }
    const std::vector<point_type>& extra_points() const { return inner_->extra_points(); }
    SpaceKind kind() const { return inner_->kind(); }
    std::uint32_t metric_case(const point_type& p, const point_type& q) const {
        return inner_->metric_case(p, q);
    }

  private:
    const S* inner_;
    std::uint32_t target_case_;
    Rational factor_;
    Rational zero_bump_;
};

}  // namespace sepset
