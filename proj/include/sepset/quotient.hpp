#pragma once

/**
 * @file quotient.hpp
 * @brief Metric quotient of a pseudometric space: points at distance zero are
 *        identified, each class represented by its least-discovery member.
 *
 * Zero distance is transitive under the triangle inequality, so classes can
 * be formed by a single pass that compares each point against the
 * representatives found so far.  Requires a finite presentation (finite dense
 * enumeration, all points materializable within enum_limit); the quotient of
 * a space given only by an infinite enumeration is not computable here.
 */

#include <sepset/errors.hpp>
#include <sepset/space.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace sepset {

template <SpaceLike S>
class QuotientSpace {
  public:
    using point_type = typename S::point_type;

    ExactValue distance(const point_type& p, const point_type& q) const {
        return inner_->distance(p, q);
    }
    std::optional<std::uint64_t> dense_size() const { return dense_reps_.size(); }
    point_type dense_point(std::uint64_t i) const { return dense_reps_.at(i - 1); }
    const std::vector<point_type>& extra_points() const { return extra_reps_; }
    SpaceKind kind() const { return SpaceKind::Metric; }
    bool is_complete() const { return space_is_complete(*inner_); }

    // The class representative of any point of the original space.
    point_type representative(const point_type& p) const {
        for (const auto& r : reps_)
            if (inner_->distance(p, r).is_zero()) return r;
        throw ValidationError("point does not belong to the materialized space");
    }

    // Classes in discovery order; entry 0 of each class is its representative.
    const std::vector<std::vector<point_type>>& classes() const { return classes_; }
    const S& inner() const { return *inner_; }

  private:
    template <SpaceLike T>
    friend QuotientSpace<T> quotient_to_metric(const T&, std::uint64_t);

    const S* inner_ = nullptr;
    std::vector<point_type> reps_;        // all class reps, discovery order
    std::vector<point_type> dense_reps_;  // reps of classes meeting the dense set
    std::vector<point_type> extra_reps_;  // reps of classes of extra points only
    std::vector<std::vector<point_type>> classes_;
};

template <SpaceLike S>
QuotientSpace<S> quotient_to_metric(const S& space, std::uint64_t enum_limit = 100000) {
    using P = typename S::point_type;
    auto size = space.dense_size();
    if (!size || *size > enum_limit)
        throw UnsupportedCapability(
            "quotient needs a finite presentation within the enumeration limit");

    QuotientSpace<S> q;
    q.inner_ = &space;
    // Dense points are enumerated before extras, so a class touches the dense
    // set iff its discovery point is dense.
    std::vector<bool> class_is_dense;
    std::uint64_t rank = 0;
    for_each_enumerated(space, *size, [&](const P& p) {
        ++rank;
        for (std::size_t c = 0; c < q.reps_.size(); ++c) {
            if (space.distance(p, q.reps_[c]).is_zero()) {
                q.classes_[c].push_back(p);
                return true;
            }
        }
        q.reps_.push_back(p);
        q.classes_.push_back({p});
        class_is_dense.push_back(rank <= *size);
        return true;
    });
    for (std::size_t c = 0; c < q.reps_.size(); ++c)
        (class_is_dense[c] ? q.dense_reps_ : q.extra_reps_).push_back(q.reps_[c]);
    return q;
}

}  // namespace sepset
