#pragma once

/**
 * @file greedy.hpp
 * @brief Greedy construction of maximal strictly separated sets from the
 *        dense enumeration, seed extension by closed-ball excision, and
 *        trace verification.
 *
 * The construction scans candidate anchor indices n in increasing order and,
 * for each, searches for the least dense index k with
 *
 *     d(d_k, d_n) < delta/2   and   d(d_k, c) > delta for every chosen c.
 *
 * The first anchor is always (k, n) = (1, 1).  Anchors never need revisiting:
 * the region B(d_n, delta/2) \ union of closed delta-balls only shrinks as
 * points are chosen, and once an anchor yields a point, any further candidate
 * in its delta/2-ball is within delta of the chosen point.  A single forward
 * sweep over n therefore realizes the recursion, and each dense index is
 * examined once as an anchor.
 */

#include <sepset/errors.hpp>
#include <sepset/space.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sepset {

template <typename P>
struct BuildResult {
    SeparatedSet<P> set;
    GreedyTrace trace;
    Certificate<P> certificate;
};

template <SpaceLike S>
BuildResult<typename S::point_type> build_maximal_strict(const S& space, const Rational& delta,
                                                         std::uint64_t horizon,
                                                         std::uint64_t max_size = 0) {
    if (delta.sign() <= 0) throw ValidationError("delta must be positive");
    using P = typename S::point_type;
    BuildResult<P> out;
    out.set.delta = delta;
    out.set.mode = Mode::Strict;

    const std::uint64_t h = dense_horizon(space, horizon);
    const Rational half = delta / Rational(2);
    std::vector<P> dense;
    dense.reserve(h);
    for (std::uint64_t i = 1; i <= h; ++i) dense.push_back(space.dense_point(i));

    // blocked[k]: d_k+1 lies within the closed delta-ball of a chosen point.
    std::vector<bool> blocked(h, false);
    for (std::uint64_t n = 1; n <= h; ++n) {
        if (max_size != 0 && out.set.points.size() >= max_size) break;
        for (std::uint64_t k = 1; k <= h; ++k) {
            if (blocked[k - 1]) continue;
            if (space.distance(dense[k - 1], dense[n - 1]).compare(half) >= 0) continue;
            out.set.points.push_back(dense[k - 1]);
            out.trace.pairs.push_back({k, n});
            for (std::uint64_t j = 1; j <= h; ++j) {
                if (!blocked[j - 1] &&
                    space.distance(dense[j - 1], dense[k - 1]).compare(delta) <= 0)
                    blocked[j - 1] = true;
            }
            break;
        }
    }
    out.set.trace = out.trace;
    out.certificate = certify(space, out.set, horizon);
    return out;
}

// Checks a claimed trace against the defining properties:
//   (1) d(d_k_i, d_n_i) < delta/2
//   (2) the n_i are strictly increasing
//   (3) d(d_k_i, d_k_j) > delta for i != j
// Returns an explanation of the first failure, or nullopt when valid.
template <SpaceLike S>
std::optional<std::string> verify_trace_report(const S& space, const GreedyTrace& trace,
                                               const Rational& delta) {
    const Rational half = delta / Rational(2);
    for (std::size_t i = 0; i < trace.pairs.size(); ++i) {
        const auto& [k, n] = trace.pairs[i];
        if (k == 0 || n == 0) return "index pair " + std::to_string(i + 1) + " is not 1-based";
        if (auto sz = space.dense_size(); sz && (k > *sz || n > *sz))
            return "index pair " + std::to_string(i + 1) + " is out of range";
        if (space.distance(space.dense_point(k), space.dense_point(n)).compare(half) >= 0)
            return "pair " + std::to_string(i + 1) + ": chosen point is not within delta/2 of its anchor";
        if (i > 0 && trace.pairs[i - 1].n >= n)
            return "anchor indices fail to increase at pair " + std::to_string(i + 1);
        for (std::size_t j = 0; j < i; ++j) {
            if (!meets_separation(
                    space.distance(space.dense_point(k), space.dense_point(trace.pairs[j].k)),
                    delta, Mode::Strict))
                return "chosen points " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                       " are not strictly separated";
        }
    }
    return std::nullopt;
}

template <SpaceLike S>
bool verify_trace(const S& space, const GreedyTrace& trace, const Rational& delta) {
    return !verify_trace_report(space, trace, delta).has_value();
}

// View of a space with every dense point within the closed delta-ball of a
// seed member removed; extras are filtered the same way.
template <SpaceLike S>
class ExcisedSpace {
  public:
    using point_type = typename S::point_type;

    ExcisedSpace(const S& inner, const std::vector<point_type>& seed, const Rational& delta,
                 std::uint64_t horizon)
        : inner_(&inner) {
        std::uint64_t h = dense_horizon(inner, horizon);
        for (std::uint64_t i = 1; i <= h; ++i) {
            point_type p = inner.dense_point(i);
            if (survives(p, seed, delta)) surviving_.push_back(std::move(p));
        }
        for (const auto& e : inner.extra_points())
            if (survives(e, seed, delta)) extras_.push_back(e);
    }

    ExactValue distance(const point_type& p, const point_type& q) const {
        return inner_->distance(p, q);
    }
    std::optional<std::uint64_t> dense_size() const { return surviving_.size(); }
    point_type dense_point(std::uint64_t i) const { return surviving_.at(i - 1); }
    const std::vector<point_type>& extra_points() const { return extras_; }
    SpaceKind kind() const { return inner_->kind(); }
    bool is_complete() const { return space_is_complete(*inner_); }

  private:
    bool survives(const point_type& p, const std::vector<point_type>& seed,
                  const Rational& delta) const {
        for (const auto& s : seed)
            if (inner_->distance(p, s).compare(delta) <= 0) return false;
        return true;
    }

    const S* inner_;
    std::vector<point_type> surviving_;
    std::vector<point_type> extras_;
};

template <typename P>
struct ExtendResult {
    SeparatedSet<P> set;
    GreedyTrace trace;  // indices refer to the excised enumeration
    Certificate<P> certificate;
};

// Extends a strictly separated seed to a maximal strictly separated set: run
// the greedy construction on the space with the seed's closed delta-balls
// excised, then sweep the surviving extra points in catalogue order.
template <SpaceLike S>
ExtendResult<typename S::point_type> extend_via_excision(
    const S& space, const SeparatedSet<typename S::point_type>& seed, std::uint64_t horizon) {
    using P = typename S::point_type;
    if (seed.mode != Mode::Strict)
        throw ValidationError("excision extension expects a strict-mode seed");
    if (auto bad = is_separated(space, seed))
        throw ValidationError("seed is not strictly separated");

    ExcisedSpace<S> excised(space, seed.points, seed.delta, horizon);
    auto built = build_maximal_strict(excised, seed.delta, horizon);

    ExtendResult<P> out;
    out.set.delta = seed.delta;
    out.set.mode = Mode::Strict;
    out.set.points = seed.points;
    for (const auto& p : built.set.points) out.set.points.push_back(p);
    out.trace = built.trace;
    for (const auto& e : excised.extra_points())
        if (is_addable(space, out.set, e)) out.set.points.push_back(e);
    out.set.trace = out.trace;
    out.certificate = certify(space, out.set, horizon);
    return out;
}

}  // namespace sepset
