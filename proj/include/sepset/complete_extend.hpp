#pragma once

/**
 * @file complete_extend.hpp
 * @brief Complete-space tools: choice in closed sets by Cauchy navigation of
 *        the dense enumeration, and extension of a non-strictly separated
 *        seed to a maximal one via delta/3-ball residuals.
 */

#include <sepset/errors.hpp>
#include <sepset/space.hpp>

#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace sepset {

// Access to a closed set F through ball queries.  member_test may be empty.
// Consistency requirement: member_test(p) implies intersects_open_ball(p, r)
// for every r > 0.
template <typename P>
struct ClosedSetOracle {
    std::function<bool(const P& center, const Rational& radius)> intersects_open_ball;
    std::function<bool(const P&)> member_test;
};

template <typename P>
struct ChooseResult {
    std::vector<std::uint64_t> indices;
    P point;
    Rational gap;  // dist(point, F) < gap = 2^-steps
};

// Least dense index in (after, limit] whose point lies in the open ball
// B(center, radius).  Spaces that understand their own enumeration answer
// directly; everything else walks the sequence.
template <SpaceLike S>
std::optional<std::uint64_t> next_dense_in_open_ball(const S& space,
                                                     const typename S::point_type& center,
                                                     const Rational& radius, std::uint64_t after,
                                                     std::uint64_t limit) {
    if constexpr (requires {
                      {
                          space.next_dense_in_open_ball(center, radius, after, limit)
                      } -> std::same_as<std::optional<std::uint64_t>>;
                  }) {
        return space.next_dense_in_open_ball(center, radius, after, limit);
    } else {
        for (std::uint64_t i = after + 1; i <= limit; ++i)
            if (space.distance(space.dense_point(i), center).compare(radius) < 0) return i;
        return std::nullopt;
    }
}

/**
 * Navigates the dense enumeration toward a nonempty closed set F.
 *
 * n_1 is the least index whose point is within 1/2 of F; thereafter n_{k+1}
 * is the least index i with d(x_i, x_{n_k}) < 2^-k and F meeting
 * B(x_i, 2^-(k+1)).  Consecutive selections contract by 2^-k, so in a
 * complete space the sequence converges into F; the run stops after `steps`
 * selections and reports gap = 2^-steps.
 */
template <SpaceLike S>
ChooseResult<typename S::point_type> choose_in_closed(
    const S& space, const ClosedSetOracle<typename S::point_type>& set, std::uint32_t steps,
    std::uint64_t scan_limit = std::uint64_t{1} << 22) {
    using P = typename S::point_type;
    if (steps == 0) throw ValidationError("steps must be positive");
    if (!set.intersects_open_ball) throw ValidationError("closed-set oracle is empty");
    if (!space_is_complete(space))
        throw UnsupportedCapability("closed-set choice needs a complete space");

    const std::uint64_t limit = dense_horizon(space, scan_limit);
    ChooseResult<P> out;
    std::optional<P> current;
    Rational radius(1, 2);
    for (std::uint32_t k = 0; k < steps; ++k) {
        bool found = false;
        if (!current) {
            for (std::uint64_t i = 1; i <= limit; ++i) {
                P cand = space.dense_point(i);
                if (!set.intersects_open_ball(cand, radius)) continue;
                out.indices.push_back(i);
                current = std::move(cand);
                found = true;
                break;
            }
        } else {
            const Rational contraction = Rational::pow2(-static_cast<int>(k));
            std::uint64_t i = 0;
            while (auto next = next_dense_in_open_ball(space, *current, contraction, i, limit)) {
                i = *next;
                P cand = space.dense_point(i);
                if (!set.intersects_open_ball(cand, radius)) continue;
                out.indices.push_back(i);
                current = std::move(cand);
                found = true;
                break;
            }
        }
        if (!found)
            throw BudgetExhausted("no dense point approaches the closed set within the scan limit");
        radius = radius / Rational(2);
    }
    out.point = *current;
    out.gap = Rational::pow2(-static_cast<int>(steps));
    return out;
}

enum class Ternary { False, True, Unknown };

template <typename P>
struct OpenBall {
    P center;
    Rational radius;
};

// Region queries about B-closed(center, radius) minus a union of open balls.
// residual_point returns a definite member; residual_nonempty may answer
// Unknown when the backing search is not exhaustive.
template <typename P>
struct RegionWitnessOracle {
    std::function<Ternary(const P& center, const Rational& closed_radius,
                          const std::vector<OpenBall<P>>& exclusions)>
        residual_nonempty;
    std::function<std::optional<P>(const P& center, const Rational& closed_radius,
                                   const std::vector<OpenBall<P>>& exclusions)>
        residual_point;
};

// Region oracle backed by a materialized point pool in discovery order.
// With exhaustive = true (the pool is the whole space) emptiness answers are
// definite; otherwise a miss only means Unknown.
template <SpaceLike S>
RegionWitnessOracle<typename S::point_type> pool_region_oracle(
    const S& space, std::vector<typename S::point_type> pool, bool exhaustive) {
    using P = typename S::point_type;
    auto find = [&space, pool = std::move(pool)](
                    const P& center, const Rational& closed_radius,
                    const std::vector<OpenBall<P>>& exclusions) -> std::optional<P> {
        for (const auto& p : pool) {
            if (space.distance(p, center).compare(closed_radius) > 0) continue;
            bool excluded = false;
            for (const auto& ball : exclusions) {
                if (space.distance(p, ball.center).compare(ball.radius) < 0) {
                    excluded = true;
                    break;
                }
            }
            if (!excluded) return p;
        }
        return std::nullopt;
    };
    RegionWitnessOracle<P> oracle;
    oracle.residual_point = find;
    oracle.residual_nonempty = [find, exhaustive](const P& center, const Rational& r,
                                                  const std::vector<OpenBall<P>>& ex) {
        if (find(center, r, ex)) return Ternary::True;
        return exhaustive ? Ternary::False : Ternary::Unknown;
    };
    return oracle;
}

struct ExtendBudgets {
    std::uint64_t enum_limit = 100000;
    std::uint32_t steps = 20;  // reserved for approximating spaces
};

template <typename P>
struct NonstrictExtendResult {
    SeparatedSet<P> set;
    Certificate<P> certificate;
    // True when residual emptiness was only dense-searched (the enumeration
    // was truncated), so skipped centers might have had nonempty residuals.
    bool heuristic = false;
};

/**
 * Extends a non-strictly delta-separated seed to a maximal one.
 *
 * The first new point is the least-discovery point outside the open
 * delta-neighborhood of the seed.  Afterwards, scanning dense indices in
 * increasing order, each index whose closed delta/3-ball minus the open
 * delta-balls of everything selected so far is nonempty contributes the
 * least-discovery member of that residual.  On finite presentations
 * (dense_size within enum_limit) residual queries are exact; otherwise the
 * search is truncated and the result is flagged heuristic.
 */
template <SpaceLike S>
NonstrictExtendResult<typename S::point_type> extend_nonstrict(
    const S& space, const SeparatedSet<typename S::point_type>& seed, const Rational& delta,
    ExtendBudgets budgets = {}) {
    using P = typename S::point_type;
    if (delta.sign() <= 0) throw ValidationError("delta must be positive");
    if (seed.mode != Mode::NonStrict)
        throw ValidationError("extension expects a nonstrict-mode seed");
    if (!space_is_complete(space))
        throw UnsupportedCapability("nonstrict extension needs a complete space");
    SeparatedSet<P> check{seed.points, delta, Mode::NonStrict, {}};
    if (is_separated(space, check)) throw ValidationError("seed is not nonstrictly separated");

    const std::uint64_t limit = dense_horizon(space, budgets.enum_limit);
    const bool exhaustive = space.dense_size() && *space.dense_size() <= budgets.enum_limit;
    auto pool = materialize_points(space, limit);
    auto oracle = pool_region_oracle(space, pool, exhaustive);

    NonstrictExtendResult<P> out;
    out.heuristic = !exhaustive;
    out.set.points = seed.points;
    out.set.delta = delta;
    out.set.mode = Mode::NonStrict;

    std::vector<OpenBall<P>> exclusions;
    exclusions.reserve(seed.points.size() + 8);
    for (const auto& s : seed.points) exclusions.push_back({s, delta});

    std::optional<P> start;
    for (const auto& p : pool) {
        if (!in_excision(space, seed.points, delta, p)) {
            start = p;
            break;
        }
    }
    if (start) {
        out.set.points.push_back(*start);
        exclusions.push_back({*start, delta});
        const Rational third = delta / Rational(3);
        for (std::uint64_t i = 1; i <= limit; ++i) {
            if (auto y = oracle.residual_point(space.dense_point(i), third, exclusions)) {
                out.set.points.push_back(*y);
                exclusions.push_back({*y, delta});
            }
        }
    }
    out.certificate = certify(space, out.set, limit);
    return out;
}

}  // namespace sepset
