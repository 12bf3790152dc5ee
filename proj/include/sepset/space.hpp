#pragma once

/**
 * @file space.hpp
 * @brief Space abstraction (distance oracle + dense enumeration) and the
 *        separation / maximality predicates with machine-checkable
 *        certificates.
 *
 * A space presents: an exact distance oracle, a 1-based dense enumeration
 * (finite or infinite), an optional catalogue of non-dense extra points, and
 * its kind (metric or pseudometric).  Separated sets and certificates are
 * plain data.  Maximality is always certified against a finite horizon (the
 * first `horizon` dense points plus every extra point); that is the honest
 * computational surrogate for maximality in an infinite space, and the
 * certificate records the horizon it was checked at.
 */

#include <sepset/errors.hpp>
#include <sepset/exact_value.hpp>
#include <sepset/rational.hpp>

#include <concepts>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace sepset {

enum class SpaceKind { Metric, Pseudometric };
enum class Mode { Strict, NonStrict };

inline const char* to_string(Mode m) { return m == Mode::Strict ? "strict" : "nonstrict"; }
inline const char* to_string(SpaceKind k) {
    return k == SpaceKind::Metric ? "metric" : "pseudometric";
}

template <typename S>
concept SpaceLike = requires(const S& s, const typename S::point_type& p, std::uint64_t i) {
    typename S::point_type;
    { s.distance(p, p) } -> std::convertible_to<ExactValue>;
    { s.dense_size() } -> std::convertible_to<std::optional<std::uint64_t>>;
    { s.dense_point(i) } -> std::convertible_to<typename S::point_type>;
    { s.extra_points() } -> std::convertible_to<const std::vector<typename S::point_type>&>;
    { s.kind() } -> std::convertible_to<SpaceKind>;
};

template <SpaceLike S>
bool space_is_complete(const S& s) {
    if constexpr (requires { { s.is_complete() } -> std::convertible_to<bool>; })
        return s.is_complete();
    else
        return false;
}

// Number of dense indices visible under a horizon.
template <SpaceLike S>
std::uint64_t dense_horizon(const S& s, std::uint64_t horizon) {
    if (auto n = s.dense_size()) return horizon < *n ? horizon : *n;
    return horizon;
}

struct TracePair {
    std::uint64_t k = 0;
    std::uint64_t n = 0;
    friend bool operator==(const TracePair&, const TracePair&) = default;
};

// Construction provenance of a greedy run: the (k_i, n_i) index pairs.
struct GreedyTrace {
    std::vector<TracePair> pairs;
    friend bool operator==(const GreedyTrace&, const GreedyTrace&) = default;
};

template <typename P>
struct SeparatedSet {
    std::vector<P> points;
    Rational delta = Rational(1);
    Mode mode = Mode::Strict;
    std::optional<GreedyTrace> trace;
};

template <typename P>
struct PairViolation {
    P a;
    P b;
    ExactValue dist;
};

template <typename P>
struct Certificate {
    bool separation_ok = true;
    bool maximal_on_horizon = true;
    std::uint64_t horizon = 1;
    std::optional<PairViolation<P>> violation;  // pair at forbidden distance
    std::optional<P> addable;                   // point refuting maximality
    bool ok() const { return separation_ok && maximal_on_horizon; }
};

// Separation test for one distance, in the given mode.
inline bool meets_separation(const ExactValue& d, const Rational& delta, Mode mode) {
    auto ord = d.compare(delta);
    return mode == Mode::Strict ? ord > 0 : ord >= 0;
}

// Visits the first `horizon` dense points, then every extra point.
// f(point) returns true to continue, false to stop early.
template <SpaceLike S, typename F>
void for_each_enumerated(const S& space, std::uint64_t horizon, F&& f) {
    std::uint64_t h = dense_horizon(space, horizon);
    for (std::uint64_t i = 1; i <= h; ++i)
        if (!f(space.dense_point(i))) return;
    for (const auto& p : space.extra_points())
        if (!f(p)) return;
}

// Dense points up to `horizon` followed by the extra catalogue, in discovery
// order.  Throws BudgetExhausted when the space is infinite (no dense_size).
template <SpaceLike S>
std::vector<typename S::point_type> materialize_points(const S& space, std::uint64_t horizon) {
    if (!space.dense_size() && horizon == 0)
        throw BudgetExhausted("cannot materialize an infinite dense enumeration");
    std::vector<typename S::point_type> out;
    for_each_enumerated(space, horizon, [&](const auto& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

template <SpaceLike S>
std::optional<PairViolation<typename S::point_type>> is_separated(
    const S& space, const SeparatedSet<typename S::point_type>& set) {
    for (std::size_t i = 0; i < set.points.size(); ++i)
        for (std::size_t j = i + 1; j < set.points.size(); ++j) {
            ExactValue d = space.distance(set.points[i], set.points[j]);
            if (!meets_separation(d, set.delta, set.mode))
                return PairViolation<typename S::point_type>{set.points[i], set.points[j], d};
        }
    return std::nullopt;
}

// True iff dist(x, s) < delta for some member s (union of open delta-balls).
template <SpaceLike S>
bool in_excision(const S& space, const std::vector<typename S::point_type>& members,
                 const Rational& delta, const typename S::point_type& x) {
    for (const auto& s : members)
        if (space.distance(x, s).compare(delta) < 0) return true;
    return false;
}

// A point is addable iff it meets the mode's separation bound against every
// member.  Members themselves are never addable (distance 0 to themselves).
template <SpaceLike S>
bool is_addable(const S& space, const SeparatedSet<typename S::point_type>& set,
                const typename S::point_type& x) {
    for (const auto& s : set.points)
        if (!meets_separation(space.distance(x, s), set.delta, set.mode)) return false;
    return true;
}

template <SpaceLike S>
std::optional<typename S::point_type> find_addable(
    const S& space, const SeparatedSet<typename S::point_type>& set, std::uint64_t horizon) {
    std::optional<typename S::point_type> witness;
    for_each_enumerated(space, horizon, [&](const auto& p) {
        if (is_addable(space, set, p)) {
            witness = p;
            return false;
        }
        return true;
    });
    return witness;
}

template <SpaceLike S>
Certificate<typename S::point_type> certify(const S& space,
                                            const SeparatedSet<typename S::point_type>& set,
                                            std::uint64_t horizon) {
    Certificate<typename S::point_type> cert;
    cert.horizon = horizon;
    if (auto bad = is_separated(space, set)) {
        cert.separation_ok = false;
        cert.violation = *bad;
    }
    if (auto witness = find_addable(space, set, horizon)) {
        cert.maximal_on_horizon = false;
        cert.addable = *witness;
    }
    return cert;
}

// Entry m (0-based, m < depth) is the least dense index i <= budget with
// dist(d_i, x) < 1/(m+1).  The resulting index list identifies x among all
// points the dense set separates.
template <SpaceLike S>
std::vector<std::uint64_t> encode_point(const S& space, const typename S::point_type& x,
                                        std::uint32_t depth, std::uint64_t budget) {
    std::vector<std::uint64_t> code;
    code.reserve(depth);
    std::uint64_t limit = dense_horizon(space, budget);
    for (std::uint32_t m = 0; m < depth; ++m) {
        Rational radius(1, m + 1);
        bool found = false;
        for (std::uint64_t i = 1; i <= limit; ++i) {
            if (space.distance(space.dense_point(i), x).compare(radius) < 0) {
                code.push_back(i);
                found = true;
                break;
            }
        }
        if (!found)
            throw BudgetExhausted("no dense point within 1/" + std::to_string(m + 1) +
                                  " of the target inside the enumeration budget");
    }
    return code;
}

// Same space with every distance multiplied by rho > 0.
template <SpaceLike S>
class ScaledSpace {
  public:
    using point_type = typename S::point_type;

    ScaledSpace(const S& inner, Rational rho) : inner_(&inner), rho_(std::move(rho)) {
        if (rho_.sign() <= 0) throw ValidationError("rescale factor must be positive");
    }

    ExactValue distance(const point_type& p, const point_type& q) const {
        return inner_->distance(p, q).scaled(rho_);
    }
    std::optional<std::uint64_t> dense_size() const { return inner_->dense_size(); }
    point_type dense_point(std::uint64_t i) const { return inner_->dense_point(i); }
    const std::vector<point_type>& extra_points() const { return inner_->extra_points(); }
    SpaceKind kind() const { return inner_->kind(); }
    bool is_complete() const { return space_is_complete(*inner_); }

    const S& inner() const { return *inner_; }
    const Rational& rho() const { return rho_; }

  private:
    const S* inner_;
    Rational rho_;
};

template <SpaceLike S>
ScaledSpace<S> rescale(const S& space, const Rational& rho) {
    return ScaledSpace<S>(space, rho);
}

}  // namespace sepset
