#pragma once

/**
 * @file interval_space.hpp
 * @brief The closed rational interval [lo, hi] with |x - y| distances and a
 *        dyadic dense enumeration, plus exact closed-set oracles over it.
 *
 * Enumeration order: both endpoints, then the midpoint, then for each depth
 * d >= 2 the points lo + (hi-lo) * m / 2^d for odd m in increasing order.  On
 * [0, 1] this reads 0, 1, 1/2, 1/4, 3/4, 1/8, 3/8, 5/8, 7/8, 1/16, ...
 */

#include <sepset/complete_extend.hpp>
#include <sepset/errors.hpp>
#include <sepset/space.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace sepset {

class IntervalSpace {
  public:
    using point_type = Rational;

    IntervalSpace(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (lo_ >= hi_) throw ValidationError("interval needs lo < hi");
        width_ = hi_ - lo_;
    }

    ExactValue distance(const Rational& a, const Rational& b) const {
        return ExactValue((a - b).abs());
    }
    std::optional<std::uint64_t> dense_size() const { return std::nullopt; }
    Rational dense_point(std::uint64_t i) const {
        if (i == 0) throw ValidationError("dense indices are 1-based");
        if (i == 1) return lo_;
        if (i == 2) return hi_;
        int depth = std::bit_width(i - 2);
        std::uint64_t block_start = (std::uint64_t{1} << (depth - 1)) + 2;
        std::uint64_t m = 2 * (i - block_start) + 1;
        return lo_ + width_ * Rational(BigInt(m)) * Rational::pow2(-depth);
    }
    // Least dense index in (after, limit] whose point falls in the open ball
    // around center.  Each depth block is the odd numerators m/2^d in
    // increasing order, so the ball cuts one contiguous m-range out of it and
    // a single candidate per depth decides the block.
    std::optional<std::uint64_t> next_dense_in_open_ball(const Rational& center,
                                                         const Rational& radius,
                                                         std::uint64_t after,
                                                         std::uint64_t limit) const {
        if (radius.sign() <= 0) return std::nullopt;
        if (after < 1 && limit >= 1 && (lo_ - center).abs() < radius) return 1;
        if (after < 2 && limit >= 2 && (hi_ - center).abs() < radius) return 2;
        const Rational a = (center - radius - lo_) / width_;
        const Rational b = (center + radius - lo_) / width_;
        for (int depth = 1;; ++depth) {
            const std::uint64_t block_start = (std::uint64_t{1} << (depth - 1)) + 2;
            if (block_start > limit) return std::nullopt;
            const std::uint64_t block_end = std::min((std::uint64_t{1} << depth) + 1, limit);
            const std::uint64_t first = std::max(block_start, after + 1);
            if (first > block_end) continue;
            const Rational scale = Rational::pow2(depth);
            BigInt m = (a * scale).floor() + 1;  // least integer strictly above a * 2^depth
            if (m % 2 == 0) ++m;
            const BigInt m_first(2 * (first - block_start) + 1);
            if (m < m_first) m = m_first;
            if (m > BigInt(2 * (block_end - block_start) + 1)) continue;
            if (Rational(m) < b * scale)
                return block_start + ((m - 1) / 2).convert_to<std::uint64_t>();
        }
    }
    const std::vector<Rational>& extra_points() const { return no_extras_; }
    SpaceKind kind() const { return SpaceKind::Metric; }
    bool is_complete() const { return true; }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }

  private:
    Rational lo_, hi_, width_;
    std::vector<Rational> no_extras_;
};

// Exact distance from x to a finite point set (infinity is never needed:
// callers guarantee nonempty sets).
inline Rational distance_to_points(const std::vector<Rational>& pts, const Rational& x) {
    if (pts.empty()) throw ValidationError("distance to an empty set");
    Rational best = (pts.front() - x).abs();
    for (const auto& p : pts) best = std::min(best, (p - x).abs());
    return best;
}

inline Rational distance_to_interval(const Rational& a, const Rational& b, const Rational& x) {
    if (a > b) throw ValidationError("empty interval");
    Rational zero(0);
    return std::max({a - x, x - b, zero});
}

inline ClosedSetOracle<Rational> finite_points_set(std::vector<Rational> pts) {
    if (pts.empty()) throw ValidationError("closed set must be nonempty");
    ClosedSetOracle<Rational> f;
    f.intersects_open_ball = [pts](const Rational& c, const Rational& r) {
        return distance_to_points(pts, c) < r;
    };
    f.member_test = [pts](const Rational& x) {
        return std::find(pts.begin(), pts.end(), x) != pts.end();
    };
    return f;
}

inline ClosedSetOracle<Rational> closed_interval_set(Rational a, Rational b) {
    if (a > b) throw ValidationError("closed set must be nonempty");
    ClosedSetOracle<Rational> f;
    f.intersects_open_ball = [a, b](const Rational& c, const Rational& r) {
        return distance_to_interval(a, b, c) < r;
    };
    f.member_test = [a, b](const Rational& x) { return a <= x && x <= b; };
    return f;
}

// Union of closed cells [g - radius, g + radius] around grid centers.
inline ClosedSetOracle<Rational> grid_cells_set(std::vector<Rational> centers, Rational radius) {
    if (centers.empty()) throw ValidationError("closed set must be nonempty");
    if (radius.sign() < 0) throw ValidationError("cell radius must be nonnegative");
    ClosedSetOracle<Rational> f;
    f.intersects_open_ball = [centers, radius](const Rational& c, const Rational& r) {
        for (const auto& g : centers)
            if (distance_to_interval(g - radius, g + radius, c) < r) return true;
        return false;
    };
    f.member_test = [centers, radius](const Rational& x) {
        for (const auto& g : centers)
            if ((x - g).abs() <= radius) return true;
        return false;
    };
    return f;
}

}  // namespace sepset
