#pragma once

/**
 * @file circle.hpp
 * @brief Disk-island fixture in the plane.  Island n sits around the center
 *        (4n, 0): a rational grid of pitch 1/R fills the open unit disk, and
 *        every label of Y_n is placed on the unit circle itself through the
 *        tangent half-angle map t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)), so label
 *        points are rational, pairwise distinct, and exactly 1 from their
 *        center.  Islands are 4 apart and never interact at unit scale.
 *
 * Dense order walks (grid rank, island) diagonals; the grid is ranked by
 * (|p| + |q|, p, q) so rank 1 is the center.  Labels are the extra points.
 */

#include <sepset/errors.hpp>
#include <sepset/exact_value.hpp>
#include <sepset/fixtures/family.hpp>
#include <sepset/fixtures/fixtures.hpp>
#include <sepset/space.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sepset {

struct CirclePoint {
    enum class Kind : std::uint8_t { Grid, Label };
    Kind kind = Kind::Grid;
    std::uint32_t n = 0;  // island index
    Rational x;           // absolute coordinates
    Rational y;
    std::string name;     // meaningful for Label
    Rational t;           // circle parameter, meaningful for Label

    friend bool operator==(const CirclePoint&, const CirclePoint&) = default;

    std::string str() const {
        if (kind == Kind::Label)
            return "label '" + name + "' (t = " + t.str() + ", island " + std::to_string(n) + ")";
        return "(" + x.str() + ", " + y.str() + ")";
    }
};

class CircleSpace {
  public:
    using point_type = CirclePoint;

    CircleSpace(FamilyY family, std::uint32_t disk_resolution)
        : family_(std::move(family)), r_(disk_resolution) {
        validate_circle_family(family_);
        if (r_ == 0) throw ValidationError("disk resolution must be positive");
        long long lim = static_cast<long long>(r_);
        for (long long p = -(lim - 1); p <= lim - 1; ++p)
            for (long long q = -(lim - 1); q <= lim - 1; ++q)
                if (p * p + q * q < lim * lim) offsets_.emplace_back(p, q);
        std::sort(offsets_.begin(), offsets_.end(), [](const auto& a, const auto& b) {
            auto ka = std::llabs(a.first) + std::llabs(a.second);
            auto kb = std::llabs(b.first) + std::llabs(b.second);
            if (ka != kb) return ka < kb;
            return a < b;
        });
        for (std::uint32_t n = 0; n < family_.size(); ++n)
            for (const auto& l : family_.sets[n].labels)
                extras_.push_back(label_point(n, l.name, *l.value));
    }

    ExactValue distance(const CirclePoint& p, const CirclePoint& q) const {
        return ExactValue::sqrt_of(square(p.x - q.x) + square(p.y - q.y));
    }

    std::optional<std::uint64_t> dense_size() const {
        return static_cast<std::uint64_t>(offsets_.size()) * family_.size();
    }

    CirclePoint dense_point(std::uint64_t idx) const {
        if (idx == 0 || idx > *dense_size())
            throw ValidationError("dense indices are 1-based and bounded by the truncation");
        auto [rank, n] = diagonal_cell(idx - 1, offsets_.size(), family_.size());
        return grid_point(static_cast<std::uint32_t>(n), offsets_[rank - 1]);
    }

    const std::vector<CirclePoint>& extra_points() const { return extras_; }
    SpaceKind kind() const { return SpaceKind::Metric; }
    bool is_complete() const { return true; }

    std::uint32_t disk_resolution() const { return r_; }
    std::uint64_t grid_size() const { return offsets_.size(); }
    const FamilyY& family() const { return family_; }

    // Non-strict unit-separated seed: the island centers.
    SeparatedSet<CirclePoint> canonical_seed() const {
        SeparatedSet<CirclePoint> seed;
        seed.delta = Rational(1);
        seed.mode = Mode::NonStrict;
        for (std::uint32_t n = 0; n < family_.size(); ++n)
            seed.points.push_back(grid_point(n, {0, 0}));
        return seed;
    }

    // Cases: 0 cross-island, 1 grid-grid, 2 grid-label, 3 label-label.
    std::uint32_t metric_case(const CirclePoint& p, const CirclePoint& q) const {
        if (p.n != q.n) return 0;
        bool pl = p.kind == CirclePoint::Kind::Label;
        bool ql = q.kind == CirclePoint::Kind::Label;
        if (pl && ql) return 3;
        if (pl || ql) return 2;
        return 1;
    }

    IdentityReport check_identities(std::uint64_t bound) const {
        return check_identities_against(*this, bound);
    }

    // Same identity suite, with distances read from `dist` instead of this
    // fixture (so a corrupted wrapper can be put in front of the checker).
    template <typename DistanceSource>
    IdentityReport check_identities_against(const DistanceSource& dist,
                                            std::uint64_t bound) const;

    // One label per island: the least circle parameter wins.
    std::map<std::uint32_t, std::string> extract_choice(const SeparatedSet<CirclePoint>& s) const {
        std::map<std::uint32_t, const CirclePoint*> best;
        for (const auto& p : s.points) {
            if (p.kind != CirclePoint::Kind::Label) continue;
            auto it = best.find(p.n);
            if (it == best.end() || p.t < it->second->t) best[p.n] = &p;
        }
        std::map<std::uint32_t, std::string> out;
        for (std::uint32_t n = 0; n < family_.size(); ++n) {
            auto it = best.find(n);
            if (it == best.end())
                throw ExtractionError(n, "island " + std::to_string(n) + " contributes no label");
            out[n] = it->second->name;
        }
        return out;
    }

  private:
    CirclePoint grid_point(std::uint32_t n, std::pair<long long, long long> off) const {
        Rational cx(4 * static_cast<long long>(n));
        return CirclePoint{CirclePoint::Kind::Grid, n,
                           cx + Rational(BigInt(off.first), BigInt(r_)),
                           Rational(BigInt(off.second), BigInt(r_)), {}, Rational(0)};
    }

    CirclePoint label_point(std::uint32_t n, const std::string& name, const Rational& t) const {
        Rational denom = Rational(1) + square(t);
        Rational cx(4 * static_cast<long long>(n));
        return CirclePoint{CirclePoint::Kind::Label, n,
                           cx + (Rational(1) - square(t)) / denom,
                           (Rational(2) * t) / denom, name, t};
    }

    static std::pair<std::uint64_t, std::uint64_t> diagonal_cell(std::uint64_t cell,
                                                                 std::uint64_t ranks,
                                                                 std::uint64_t nsets) {
        for (std::uint64_t diag = 0;; ++diag) {
            std::uint64_t lo = diag >= nsets - 1 ? diag - (nsets - 1) : 0;
            std::uint64_t hi = diag < ranks - 1 ? diag : ranks - 1;
            if (lo > hi) continue;
            std::uint64_t count = hi - lo + 1;
            if (cell < count) {
                std::uint64_t rm1 = lo + cell;
                return {rm1 + 1, diag - rm1};
            }
            cell -= count;
        }
    }

    FamilyY family_;
    std::uint32_t r_;
    std::vector<std::pair<long long, long long>> offsets_;
    std::vector<CirclePoint> extras_;
};

template <typename DistanceSource>
IdentityReport CircleSpace::check_identities_against(const DistanceSource& dist,
                                            std::uint64_t bound) const {
    IdentityReport report;
    auto& entries = report.entries;
    auto fail = [&](IdentityEntry& e, const CirclePoint& p, const CirclePoint& q) {
        if (!e.pass) return;
        e.pass = false;
        e.counterexample = "d(" + p.str() + ", " + q.str() + ") = " + dist.distance(p, q).str();
    };
    std::uint32_t nsets = static_cast<std::uint32_t>(family_.size());

    entries.push_back({"self-distance zero", true, {}});
    entries.push_back({"labels sit exactly 1 from their center", true, {}});
    entries.push_back({"grid points sit strictly within 1 of their center", true, {}});
    entries.push_back({"islands keep at least unit distance", true, {}});
    entries.push_back({"labels within an island are distinct points", true, {}});
    IdentityEntry& self_zero = entries[0];
    IdentityEntry& label_unit = entries[1];
    IdentityEntry& grid_inside = entries[2];
    IdentityEntry& islands_apart = entries[3];
    IdentityEntry& labels_distinct = entries[4];

    std::uint64_t rank_cap = std::min<std::uint64_t>(offsets_.size(), bound * bound);
    ExactValue one{Rational(1)};

    for (std::uint32_t n = 0; n < nsets; ++n) {
        CirclePoint center = grid_point(n, {0, 0});
        for (std::uint64_t r = 0; r < rank_cap; ++r) {
            CirclePoint g = grid_point(n, offsets_[r]);
            if (!dist.distance(g, g).is_zero()) fail(self_zero, g, g);
            if (dist.distance(center, g).compare(Rational(1)) >= 0) fail(grid_inside, center, g);
        }
    }
    for (const auto& lab : extras_) {
        if (!dist.distance(lab, lab).is_zero()) fail(self_zero, lab, lab);
        CirclePoint center = grid_point(lab.n, {0, 0});
        if (!dist.distance(center, lab).same_value(one)) fail(label_unit, center, lab);
    }
    for (std::size_t u = 0; u < extras_.size(); ++u)
        for (std::size_t v = u + 1; v < extras_.size(); ++v)
            if (extras_[u].n == extras_[v].n && dist.distance(extras_[u], extras_[v]).is_zero())
                fail(labels_distinct, extras_[u], extras_[v]);

    std::uint64_t small = std::min<std::uint64_t>(rank_cap, 16);
    std::vector<CirclePoint> sample;
    for (std::uint32_t n = 0; n < nsets; ++n) {
        for (std::uint64_t r = 0; r < small; ++r) sample.push_back(grid_point(n, offsets_[r]));
        for (const auto& lab : extras_)
            if (lab.n == n) sample.push_back(lab);
    }
    for (const auto& p : sample)
        for (const auto& q : sample) {
            if (p.n >= q.n) continue;
            if (dist.distance(p, q).compare(Rational(1)) < 0) fail(islands_apart, p, q);
        }

    return report;
}

}  // namespace sepset
