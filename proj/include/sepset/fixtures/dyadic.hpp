#pragma once

/**
 * @file dyadic.hpp
 * @brief Line fixture on the window [0, 3N] with a jump metric.  D0 is the
 *        truncated dyadic ladder, D1 its shift by 1/3.  Any pair touching D1
 *        is pushed apart by 1 with a skewed offset so that every D0 point is
 *        exactly 1 from its shifted partner, while plain pairs keep their
 *        Euclidean gap.  Labels of Y_n live in (3n, 3n+1) off both ladders.
 *
 * Dense order walks the ladder depth by depth, emitting each D0 point
 * immediately followed by its D1 partner; labels are the extra points.
 */

#include <sepset/errors.hpp>
#include <sepset/exact_value.hpp>
#include <sepset/fixtures/family.hpp>
#include <sepset/fixtures/fixtures.hpp>
#include <sepset/space.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sepset {

struct DyadicPoint {
    enum class Kind : std::uint8_t { Dyadic, Shifted, Label };
    Kind kind = Kind::Dyadic;
    Rational value;       // absolute position on the line
    std::uint32_t n = 0;  // set index, meaningful for Label
    std::string name;     // meaningful for Label

    friend bool operator==(const DyadicPoint&, const DyadicPoint&) = default;

    std::string str() const {
        if (kind == Kind::Label) return "label '" + name + "' at " + value.str();
        return value.str();
    }
};

class DyadicSpace {
  public:
    using point_type = DyadicPoint;

    DyadicSpace(FamilyY family, std::uint32_t depth)
        : family_(std::move(family)), depth_(depth) {
        validate_dyadic_family(family_);
        if (depth_ > 48) throw ValidationError("ladder depth is limited to 48");
        window_ = std::uint64_t{3} * family_.size();
        d0_count_ = (window_ << depth_) + 1;
        for (std::uint32_t n = 0; n < family_.size(); ++n)
            for (const auto& l : family_.sets[n].labels)
                extras_.push_back(DyadicPoint{DyadicPoint::Kind::Label, *l.value, n, l.name});
    }

    ExactValue distance(const DyadicPoint& p, const DyadicPoint& q) const {
        if (p == q) return ExactValue(Rational(0));
        bool ps = p.kind == DyadicPoint::Kind::Shifted;
        bool qs = q.kind == DyadicPoint::Kind::Shifted;
        if (ps && qs) return ExactValue(Rational(1) + (p.value - q.value).abs());
        if (ps) return ExactValue(Rational(1) + (q.value - p.value + Rational(1, 3)).abs());
        if (qs) return ExactValue(Rational(1) + (p.value - q.value + Rational(1, 3)).abs());
        return ExactValue((p.value - q.value).abs());
    }

    std::optional<std::uint64_t> dense_size() const { return 2 * d0_count_; }

    DyadicPoint dense_point(std::uint64_t idx) const {
        if (idx == 0 || idx > 2 * d0_count_)
            throw ValidationError("dense indices are 1-based and bounded by the ladder size");
        std::uint64_t j = (idx + 1) / 2;  // 1-based D0 rank
        bool shifted = idx % 2 == 0;
        Rational base = d0_value(j);
        if (shifted) return DyadicPoint{DyadicPoint::Kind::Shifted, base + Rational(1, 3), 0, {}};
        return DyadicPoint{DyadicPoint::Kind::Dyadic, base, 0, {}};
    }

    const std::vector<DyadicPoint>& extra_points() const { return extras_; }
    SpaceKind kind() const { return SpaceKind::Metric; }
    // representable points are rational, so Cauchy limits can escape
    bool is_complete() const { return false; }

    std::uint32_t depth() const { return depth_; }
    const FamilyY& family() const { return family_; }

    /**
     * Strict unit-separated seed: the shifted partners among the first
     * `horizon` dense points.  The horizon must be even so no D0 point of the
     * covered range is missing its partner; an odd cut would leave a plain
     * dyadic both unblocked and label-blocking.
     */
    SeparatedSet<DyadicPoint> canonical_seed(std::uint64_t horizon) const {
        if (horizon == 0 || horizon % 2 != 0)
            throw ValidationError(
                "seed horizon must be even so each dyadic point keeps its shifted partner");
        if (horizon > 2 * d0_count_)
            throw ValidationError("seed horizon exceeds the ladder enumeration");
        SeparatedSet<DyadicPoint> seed;
        seed.delta = Rational(1);
        seed.mode = Mode::Strict;
        for (std::uint64_t i = 2; i <= horizon; i += 2) seed.points.push_back(dense_point(i));
        return seed;
    }

    // Cases: 0 identical point, 1 both shifted, 2 exactly one shifted,
    // 3 neither shifted.
    std::uint32_t metric_case(const DyadicPoint& p, const DyadicPoint& q) const {
        if (p == q) return 0;
        bool ps = p.kind == DyadicPoint::Kind::Shifted;
        bool qs = q.kind == DyadicPoint::Kind::Shifted;
        if (ps && qs) return 1;
        if (ps || qs) return 2;
        return 3;
    }

    IdentityReport check_identities(std::uint64_t bound) const {
        return check_identities_against(*this, bound);
    }

    // Same identity suite, with distances read from `dist` instead of this
    // fixture (so a corrupted wrapper can be put in front of the checker).
    template <typename DistanceSource>
    IdentityReport check_identities_against(const DistanceSource& dist,
                                            std::uint64_t bound) const;

    std::map<std::uint32_t, std::string> extract_choice(const SeparatedSet<DyadicPoint>& s) const {
        std::map<std::uint32_t, std::vector<std::string>> hits;
        for (const auto& p : s.points)
            if (p.kind == DyadicPoint::Kind::Label) hits[p.n].push_back(p.name);
        std::map<std::uint32_t, std::string> out;
        for (std::uint32_t n = 0; n < family_.size(); ++n) {
            auto it = hits.find(n);
            if (it == hits.end() || it->second.empty())
                throw ExtractionError(n, "set " + std::to_string(n) + " contributes no label");
            if (it->second.size() > 1)
                throw ExtractionError(n, "set " + std::to_string(n) + " contributes " +
                                             std::to_string(it->second.size()) + " labels");
            out[n] = it->second.front();
        }
        return out;
    }

  private:
    // 1-based rank -> dyadic value, depth by depth, ascending inside a depth
    Rational d0_value(std::uint64_t j) const {
        if (j <= window_ + 1) return Rational(BigInt(j - 1));
        std::uint64_t rest = j - (window_ + 1);
        std::uint64_t d = 1;
        while (rest > (window_ << (d - 1))) {
            rest -= window_ << (d - 1);
            ++d;
        }
        std::uint64_t m = 2 * (rest - 1) + 1;
        return Rational(BigInt(m), BigInt(std::uint64_t{1} << d));
    }

    FamilyY family_;
    std::uint32_t depth_;
    std::uint64_t window_ = 0;
    std::uint64_t d0_count_ = 0;
    std::vector<DyadicPoint> extras_;
};

template <typename DistanceSource>
IdentityReport DyadicSpace::check_identities_against(const DistanceSource& dist,
                                            std::uint64_t bound) const {
    IdentityReport report;
    auto& entries = report.entries;
    auto fail = [&](IdentityEntry& e, const DyadicPoint& p, const DyadicPoint& q) {
        if (!e.pass) return;
        e.pass = false;
        e.counterexample = "d(" + p.str() + ", " + q.str() + ") = " + dist.distance(p, q).str();
    };

    entries.push_back({"self-distance zero", true, {}});
    entries.push_back({"ladder partners are exactly 1 apart", true, {}});
    entries.push_back({"shifted points exceed 1 pairwise", true, {}});
    entries.push_back({"labels exceed 1 from every shifted point", true, {}});
    entries.push_back({"labels within a set are below 1", true, {}});
    entries.push_back({"labels across sets exceed 1", true, {}});
    IdentityEntry& self_zero = entries[0];
    IdentityEntry& partner_unit = entries[1];
    IdentityEntry& shifted_sep = entries[2];
    IdentityEntry& label_vs_shifted = entries[3];
    IdentityEntry& labels_close = entries[4];
    IdentityEntry& labels_far = entries[5];

    std::uint64_t pairs = std::min<std::uint64_t>(bound, d0_count_);
    std::vector<DyadicPoint> shifted;
    for (std::uint64_t j = 1; j <= pairs; ++j) {
        DyadicPoint plain = dense_point(2 * j - 1);
        DyadicPoint part = dense_point(2 * j);
        if (!dist.distance(plain, plain).is_zero()) fail(self_zero, plain, plain);
        if (!dist.distance(part, part).is_zero()) fail(self_zero, part, part);
        if (!dist.distance(plain, part).same_value(ExactValue(Rational(1))))
            fail(partner_unit, plain, part);
        shifted.push_back(part);
    }
    std::size_t k = std::min<std::size_t>(shifted.size(), 64);
    for (std::size_t u = 0; u < k; ++u)
        for (std::size_t v = u + 1; v < k; ++v)
            if (dist.distance(shifted[u], shifted[v]).compare(Rational(1)) <= 0)
                fail(shifted_sep, shifted[u], shifted[v]);

    for (const auto& lab : extras_) {
        if (!dist.distance(lab, lab).is_zero()) fail(self_zero, lab, lab);
        for (std::size_t u = 0; u < k; ++u)
            if (dist.distance(lab, shifted[u]).compare(Rational(1)) <= 0)
                fail(label_vs_shifted, lab, shifted[u]);
    }
    for (std::size_t u = 0; u < extras_.size(); ++u)
        for (std::size_t v = u + 1; v < extras_.size(); ++v) {
            ExactValue d = dist.distance(extras_[u], extras_[v]);
            if (extras_[u].n == extras_[v].n) {
                if (d.compare(Rational(1)) >= 0) fail(labels_close, extras_[u], extras_[v]);
            } else {
                if (d.compare(Rational(1)) <= 0) fail(labels_far, extras_[u], extras_[v]);
            }
        }

    return report;
}

}  // namespace sepset
