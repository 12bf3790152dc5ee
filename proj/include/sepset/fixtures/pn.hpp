#pragma once

/**
 * @file pn.hpp
 * @brief Planar arc fixture.  Band n of the plane holds two open unit-circle
 *        arcs over the abscissa range (0, sqrt(3)/2): a lower arc
 *        y = 2n+1 - sqrt(1-x^2) and an upper arc y = 2n + sqrt(1-x^2).  Each
 *        label of Y_n is doubled into two "copy" points pinned at (0, 2n) and
 *        (0, 2n+1); points of one copy class coincide, which makes the space
 *        a pseudometric.  Every arc point is strictly within 1 of the arcs of
 *        its band and of the adjacent copy class, and exactly 1 from the
 *        opposite copy class.
 *
 * Abscissas are sampled at x_k = 6k/(7R) for an arc resolution R; the exact
 * ordinate radicals sqrt(1-x_k^2) are canonicalized once at construction.
 * Dense order walks (height rank, band) diagonals; copy points are extras.
 */

#include <sepset/errors.hpp>
#include <sepset/exact_value.hpp>
#include <sepset/fixtures/family.hpp>
#include <sepset/fixtures/fixtures.hpp>
#include <sepset/radical_sum.hpp>
#include <sepset/space.hpp>
#include <sepset/surd.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sepset {

struct PnPoint {
    enum class Kind : std::uint8_t { Arc, Copy };
    Kind kind = Kind::Arc;
    std::uint8_t half = 0;  // Arc: 0 lower, 1 upper; Copy: the copy bit
    std::uint32_t n = 0;    // band index
    Rational x;             // abscissa, meaningful for Arc
    std::string name;       // label name, meaningful for Copy

    friend bool operator==(const PnPoint&, const PnPoint&) = default;

    std::string str() const {
        if (kind == Kind::Arc)
            return std::string(half == 0 ? "(lower arc " : "(upper arc ") + x.str() + ", band " +
                   std::to_string(n) + ")";
        return "(copy " + std::to_string(half) + " of '" + name + "', band " +
               std::to_string(n) + ")";
    }
};

class PnSpace {
  public:
    using point_type = PnPoint;

    PnSpace(FamilyY family, std::uint32_t arc_resolution)
        : family_(std::move(family)), r_(arc_resolution) {
        validate_family_base(family_);
        if (r_ == 0) throw ValidationError("arc resolution must be positive");
        xs_.reserve(r_);
        sqrts_.reserve(r_);
        for (std::uint32_t k = 1; k <= r_; ++k) {
            Rational x(BigInt(6) * k, BigInt(7) * r_);
            xs_.push_back(x);
            sqrts_.push_back(Surd::sqrt_of(Rational(1) - square(x)));
        }
        for (std::uint32_t n = 0; n < family_.size(); ++n)
            for (std::uint8_t s = 0; s < 2; ++s)
                for (const auto& l : family_.sets[n].labels)
                    extras_.push_back(PnPoint{PnPoint::Kind::Copy, s, n, Rational(0), l.name});
    }

    ExactValue distance(const PnPoint& p, const PnPoint& q) const {
        Rational dx = abscissa(p) - abscissa(q);
        RadicalSum dy = ordinate(p) - ordinate(q);
        return ExactValue::sqrt_of_sum(RadicalSum(square(dx)) + dy * dy);
    }

    std::optional<std::uint64_t> dense_size() const {
        return std::uint64_t{2} * r_ * family_.size();
    }

    PnPoint dense_point(std::uint64_t idx) const {
        if (idx == 0 || idx > *dense_size())
            throw ValidationError("dense indices are 1-based and bounded by the truncation");
        auto [rank, n] = diagonal_cell(idx - 1, std::uint64_t{2} * r_, family_.size());
        return arc_by_height(static_cast<std::uint32_t>(rank), static_cast<std::uint32_t>(n));
    }

    const std::vector<PnPoint>& extra_points() const { return extras_; }
    SpaceKind kind() const { return SpaceKind::Pseudometric; }
    bool is_complete() const { return true; }

    std::uint32_t arc_resolution() const { return r_; }
    const FamilyY& family() const { return family_; }
    const std::vector<Rational>& abscissas() const { return xs_; }

    // The canonical seed is empty: the whole point of this space is that
    // non-strict extension is forced to route through the copy points.
    SeparatedSet<PnPoint> canonical_seed() const {
        SeparatedSet<PnPoint> seed;
        seed.delta = Rational(1);
        seed.mode = Mode::NonStrict;
        return seed;
    }

    // Cases: 0 cross-band, 1 arc-arc same half, 2 arc-arc across halves,
    // 3 arc-copy, 4 copy-copy.
    std::uint32_t metric_case(const PnPoint& p, const PnPoint& q) const {
        if (p.n != q.n) return 0;
        bool pa = p.kind == PnPoint::Kind::Arc;
        bool qa = q.kind == PnPoint::Kind::Arc;
        if (pa && qa) return p.half == q.half ? 1 : 2;
        if (pa || qa) return 3;
        return 4;
    }

    IdentityReport check_identities(std::uint64_t bound) const {
        return check_identities_against(*this, bound);
    }

    // Same identity suite, with distances read from `dist` instead of this
    // fixture (so a corrupted wrapper can be put in front of the checker).
    template <typename DistanceSource>
    IdentityReport check_identities_against(const DistanceSource& dist,
                                            std::uint64_t bound) const;

    // One label name per band, read off the copy points; a 0-copy wins over
    // a 1-copy of the same band.
    std::map<std::uint32_t, std::string> extract_choice(const SeparatedSet<PnPoint>& s) const {
        std::map<std::uint32_t, std::string> best;
        std::map<std::uint32_t, std::uint8_t> best_half;
        for (const auto& p : s.points) {
            if (p.kind != PnPoint::Kind::Copy) continue;
            auto it = best.find(p.n);
            if (it == best.end() || p.half < best_half[p.n]) {
                best[p.n] = p.name;
                best_half[p.n] = p.half;
            }
        }
        std::map<std::uint32_t, std::string> out;
        for (std::uint32_t n = 0; n < family_.size(); ++n) {
            auto it = best.find(n);
            if (it == best.end())
                throw ExtractionError(n, "set " + std::to_string(n) + " contributes no copy point");
            out[n] = it->second;
        }
        return out;
    }

  private:
    Rational abscissa(const PnPoint& p) const {
        return p.kind == PnPoint::Kind::Arc ? p.x : Rational(0);
    }

    RadicalSum ordinate(const PnPoint& p) const {
        if (p.kind == PnPoint::Kind::Copy)
            return RadicalSum(Rational(2 * static_cast<long long>(p.n) + p.half));
        const Surd& s = root_for(p.x);
        if (p.half == 0)
            return RadicalSum(Rational(2 * static_cast<long long>(p.n) + 1)) -
                   RadicalSum::from_surd(s);
        return RadicalSum(Rational(2 * static_cast<long long>(p.n))) + RadicalSum::from_surd(s);
    }

    const Surd& root_for(const Rational& x) const {
        for (std::size_t k = 0; k < xs_.size(); ++k)
            if (xs_[k] == x) return sqrts_[k];
        throw ValidationError("abscissa " + x.str() + " is not on the sampled arc");
    }

    // height rank 1..2R: the lower arc ascends with x, then the upper arc
    // continues upward as x descends
    PnPoint arc_by_height(std::uint32_t rank, std::uint32_t n) const {
        if (rank <= r_) return PnPoint{PnPoint::Kind::Arc, 0, n, xs_[rank - 1], {}};
        return PnPoint{PnPoint::Kind::Arc, 1, n, xs_[2 * r_ - rank], {}};
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
    std::vector<Rational> xs_;
    std::vector<Surd> sqrts_;
    std::vector<PnPoint> extras_;
};

template <typename DistanceSource>
IdentityReport PnSpace::check_identities_against(const DistanceSource& dist,
                                            std::uint64_t bound) const {
    IdentityReport report;
    auto& entries = report.entries;
    auto fail = [&](IdentityEntry& e, const PnPoint& p, const PnPoint& q) {
        if (!e.pass) return;
        e.pass = false;
        e.counterexample = "d(" + p.str() + ", " + q.str() + ") = " + dist.distance(p, q).str();
    };
    std::uint32_t cap = static_cast<std::uint32_t>(std::min<std::uint64_t>(bound, r_));
    std::uint32_t nsets = static_cast<std::uint32_t>(family_.size());

    entries.push_back({"self-distance zero", true, {}});
    entries.push_back({"arcs across halves stay within 1", true, {}});
    entries.push_back({"arcs within one half stay within 1", true, {}});
    entries.push_back({"arcs reach the adjacent copy within 1", true, {}});
    entries.push_back({"arcs sit exactly 1 from the opposite copy", true, {}});
    entries.push_back({"the two copy classes are exactly 1 apart", true, {}});
    entries.push_back({"points of one copy class coincide", true, {}});
    entries.push_back({"unit ball around a copy stays on its arc", true, {}});
    entries.push_back({"bands keep at least unit distance", true, {}});
    IdentityEntry& self_zero = entries[0];
    IdentityEntry& across = entries[1];
    IdentityEntry& within = entries[2];
    IdentityEntry& adjacent = entries[3];
    IdentityEntry& opposite = entries[4];
    IdentityEntry& copies_unit = entries[5];
    IdentityEntry& copies_zero = entries[6];
    IdentityEntry& copy_ball = entries[7];
    IdentityEntry& bands_apart = entries[8];

    ExactValue one{Rational(1)};

    std::vector<PnPoint> pool;
    for (std::uint32_t n = 0; n < nsets; ++n)
        for (std::uint32_t k = 0; k < cap; ++k) {
            pool.push_back(PnPoint{PnPoint::Kind::Arc, 0, n, xs_[k], {}});
            pool.push_back(PnPoint{PnPoint::Kind::Arc, 1, n, xs_[k], {}});
        }
    for (const auto& c : extras_) pool.push_back(c);

    for (const auto& p : pool)
        if (!dist.distance(p, p).is_zero()) fail(self_zero, p, p);

    for (std::uint32_t n = 0; n < nsets; ++n) {
        const std::string& first = family_.sets[n].labels.front().name;
        PnPoint u{PnPoint::Kind::Copy, 0, n, Rational(0), first};
        PnPoint v{PnPoint::Kind::Copy, 1, n, Rational(0), first};

        for (std::uint32_t k = 0; k < cap; ++k) {
            PnPoint zl{PnPoint::Kind::Arc, 0, n, xs_[k], {}};
            PnPoint zu{PnPoint::Kind::Arc, 1, n, xs_[k], {}};
            for (std::uint32_t l = 0; l < cap; ++l) {
                PnPoint wl{PnPoint::Kind::Arc, 0, n, xs_[l], {}};
                PnPoint wu{PnPoint::Kind::Arc, 1, n, xs_[l], {}};
                if (dist.distance(zl, wu).compare(Rational(1)) >= 0) fail(across, zl, wu);
                if (l > k) {
                    if (dist.distance(zl, wl).compare(Rational(1)) >= 0) fail(within, zl, wl);
                    if (dist.distance(zu, wu).compare(Rational(1)) >= 0) fail(within, zu, wu);
                }
            }
            if (dist.distance(zl, u).compare(Rational(1)) >= 0) fail(adjacent, zl, u);
            if (dist.distance(zu, v).compare(Rational(1)) >= 0) fail(adjacent, zu, v);
            if (!dist.distance(zl, v).same_value(one)) fail(opposite, zl, v);
            if (!dist.distance(zu, u).same_value(one)) fail(opposite, zu, u);
        }

        if (!dist.distance(u, v).same_value(one)) fail(copies_unit, u, v);
        for (const auto& l1 : family_.sets[n].labels)
            for (std::uint8_t s = 0; s < 2; ++s) {
                PnPoint c1{PnPoint::Kind::Copy, s, n, Rational(0), l1.name};
                PnPoint c0{PnPoint::Kind::Copy, s, n, Rational(0), first};
                if (!dist.distance(c0, c1).is_zero()) fail(copies_zero, c0, c1);
            }
    }

    for (const auto& c : extras_)
        for (const auto& z : pool) {
            if (z.kind == PnPoint::Kind::Copy && z.n == c.n && z.half == c.half) continue;
            if (dist.distance(c, z).compare(Rational(1)) >= 0) continue;
            if (!(z.kind == PnPoint::Kind::Arc && z.n == c.n && z.half == c.half))
                fail(copy_ball, c, z);
        }

    std::uint32_t small = std::min<std::uint32_t>(cap, 8);
    std::vector<PnPoint> sample;
    for (std::uint32_t n = 0; n < nsets; ++n) {
        for (std::uint32_t k = 0; k < small; ++k) {
            sample.push_back(PnPoint{PnPoint::Kind::Arc, 0, n, xs_[k], {}});
            sample.push_back(PnPoint{PnPoint::Kind::Arc, 1, n, xs_[k], {}});
        }
        for (std::uint8_t s = 0; s < 2; ++s)
            sample.push_back(
                PnPoint{PnPoint::Kind::Copy, s, n, Rational(0), family_.sets[n].labels.front().name});
    }
    for (const auto& p : sample)
        for (const auto& q : sample) {
            if (p.n >= q.n) continue;
            if (dist.distance(p, q).compare(Rational(1)) < 0) fail(bands_apart, p, q);
        }

    return report;
}

}  // namespace sepset
