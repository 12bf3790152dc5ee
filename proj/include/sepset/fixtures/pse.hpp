#pragma once

/**
 * @file pse.hpp
 * @brief Spike-sequence fixture.  Copy n of the space holds two families of
 *        single-spike sequences: a_i carries the value (i+1)/i at coordinate
 *        i and a'_i carries 1/i there.  Every label of Y_n sits at the origin
 *        of copy n, so labels of one set are pairwise at pseudodistance zero
 *        while d((a'_i, n), label) = 1/i walks into the set.  Distinct copies
 *        are kept at flat distance 3.
 *
 * Dense order: diagonal over (i, n) with a_i just before a'_i, so low spike
 * indices of every copy appear early.  The labels are the extra points.
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

struct PsePoint {
    enum class Kind : std::uint8_t { A, APrime, Label };
    Kind kind = Kind::A;
    std::uint32_t i = 0;  // spike index, 1-based; meaningful for A / APrime
    std::uint32_t n = 0;  // copy index
    std::string name;     // meaningful for Label

    friend bool operator==(const PsePoint&, const PsePoint&) = default;

    std::string str() const {
        switch (kind) {
            case Kind::A: return "(a_" + std::to_string(i) + ", " + std::to_string(n) + ")";
            case Kind::APrime: return "(a'_" + std::to_string(i) + ", " + std::to_string(n) + ")";
            default: return "(label '" + name + "', " + std::to_string(n) + ")";
        }
    }
};

class PseSpace {
  public:
    using point_type = PsePoint;

    PseSpace(FamilyY family, std::uint32_t truncation)
        : family_(std::move(family)), m_(truncation) {
        validate_family_base(family_);
        if (m_ == 0) throw ValidationError("spike truncation must be positive");
        for (std::uint32_t n = 0; n < family_.size(); ++n)
            for (const auto& l : family_.sets[n].labels)
                extras_.push_back(PsePoint{PsePoint::Kind::Label, 0, n, l.name});
    }

    ExactValue distance(const PsePoint& p, const PsePoint& q) const {
        if (p.n != q.n) return ExactValue(Rational(3));
        bool pl = p.kind == PsePoint::Kind::Label;
        bool ql = q.kind == PsePoint::Kind::Label;
        if (pl && ql) return ExactValue(Rational(0));
        if (pl) return ExactValue(spike(q));
        if (ql) return ExactValue(spike(p));
        if (p.i == q.i) return ExactValue((spike(p) - spike(q)).abs());
        // disjoint supports
        return ExactValue::sqrt_of(square(spike(p)) + square(spike(q)));
    }

    std::optional<std::uint64_t> dense_size() const {
        return std::uint64_t{2} * m_ * family_.size();
    }

    PsePoint dense_point(std::uint64_t idx) const {
        if (idx == 0 || idx > *dense_size())
            throw ValidationError("dense indices are 1-based and bounded by the truncation");
        // cells (i, n) with i <= m, n < N ordered by diagonal (i - 1) + n,
        // each cell emitting a_i then a'_i
        std::uint64_t cell = (idx - 1) / 2;
        bool primed = (idx - 1) % 2 == 1;
        auto [i1, n] = diagonal_cell(cell, m_, family_.size());
        return PsePoint{primed ? PsePoint::Kind::APrime : PsePoint::Kind::A,
                        static_cast<std::uint32_t>(i1), static_cast<std::uint32_t>(n), {}};
    }

    const std::vector<PsePoint>& extra_points() const { return extras_; }
    SpaceKind kind() const { return SpaceKind::Pseudometric; }
    bool is_complete() const { return true; }

    std::uint32_t truncation() const { return m_; }
    const FamilyY& family() const { return family_; }

    // The canonical strict unit-separated set: every unprimed spike of every
    // copy.  Pairwise distances are sqrt(...) > 1 inside a copy and 3 across.
    SeparatedSet<PsePoint> canonical_seed() const {
        SeparatedSet<PsePoint> seed;
        seed.delta = Rational(1);
        seed.mode = Mode::Strict;
        for (std::uint32_t n = 0; n < family_.size(); ++n)
            for (std::uint32_t i = 1; i <= m_; ++i)
                seed.points.push_back(PsePoint{PsePoint::Kind::A, i, n, {}});
        return seed;
    }

    // Cases: 0 cross-copy, 1 label-label, 2 spike-spike, 3 spike-label.
    std::uint32_t metric_case(const PsePoint& p, const PsePoint& q) const {
        if (p.n != q.n) return 0;
        bool pl = p.kind == PsePoint::Kind::Label;
        bool ql = q.kind == PsePoint::Kind::Label;
        if (pl && ql) return 1;
        if (!pl && !ql) return 2;
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

    // One label name per copy index; demands exactly one label of each set.
    std::map<std::uint32_t, std::string> extract_choice(const SeparatedSet<PsePoint>& s) const {
        std::map<std::uint32_t, std::vector<std::string>> hits;
        for (const auto& p : s.points)
            if (p.kind == PsePoint::Kind::Label) hits[p.n].push_back(p.name);
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
    Rational spike(const PsePoint& p) const {
        if (p.kind == PsePoint::Kind::A) return Rational(BigInt(p.i) + 1, BigInt(p.i));
        return Rational(BigInt(1), BigInt(p.i));
    }

    // cell index -> (i in 1..m, n in 0..nsets-1) along ascending diagonals
    static std::pair<std::uint64_t, std::uint64_t> diagonal_cell(std::uint64_t cell,
                                                                 std::uint64_t m,
                                                                 std::uint64_t nsets) {
        for (std::uint64_t diag = 0;; ++diag) {
            std::uint64_t lo = diag >= nsets - 1 ? diag - (nsets - 1) : 0;  // i-1 lower bound
            std::uint64_t hi = diag < m - 1 ? diag : m - 1;                 // i-1 upper bound
            if (lo > hi) continue;
            std::uint64_t count = hi - lo + 1;
            if (cell < count) {
                std::uint64_t im1 = lo + cell;
                return {im1 + 1, diag - im1};
            }
            cell -= count;
        }
    }

    FamilyY family_;
    std::uint32_t m_;
    std::vector<PsePoint> extras_;
};

template <typename DistanceSource>
IdentityReport PseSpace::check_identities_against(const DistanceSource& dist,
                                            std::uint64_t bound) const {
    IdentityReport report;
    auto& entries = report.entries;
    auto fail = [&](IdentityEntry& e, const PsePoint& p, const PsePoint& q) {
        if (!e.pass) return;
        e.pass = false;
        e.counterexample = "d(" + p.str() + ", " + q.str() + ") = " + dist.distance(p, q).str();
    };
    std::uint32_t cap = static_cast<std::uint32_t>(std::min<std::uint64_t>(bound, m_));
    std::uint32_t nsets = static_cast<std::uint32_t>(family_.size());

    entries.push_back({"self-distance zero", true, {}});
    entries.push_back({"labels within a set coincide", true, {}});
    entries.push_back({"prime spikes reach labels at 1/i", true, {}});
    entries.push_back({"unit gap between a_i and a'_i", true, {}});
    entries.push_back({"distinct spikes exceed unit separation", true, {}});
    entries.push_back({"unit balls around labels hold only prime spikes", true, {}});
    entries.push_back({"cross-copy distance is 3", true, {}});
    IdentityEntry& self_zero = entries[0];
    IdentityEntry& labels_zero = entries[1];
    IdentityEntry& prime_rate = entries[2];
    IdentityEntry& unit_gap = entries[3];
    IdentityEntry& spike_sep = entries[4];
    IdentityEntry& label_ball = entries[5];
    IdentityEntry& cross_copy = entries[6];

    // the truncated catalogue, used for the scans below
    std::vector<PsePoint> pool;
    for (std::uint32_t n = 0; n < nsets; ++n)
        for (std::uint32_t i = 1; i <= cap; ++i) {
            pool.push_back(PsePoint{PsePoint::Kind::A, i, n, {}});
            pool.push_back(PsePoint{PsePoint::Kind::APrime, i, n, {}});
        }
    for (const auto& l : extras_) pool.push_back(l);

    for (const auto& p : pool)
        if (!dist.distance(p, p).is_zero()) fail(self_zero, p, p);

    for (std::uint32_t n = 0; n < nsets; ++n) {
        const auto& labels = family_.sets[n].labels;
        for (std::size_t u = 0; u < labels.size(); ++u)
            for (std::size_t v = u + 1; v < labels.size(); ++v) {
                PsePoint a{PsePoint::Kind::Label, 0, n, labels[u].name};
                PsePoint b{PsePoint::Kind::Label, 0, n, labels[v].name};
                if (!dist.distance(a, b).is_zero()) fail(labels_zero, a, b);
            }

        for (std::uint32_t i = 1; i <= cap; ++i) {
            PsePoint prime{PsePoint::Kind::APrime, i, n, {}};
            PsePoint plain{PsePoint::Kind::A, i, n, {}};
            for (const auto& l : labels) {
                PsePoint lab{PsePoint::Kind::Label, 0, n, l.name};
                if (!dist.distance(prime, lab).same_value(ExactValue(Rational(1, BigInt(i)))))
                    fail(prime_rate, prime, lab);
            }
            if (!dist.distance(plain, prime).same_value(ExactValue(Rational(1))))
                fail(unit_gap, plain, prime);
            for (std::uint32_t j = i + 1; j <= cap; ++j) {
                PsePoint other{PsePoint::Kind::A, j, n, {}};
                ExactValue d = dist.distance(plain, other);
                ExactValue expect = ExactValue::sqrt_of(
                    square(Rational(BigInt(i) + 1, BigInt(i))) +
                    square(Rational(BigInt(j) + 1, BigInt(j))));
                if (!d.same_value(expect) || d.compare(Rational(1)) <= 0)
                    fail(spike_sep, plain, other);
            }
        }

        // every point of the truncation within distance 1 of a label must be
        // a primed spike of the same copy
        for (const auto& l : labels) {
            PsePoint lab{PsePoint::Kind::Label, 0, n, l.name};
            for (const auto& z : pool) {
                if (z.kind == PsePoint::Kind::Label && z.n == n) continue;
                if (dist.distance(lab, z).compare(Rational(1)) > 0) continue;
                if (!(z.kind == PsePoint::Kind::APrime && z.n == n)) fail(label_ball, lab, z);
            }
        }
    }

    for (const auto& p : pool)
        for (const auto& q : pool) {
            if (p.n >= q.n) continue;
            if (!dist.distance(p, q).same_value(ExactValue(Rational(3)))) fail(cross_copy, p, q);
        }

    return report;
}

}  // namespace sepset
