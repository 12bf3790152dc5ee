#pragma once

/**
 * @file finite_space.hpp
 * @brief Finite (pseudo)metric space given by labelled points and an exact
 *        distance matrix, audited against the axioms at construction.
 */

#include <sepset/errors.hpp>
#include <sepset/exact_value.hpp>
#include <sepset/space.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sepset {

class FiniteSpace {
  public:
    using point_type = std::string;

    // Audits the matrix exhaustively: shape, zero diagonal, symmetry,
    // nonnegativity, triangle inequality.  ValidationError names the
    // offending pair or triple.  kind is inferred from off-diagonal zeros
    // unless declared; declaring Metric with an off-diagonal zero is refused.
    FiniteSpace(std::vector<std::string> ids, std::vector<std::vector<ExactValue>> dist,
                std::optional<SpaceKind> declared = std::nullopt)
        : ids_(std::move(ids)), dist_(std::move(dist)) {
        const std::size_t n = ids_.size();
        if (n == 0) throw ValidationError("finite space needs at least one point");
        if (dist_.size() != n) throw ValidationError("distance matrix is not square");
        for (std::size_t i = 0; i < n; ++i)
            if (dist_[i].size() != n)
                throw ValidationError("distance matrix row for '" + ids_[i] + "' has wrong length");
        for (std::size_t i = 0; i < n; ++i) {
            if (!index_.emplace(ids_[i], i).second)
                throw ValidationError("duplicate point id '" + ids_[i] + "'");
        }

        bool offdiag_zero = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (!dist_[i][i].is_zero())
                throw ValidationError("nonzero self-distance at '" + ids_[i] + "'");
            for (std::size_t j = i + 1; j < n; ++j) {
                if (!dist_[i][j].same_value(dist_[j][i]))
                    throw ValidationError("asymmetric distances between '" + ids_[i] + "' and '" +
                                          ids_[j] + "'");
                if (dist_[i][j].compare(Rational(0)) < 0)
                    throw ValidationError("negative distance between '" + ids_[i] + "' and '" +
                                          ids_[j] + "'");
                if (dist_[i][j].is_zero()) offdiag_zero = true;
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == i || k == j) continue;
                    if (!triangle_holds(dist_[i][k], dist_[i][j], dist_[j][k]))
                        throw ValidationError("triangle inequality fails on ('" + ids_[i] +
                                              "', '" + ids_[j] + "', '" + ids_[k] + "')");
                }
            }

        if (declared) {
            if (*declared == SpaceKind::Metric && offdiag_zero)
                throw ValidationError("declared metric but distinct points at distance zero");
            kind_ = *declared;
        } else {
            kind_ = offdiag_zero ? SpaceKind::Pseudometric : SpaceKind::Metric;
        }
    }

    ExactValue distance(const point_type& p, const point_type& q) const {
        return dist_[index_of(p)][index_of(q)];
    }
    std::optional<std::uint64_t> dense_size() const { return ids_.size(); }
    point_type dense_point(std::uint64_t i) const { return ids_.at(i - 1); }
    const std::vector<point_type>& extra_points() const { return no_extras_; }
    SpaceKind kind() const { return kind_; }
    bool is_complete() const { return true; }

    std::size_t size() const { return ids_.size(); }
    const std::vector<std::string>& ids() const { return ids_; }
    std::size_t index_of(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw ValidationError("unknown point id '" + id + "'");
        return it->second;
    }

  private:
    std::vector<std::string> ids_;
    std::vector<std::vector<ExactValue>> dist_;
    std::map<std::string, std::size_t> index_;
    SpaceKind kind_ = SpaceKind::Metric;
    std::vector<point_type> no_extras_;
};

// Convenience builder for rational matrices.
inline FiniteSpace finite_space_from_rationals(std::vector<std::string> ids,
                                               const std::vector<std::vector<Rational>>& dist,
                                               std::optional<SpaceKind> declared = std::nullopt) {
    std::vector<std::vector<ExactValue>> m;
    m.reserve(dist.size());
    for (const auto& row : dist) {
        std::vector<ExactValue> out;
        out.reserve(row.size());
        for (const auto& v : row) out.emplace_back(v);
        m.push_back(std::move(out));
    }
    return FiniteSpace(std::move(ids), std::move(m), declared);
}

// Points on the rational line with |x - y| distances, listed in enumeration
// order.  Used heavily in tests and small demos.
inline FiniteSpace line_space(const std::vector<Rational>& xs) {
    std::vector<std::string> ids;
    ids.reserve(xs.size());
    for (const auto& x : xs) ids.push_back(x.str());
    std::vector<std::vector<ExactValue>> m(xs.size(), std::vector<ExactValue>(xs.size()));
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < xs.size(); ++j) m[i][j] = ExactValue((xs[i] - xs[j]).abs());
    return FiniteSpace(std::move(ids), std::move(m));
}

}  // namespace sepset
