#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force reference tools for finite spaces: exhaustive catalogue
 *        of maximal separated sets, deterministic random space generators,
 *        and a cross-check of a computed result against the catalogue.
 *
 * The enumerator is deliberately independent of the greedy construction so
 * the two can validate each other.
 */

#include <sepset/errors.hpp>
#include <sepset/finite_space.hpp>
#include <sepset/space.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace sepset {

// Every maximal mode-separated subset, each listed in enumeration order, the
// catalogue ordered lexicographically by index sequence.  Exponential search;
// refuses spaces above max_points.
inline std::vector<std::vector<std::string>> enumerate_maximal_sets(const FiniteSpace& space,
                                                                    const Rational& delta,
                                                                    Mode mode,
                                                                    std::size_t max_points = 20) {
    const std::size_t n = space.size();
    if (n > max_points)
        throw ValidationError("exhaustive enumeration refused beyond " +
                              std::to_string(max_points) + " points");

    std::vector<std::vector<bool>> sep(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            sep[i][j] = i != j && meets_separation(space.distance(space.ids()[i], space.ids()[j]),
                                                   delta, mode);

    std::vector<std::vector<std::string>> catalogue;
    std::vector<std::size_t> chosen;
    auto compatible = [&](std::size_t i) {
        return std::all_of(chosen.begin(), chosen.end(),
                           [&](std::size_t c) { return sep[c][i]; });
    };
    auto emit_if_maximal = [&] {
        for (std::size_t i = 0; i < n; ++i) {
            if (std::find(chosen.begin(), chosen.end(), i) != chosen.end()) continue;
            if (compatible(i)) return;
        }
        std::vector<std::string> ids;
        ids.reserve(chosen.size());
        for (std::size_t c : chosen) ids.push_back(space.ids()[c]);
        catalogue.push_back(std::move(ids));
    };
    auto recurse = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            emit_if_maximal();
            return;
        }
        if (compatible(i)) {
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
        }
        self(self, i + 1);
    };
    recurse(recurse, 0);
    return catalogue;
}

namespace detail {

// Draws from {1/2, 1, 3/2, 2}: the value 1 lands on the separation threshold
// at delta = 1, so strict/nonstrict boundaries are exercised constantly.
inline Rational random_dissimilarity(std::mt19937_64& gen) {
    static const Rational values[4] = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)};
    return values[gen() % 4];
}

inline std::vector<std::vector<Rational>> random_metric_matrix(std::size_t n,
                                                               std::mt19937_64& gen) {
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) m[i][j] = m[j][i] = random_dissimilarity(gen);
    // Min-plus closure repairs the triangle inequality without disturbing
    // entries that already sit on the threshold.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                Rational via = m[i][k] + m[k][j];
                if (i != k && j != k && via < m[i][j]) m[i][j] = via;
            }
    return m;
}

inline std::vector<std::string> numbered_ids(std::size_t n) {
    std::vector<std::string> ids;
    ids.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) ids.push_back("p" + std::to_string(i));
    return ids;
}

}  // namespace detail

inline FiniteSpace random_finite_metric(std::size_t n, std::uint64_t rng_seed) {
    if (n == 0) throw ValidationError("random space needs at least one point");
    std::mt19937_64 gen(rng_seed);
    return finite_space_from_rationals(detail::numbered_ids(n),
                                       detail::random_metric_matrix(n, gen));
}

// Random pseudometric: a random metric on class representatives lifted along
// a random surjection.  For n >= 2 at least one class is forced nontrivial.
inline FiniteSpace random_finite_pseudometric(std::size_t n, std::uint64_t rng_seed) {
    if (n == 0) throw ValidationError("random space needs at least one point");
    std::mt19937_64 gen(rng_seed);
    std::size_t nclasses = 1 + gen() % n;
    std::vector<std::size_t> cls(n);
    for (std::size_t i = 0; i < n; ++i) cls[i] = gen() % nclasses;
    if (n >= 2) cls[1 + gen() % (n - 1)] = cls[0];
    auto base = detail::random_metric_matrix(nclasses, gen);
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = base[cls[i]][cls[j]];
    return finite_space_from_rationals(detail::numbered_ids(n), m);
}

struct CrossCheckReport {
    bool separated = false;
    bool maximal = false;
    bool in_catalogue = false;
    std::optional<PairViolation<std::string>> violation;
    std::optional<std::string> addable;
    bool ok() const { return separated && maximal && in_catalogue; }
};

inline CrossCheckReport cross_check(const FiniteSpace& space, const Rational& delta, Mode mode,
                                    const std::vector<std::string>& points) {
    CrossCheckReport report;
    SeparatedSet<std::string> set{points, delta, mode, std::nullopt};
    if (auto bad = is_separated(space, set)) {
        report.violation = *bad;
    } else {
        report.separated = true;
    }
    if (auto witness = find_addable(space, set, space.size())) {
        report.addable = *witness;
    } else {
        report.maximal = true;
    }
    std::vector<std::string> sorted = points;
    std::sort(sorted.begin(), sorted.end(), [&](const std::string& a, const std::string& b) {
        return space.index_of(a) < space.index_of(b);
    });
    auto catalogue = enumerate_maximal_sets(space, delta, mode);
    report.in_catalogue =
        std::find(catalogue.begin(), catalogue.end(), sorted) != catalogue.end();
    return report;
}

}  // namespace sepset
