#pragma once

/**
 * @file dyn_space.hpp
 * @brief Runtime-selected spaces over JSON-encoded points.
 *
 * A DynSpace wraps any concrete space behind a virtual interface whose
 * point_type is a JSON document, so one code path can drive the generic
 * algorithms on whatever a space document describes.  Each wrapper pairs the
 * concrete space with a codec translating its points to a canonical JSON
 * form; normalize() is the decode/encode round trip, which both validates a
 * user-supplied point and fixes its key order.
 */

#include <sepset/finite_space.hpp>
#include <sepset/fixtures/circle.hpp>
#include <sepset/fixtures/dyadic.hpp>
#include <sepset/fixtures/fixtures.hpp>
#include <sepset/fixtures/pn.hpp>
#include <sepset/fixtures/pse.hpp>
#include <sepset/interval_space.hpp>
#include <sepset/json_io.hpp>
#include <sepset/quotient.hpp>
#include <sepset/space.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sepset {

class DynSpace {
  public:
    using point_type = Json;

    struct Impl {
        virtual ~Impl() = default;
        virtual ExactValue distance(const Json& a, const Json& b) const = 0;
        virtual std::optional<std::uint64_t> dense_size() const = 0;
        virtual Json dense_point(std::uint64_t i) const = 0;
        virtual const std::vector<Json>& extra_points() const = 0;
        virtual SpaceKind kind() const = 0;
        virtual bool complete() const = 0;
        virtual Json normalize(const Json& p) const = 0;
        virtual std::optional<SeparatedSet<Json>> canonical_seed(std::uint64_t) const {
            return std::nullopt;
        }
    };

    explicit DynSpace(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    ExactValue distance(const Json& a, const Json& b) const { return impl_->distance(a, b); }
    std::optional<std::uint64_t> dense_size() const { return impl_->dense_size(); }
    Json dense_point(std::uint64_t i) const { return impl_->dense_point(i); }
    const std::vector<Json>& extra_points() const { return impl_->extra_points(); }
    SpaceKind kind() const { return impl_->kind(); }
    bool is_complete() const { return impl_->complete(); }

    Json normalize(const Json& p) const { return impl_->normalize(p); }
    std::optional<SeparatedSet<Json>> canonical_seed(std::uint64_t horizon = 0) const {
        return impl_->canonical_seed(horizon);
    }

  private:
    std::shared_ptr<const Impl> impl_;
};

// --------------------------------------------------------- fixture codecs

namespace codec {

struct Pse {
    using point = PsePoint;
    Json enc(const PsePoint& p) const {
        switch (p.kind) {
            case PsePoint::Kind::A: return Json{{"kind", "a"}, {"i", p.i}, {"n", p.n}};
            case PsePoint::Kind::APrime: return Json{{"kind", "a'"}, {"i", p.i}, {"n", p.n}};
            default: return Json{{"kind", "label"}, {"n", p.n}, {"name", p.name}};
        }
    }
    PsePoint dec(const Json& j) const {
        const std::string k = require_string(j, "kind");
        PsePoint p;
        if (k == "a" || k == "a'") {
            p.kind = k == "a" ? PsePoint::Kind::A : PsePoint::Kind::APrime;
            p.i = require_u32(j, "i");
            if (p.i == 0) throw SchemaError("spike indices are 1-based");
        } else if (k == "label") {
            p.kind = PsePoint::Kind::Label;
            p.name = require_string(j, "name");
        } else {
            throw SchemaError("unknown point kind '" + k + "'");
        }
        p.n = require_u32(j, "n");
        return p;
    }
};

struct Pn {
    using point = PnPoint;
    Json enc(const PnPoint& p) const {
        if (p.kind == PnPoint::Kind::Arc)
            return Json{{"kind", "arc"}, {"half", p.half}, {"n", p.n}, {"x", p.x.str()}};
        return Json{{"kind", "copy"}, {"half", p.half}, {"n", p.n}, {"name", p.name}};
    }
    PnPoint dec(const Json& j) const {
        const std::string k = require_string(j, "kind");
        PnPoint p;
        const std::uint32_t half = require_u32(j, "half");
        if (half > 1) throw SchemaError("half must be 0 or 1");
        p.half = static_cast<std::uint8_t>(half);
        p.n = require_u32(j, "n");
        if (k == "arc") {
            p.kind = PnPoint::Kind::Arc;
            if (!j.contains("x")) throw SchemaError("arc points need an abscissa x: " + j.dump());
            p.x = rational_from_json(j.at("x"));
        } else if (k == "copy") {
            p.kind = PnPoint::Kind::Copy;
            p.name = require_string(j, "name");
        } else {
            throw SchemaError("unknown point kind '" + k + "'");
        }
        return p;
    }
};

struct Dyadic {
    using point = DyadicPoint;
    Json enc(const DyadicPoint& p) const {
        switch (p.kind) {
            case DyadicPoint::Kind::Dyadic: return Json{{"kind", "dyadic"}, {"value", p.value.str()}};
            case DyadicPoint::Kind::Shifted:
                return Json{{"kind", "shifted"}, {"value", p.value.str()}};
            default:
                return Json{{"kind", "label"},
                            {"n", p.n},
                            {"name", p.name},
                            {"value", p.value.str()}};
        }
    }
    DyadicPoint dec(const Json& j) const {
        const std::string k = require_string(j, "kind");
        DyadicPoint p;
        if (!j.contains("value")) throw SchemaError("ladder points need a 'value': " + j.dump());
        p.value = rational_from_json(j.at("value"));
        if (k == "dyadic") {
            p.kind = DyadicPoint::Kind::Dyadic;
        } else if (k == "shifted") {
            p.kind = DyadicPoint::Kind::Shifted;
        } else if (k == "label") {
            p.kind = DyadicPoint::Kind::Label;
            p.n = require_u32(j, "n");
            p.name = require_string(j, "name");
        } else {
            throw SchemaError("unknown point kind '" + k + "'");
        }
        return p;
    }
};

struct Circle {
    using point = CirclePoint;
    Json enc(const CirclePoint& p) const {
        if (p.kind == CirclePoint::Kind::Grid)
            return Json{{"kind", "grid"}, {"n", p.n}, {"x", p.x.str()}, {"y", p.y.str()}};
        return Json{{"kind", "label"}, {"n", p.n}, {"name", p.name}, {"t", p.t.str()}};
    }
    CirclePoint dec(const Json& j) const {
        const std::string k = require_string(j, "kind");
        CirclePoint p;
        p.n = require_u32(j, "n");
        if (k == "grid") {
            p.kind = CirclePoint::Kind::Grid;
            if (!j.contains("x") || !j.contains("y"))
                throw SchemaError("grid points need coordinates x and y: " + j.dump());
            p.x = rational_from_json(j.at("x"));
            p.y = rational_from_json(j.at("y"));
        } else if (k == "label") {
            p.kind = CirclePoint::Kind::Label;
            p.name = require_string(j, "name");
            if (!j.contains("t")) throw SchemaError("labels need a parameter t: " + j.dump());
            p.t = rational_from_json(j.at("t"));
            // Coordinates are determined by the circle parameter.
            Rational denom = Rational(1) + square(p.t);
            p.x = Rational(4) * Rational(p.n) + (Rational(1) - square(p.t)) / denom;
            p.y = Rational(2) * p.t / denom;
        } else {
            throw SchemaError("unknown point kind '" + k + "'");
        }
        return p;
    }
};

}  // namespace codec

// ----------------------------------------------------------------- models

namespace dyn {

template <typename S, typename Codec>
class Model : public DynSpace::Impl {
  public:
    Model(Codec codec, S space) : codec_(std::move(codec)), space_(std::move(space)) {
        for (const auto& p : space_.extra_points()) extras_.push_back(codec_.enc(p));
    }

    const S& space() const { return space_; }

    ExactValue distance(const Json& a, const Json& b) const override {
        return space_.distance(codec_.dec(a), codec_.dec(b));
    }
    std::optional<std::uint64_t> dense_size() const override { return space_.dense_size(); }
    Json dense_point(std::uint64_t i) const override { return codec_.enc(space_.dense_point(i)); }
    const std::vector<Json>& extra_points() const override { return extras_; }
    SpaceKind kind() const override { return space_.kind(); }
    bool complete() const override { return space_is_complete(space_); }
    Json normalize(const Json& p) const override { return codec_.enc(codec_.dec(p)); }

    std::optional<SeparatedSet<Json>> canonical_seed(std::uint64_t horizon) const override {
        if constexpr (requires(const S& s) { s.canonical_seed(); }) {
            (void)horizon;
            return encode_set(space_.canonical_seed());
        } else if constexpr (requires(const S& s, std::uint64_t h) { s.canonical_seed(h); }) {
            return encode_set(space_.canonical_seed(horizon));
        } else {
            (void)horizon;
            return std::nullopt;
        }
    }

  protected:
    SeparatedSet<Json> encode_set(const SeparatedSet<typename S::point_type>& s) const {
        SeparatedSet<Json> out;
        out.delta = s.delta;
        out.mode = s.mode;
        out.trace = s.trace;
        for (const auto& p : s.points) out.points.push_back(codec_.enc(p));
        return out;
    }

    Codec codec_;
    S space_;
    std::vector<Json> extras_;
};

// Enumeration, extras and seeds come from the clean fixture; distances and
// the kind report go through the corrupting wrapper.
template <typename S, typename Codec>
class CorruptModel : public Model<S, Codec> {
  public:
    CorruptModel(Codec codec, S fixture, std::uint32_t target, Rational factor, Rational bump)
        : Model<S, Codec>(std::move(codec), std::move(fixture)),
          wrapped_(this->space_, target, std::move(factor), std::move(bump)) {}

    ExactValue distance(const Json& a, const Json& b) const override {
        return wrapped_.distance(this->codec_.dec(a), this->codec_.dec(b));
    }
    SpaceKind kind() const override { return wrapped_.kind(); }

  private:
    CorruptSpace<S> wrapped_;
};

class RescaleModel : public DynSpace::Impl {
  public:
    RescaleModel(DynSpace inner, Rational rho)
        : inner_(std::move(inner)), rho_(std::move(rho)), scaled_(inner_, rho_) {}

    ExactValue distance(const Json& a, const Json& b) const override {
        return scaled_.distance(a, b);
    }
    std::optional<std::uint64_t> dense_size() const override { return scaled_.dense_size(); }
    Json dense_point(std::uint64_t i) const override { return scaled_.dense_point(i); }
    const std::vector<Json>& extra_points() const override { return scaled_.extra_points(); }
    SpaceKind kind() const override { return scaled_.kind(); }
    bool complete() const override { return inner_.is_complete(); }
    Json normalize(const Json& p) const override { return inner_.normalize(p); }

    std::optional<SeparatedSet<Json>> canonical_seed(std::uint64_t horizon) const override {
        auto seed = inner_.canonical_seed(horizon);
        if (seed) seed->delta = seed->delta * rho_;
        return seed;
    }

  private:
    DynSpace inner_;
    Rational rho_;
    ScaledSpace<DynSpace> scaled_;
};

class QuotientModel : public DynSpace::Impl {
  public:
    QuotientModel(DynSpace inner, std::uint64_t enum_limit) : inner_(std::move(inner)) {
        quot_.emplace(quotient_to_metric(inner_, enum_limit));
    }

    ExactValue distance(const Json& a, const Json& b) const override {
        return quot_->distance(a, b);
    }
    std::optional<std::uint64_t> dense_size() const override { return quot_->dense_size(); }
    Json dense_point(std::uint64_t i) const override { return quot_->dense_point(i); }
    const std::vector<Json>& extra_points() const override { return quot_->extra_points(); }
    SpaceKind kind() const override { return quot_->kind(); }
    // The presentation is a finite set of class representatives.
    bool complete() const override { return true; }
    Json normalize(const Json& p) const override { return inner_.normalize(p); }

    std::optional<SeparatedSet<Json>> canonical_seed(std::uint64_t horizon) const override {
        // Class distances equal point distances, so a seed lifts unchanged.
        return inner_.canonical_seed(horizon);
    }

  private:
    DynSpace inner_;
    std::optional<QuotientSpace<DynSpace>> quot_;
};

}  // namespace dyn

// ---------------------------------------------------------------- parsing

using FixtureVariant = std::variant<PseSpace, PnSpace, DyadicSpace, CircleSpace>;

inline std::uint32_t fixture_param(const Json& doc, const char* key, std::uint32_t fallback) {
    if (!doc.contains("params")) return fallback;
    const Json& p = doc.at("params");
    if (!p.is_object()) throw SchemaError("params must be an object");
    if (!p.contains(key)) return fallback;
    if (!json_is_index(p.at(key)))
        throw SchemaError(std::string("param '") + key + "' must be an unsigned integer");
    return p.at(key).get<std::uint32_t>();
}

inline FixtureVariant parse_fixture_spec(const Json& doc) {
    if (!doc.is_object() || !doc.contains("type") || !doc.at("type").is_string())
        throw SchemaError("space documents need a string 'type'");
    const std::string type = doc.at("type").get<std::string>();
    if (!doc.contains("family")) throw SchemaError("fixture documents need a family");
    FamilyY family = family_from_json(doc.at("family"));

    if (type == "pse") return PseSpace(std::move(family), fixture_param(doc, "truncation", 32));
    if (type == "pn") return PnSpace(std::move(family), fixture_param(doc, "arc_resolution", 32));
    if (type == "dyadic") return DyadicSpace(std::move(family), fixture_param(doc, "depth", 32));
    if (type == "circle")
        return CircleSpace(std::move(family), fixture_param(doc, "disk_resolution", 32));
    throw SchemaError("'" + type + "' is not a fixture type");
}

inline codec::Pse codec_for(const PseSpace&) { return {}; }
inline codec::Pn codec_for(const PnSpace&) { return {}; }
inline codec::Dyadic codec_for(const DyadicSpace&) { return {}; }
inline codec::Circle codec_for(const CircleSpace&) { return {}; }

inline FiniteSpace parse_finite_space(const Json& doc) {
    if (!doc.contains("points") || !doc.at("points").is_array())
        throw SchemaError("finite spaces need a points list");
    if (!doc.contains("dist") || !doc.at("dist").is_array())
        throw SchemaError("finite spaces need a dist matrix");
    std::vector<std::string> ids;
    for (const auto& p : doc.at("points")) {
        if (!p.is_string()) throw SchemaError("point ids are strings, got " + p.dump());
        ids.push_back(p.get<std::string>());
    }
    std::vector<std::vector<ExactValue>> dist;
    for (const auto& row : doc.at("dist")) {
        if (!row.is_array()) throw SchemaError("dist rows are lists");
        std::vector<ExactValue> out;
        for (const auto& v : row) out.push_back(exact_from_json(v));
        dist.push_back(std::move(out));
    }
    std::optional<SpaceKind> declared;
    if (doc.contains("kind")) {
        const std::string k = doc.at("kind").get<std::string>();
        if (k == "metric")
            declared = SpaceKind::Metric;
        else if (k == "pseudometric")
            declared = SpaceKind::Pseudometric;
        else
            throw SchemaError("kind must be 'metric' or 'pseudometric'");
    }
    return FiniteSpace(std::move(ids), std::move(dist), declared);
}

inline Json finite_space_to_json(const FiniteSpace& space) {
    Json out;
    out["type"] = "finite";
    out["kind"] = to_string(space.kind());
    out["points"] = space.ids();
    Json dist = Json::array();
    for (const auto& a : space.ids()) {
        Json row = Json::array();
        for (const auto& b : space.ids()) row.push_back(exact_to_json(space.distance(a, b)));
        dist.push_back(std::move(row));
    }
    out["dist"] = std::move(dist);
    return out;
}

inline DynSpace parse_space_spec(const Json& doc) {
    if (!doc.is_object() || !doc.contains("type") || !doc.at("type").is_string())
        throw SchemaError("space documents need a string 'type'");
    const std::string type = doc.at("type").get<std::string>();

    if (type == "finite")
        return DynSpace(std::make_shared<dyn::Model<FiniteSpace, codec::Id>>(
            codec::Id{}, parse_finite_space(doc)));

    if (type == "interval") {
        if (!doc.contains("lo") || !doc.contains("hi"))
            throw SchemaError("interval spaces need lo and hi");
        return DynSpace(std::make_shared<dyn::Model<IntervalSpace, codec::Rat>>(
            codec::Rat{},
            IntervalSpace(rational_from_json(doc.at("lo")), rational_from_json(doc.at("hi")))));
    }

    if (type == "rescale") {
        if (!doc.contains("rho") || !doc.contains("inner"))
            throw SchemaError("rescale documents need rho and inner");
        return DynSpace(std::make_shared<dyn::RescaleModel>(parse_space_spec(doc.at("inner")),
                                                            rational_from_json(doc.at("rho"))));
    }

    if (type == "quotient") {
        if (!doc.contains("inner")) throw SchemaError("quotient documents need an inner space");
        std::uint64_t limit = 100000;
        if (doc.contains("enum_limit")) {
            if (!json_is_index(doc.at("enum_limit")))
                throw SchemaError("enum_limit must be an unsigned integer");
            limit = doc.at("enum_limit").get<std::uint64_t>();
        }
        return DynSpace(
            std::make_shared<dyn::QuotientModel>(parse_space_spec(doc.at("inner")), limit));
    }

    if (type == "pse" || type == "pn" || type == "dyadic" || type == "circle") {
        return std::visit(
            [](auto&& fx) {
                using S = std::decay_t<decltype(fx)>;
                auto codec = codec_for(fx);
                return DynSpace(std::make_shared<dyn::Model<S, decltype(codec)>>(
                    codec, std::forward<decltype(fx)>(fx)));
            },
            parse_fixture_spec(doc));
    }

    if (type == "corrupt") {
        if (!doc.contains("inner") || !doc.contains("case"))
            throw SchemaError("corrupt documents need an inner fixture and a case");
        if (!json_is_index(doc.at("case")))
            throw SchemaError("corruption case must be an unsigned integer");
        const std::uint32_t target = doc.at("case").get<std::uint32_t>();
        Rational factor(9, 8);
        Rational bump(1, 2);
        if (doc.contains("factor")) factor = rational_from_json(doc.at("factor"));
        if (doc.contains("bump")) bump = rational_from_json(doc.at("bump"));
        return std::visit(
            [&](auto&& fx) {
                using S = std::decay_t<decltype(fx)>;
                auto codec = codec_for(fx);
                return DynSpace(std::make_shared<dyn::CorruptModel<S, decltype(codec)>>(
                    codec, std::forward<decltype(fx)>(fx), target, factor, bump));
            },
            parse_fixture_spec(doc.at("inner")));
    }

    throw SchemaError("unknown space type '" + type + "'");
}

// Closed subsets of the rational line, for the interval space.
inline ClosedSetOracle<Rational> parse_closed_set(const Json& doc) {
    if (!doc.is_object() || !doc.contains("type") || !doc.at("type").is_string())
        throw SchemaError("closed-set documents need a string 'type'");
    const std::string type = doc.at("type").get<std::string>();

    if (type == "finite-points") {
        if (!doc.contains("points") || !doc.at("points").is_array())
            throw SchemaError("finite-points sets need a points list");
        std::vector<Rational> pts;
        for (const auto& p : doc.at("points")) pts.push_back(rational_from_json(p));
        return finite_points_set(std::move(pts));
    }
    if (type == "interval") {
        if (!doc.contains("lo") || !doc.contains("hi"))
            throw SchemaError("interval sets need lo and hi");
        return closed_interval_set(rational_from_json(doc.at("lo")),
                                   rational_from_json(doc.at("hi")));
    }
    if (type == "predicate-grid") {
        if (!doc.contains("centers") || !doc.at("centers").is_array() || !doc.contains("radius"))
            throw SchemaError("predicate-grid sets need centers and a radius");
        std::vector<Rational> centers;
        for (const auto& c : doc.at("centers")) centers.push_back(rational_from_json(c));
        return grid_cells_set(std::move(centers), rational_from_json(doc.at("radius")));
    }
    throw SchemaError("unknown closed-set type '" + type + "'");
}

}  // namespace sepset
