#pragma once

/**
 * @file json_io.hpp
 * @brief JSON forms for every value the tool reads or writes.
 *
 * Numbers are never floats: rationals are canonical "p/q" strings, quadratic
 * surds are {"a","b","c"} objects meaning a + b*sqrt(c), and nested roots
 * carry their exact square as {"root_of": ...}.  Key order is fixed by
 * construction, so identical inputs produce byte-identical documents.
 */

#include <sepset/errors.hpp>
#include <sepset/exact_value.hpp>
#include <sepset/fixtures/family.hpp>
#include <sepset/space.hpp>

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sepset {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------- rationals

inline Json rational_to_json(const Rational& q) { return q.str(); }

inline Rational rational_from_json(const Json& j) {
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const std::exception& e) {
            throw SchemaError("bad rational literal '" + j.get<std::string>() + "': " + e.what());
        }
    }
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw SchemaError("expected a rational string, got " + j.dump());
}

// -------------------------------------------------------------- exact values

inline Json radical_sum_to_json(const RadicalSum& s) {
    Json terms = Json::array();
    for (const auto& [core, coeff] : s.radical_terms())
        terms.push_back(Json{{"c", core.str()}, {"coeff", coeff.str()}});
    return Json{{"rational", s.rational_part().str()}, {"terms", std::move(terms)}};
}

inline RadicalSum radical_sum_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rational") || !j.contains("terms"))
        throw SchemaError("radical sum needs {rational, terms}: " + j.dump());
    RadicalSum out(rational_from_json(j.at("rational")));
    for (const auto& t : j.at("terms")) {
        Rational core = rational_from_json(t.at("c"));
        Rational coeff = rational_from_json(t.at("coeff"));
        if (!core.is_integer() || core.sign() <= 0)
            throw SchemaError("radicand must be a positive integer: " + t.dump());
        out = out + RadicalSum::from_surd(Surd(Rational(0), coeff, core));
    }
    return out;
}

inline Json exact_to_json(const ExactValue& v) {
    if (v.is_rational()) return v.as_rational().str();
    if (v.is_surd()) {
        const Surd& s = v.as_surd();
        return Json{{"a", s.rational_part().str()},
                    {"b", s.coefficient().str()},
                    {"c", s.radicand().str()}};
    }
    if (v.is_root()) return Json{{"root_of", radical_sum_to_json(v.root_square())}};
    throw ValidationError("approximate values have no canonical document form");
}

inline ExactValue exact_from_json(const Json& j) {
    if (j.is_string() || j.is_number_integer()) return ExactValue(rational_from_json(j));
    if (j.is_object() && j.contains("root_of"))
        return ExactValue::sqrt_of_sum(radical_sum_from_json(j.at("root_of")));
    if (j.is_object() && j.contains("a") && j.contains("b") && j.contains("c")) {
        Rational a = rational_from_json(j.at("a"));
        Rational b = rational_from_json(j.at("b"));
        Rational c = rational_from_json(j.at("c"));
        if (c.sign() < 0) throw SchemaError("surd radicand must be nonnegative: " + j.dump());
        return ExactValue(Surd(a, b, c));
    }
    throw SchemaError("expected a rational string or surd object, got " + j.dump());
}

// ------------------------------------------------------------- modes, traces

inline Mode mode_from_string(const std::string& s) {
    if (s == "strict") return Mode::Strict;
    if (s == "nonstrict") return Mode::NonStrict;
    throw SchemaError("mode must be 'strict' or 'nonstrict', got '" + s + "'");
}

// Parsed documents store counts as unsigned, but documents built in code from
// int literals arrive signed; accept either as long as the value fits.
inline bool json_is_index(const Json& j) {
    return j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0);
}

inline Json trace_to_json(const GreedyTrace& t) {
    Json out = Json::array();
    for (const auto& p : t.pairs) out.push_back(Json::array({p.k, p.n}));
    return out;
}

inline GreedyTrace trace_from_json(const Json& j) {
    if (!j.is_array()) throw SchemaError("trace must be a list of [k, n] pairs");
    GreedyTrace t;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !json_is_index(e[0]) || !json_is_index(e[1]))
            throw SchemaError("trace entries are [k, n] index pairs: " + e.dump());
        t.pairs.push_back(TracePair{e[0].get<std::uint64_t>(), e[1].get<std::uint64_t>()});
    }
    return t;
}

// -------------------------------------------------- sets, certificates (Json points)

inline Json set_to_json(const SeparatedSet<Json>& s) {
    Json out;
    out["delta"] = s.delta.str();
    out["mode"] = to_string(s.mode);
    out["points"] = Json::array();
    for (const auto& p : s.points) out["points"].push_back(p);
    if (s.trace) out["trace"] = trace_to_json(*s.trace);
    return out;
}

inline Json certificate_to_json(const Certificate<Json>& c) {
    Json out;
    out["separation_ok"] = c.separation_ok;
    out["maximal_on_horizon"] = c.maximal_on_horizon;
    out["horizon"] = c.horizon;
    if (c.violation) {
        out["violation"] = Json{{"a", c.violation->a},
                                {"b", c.violation->b},
                                {"distance", exact_to_json(c.violation->dist)}};
    }
    if (c.addable) out["addable"] = *c.addable;
    out["ok"] = c.ok();
    return out;
}

// ------------------------------------------------------------ label families

inline FamilyY family_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw SchemaError("family must be a nonempty list of {n, labels} sets");
    FamilyY f;
    for (std::size_t idx = 0; idx < j.size(); ++idx) {
        const Json& entry = j.at(idx);
        if (!entry.is_object() || !entry.contains("labels"))
            throw SchemaError("family sets need a labels list: " + entry.dump());
        if (entry.contains("n") &&
            (!json_is_index(entry.at("n")) || entry.at("n").get<std::size_t>() != idx))
            throw SchemaError("family set " + std::to_string(idx) +
                              " carries the wrong index n");
        FamilySet set;
        for (const auto& l : entry.at("labels")) {
            if (l.is_string()) {
                set.labels.push_back({l.get<std::string>(), std::nullopt});
            } else if (l.is_object() && l.contains("name")) {
                Label lab{l.at("name").get<std::string>(), std::nullopt};
                if (l.contains("value")) lab.value = rational_from_json(l.at("value"));
                set.labels.push_back(std::move(lab));
            } else {
                throw SchemaError("labels are names or {name, value} objects: " + l.dump());
            }
        }
        f.sets.push_back(std::move(set));
    }
    return f;
}

inline Json family_to_json(const FamilyY& f) {
    Json out = Json::array();
    for (std::size_t n = 0; n < f.sets.size(); ++n) {
        Json labels = Json::array();
        for (const auto& l : f.sets[n].labels) {
            if (l.value)
                labels.push_back(Json{{"name", l.name}, {"value", l.value->str()}});
            else
                labels.push_back(l.name);
        }
        out.push_back(Json{{"n", n}, {"labels", std::move(labels)}});
    }
    return out;
}

// ------------------------------------------------------------- point codecs

namespace codec {

inline std::string require_string(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_string())
        throw SchemaError(std::string("point needs a string '") + key + "': " + j.dump());
    return j.at(key).get<std::string>();
}

inline std::uint32_t require_u32(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !json_is_index(j.at(key)))
        throw SchemaError(std::string("point needs an unsigned '") + key + "': " + j.dump());
    return j.at(key).get<std::uint32_t>();
}

struct Id {
    using point = std::string;
    Json enc(const std::string& p) const { return p; }
    std::string dec(const Json& j) const {
        if (!j.is_string()) throw SchemaError("point ids are strings, got " + j.dump());
        return j.get<std::string>();
    }
};

struct Rat {
    using point = Rational;
    Json enc(const Rational& p) const { return p.str(); }
    Rational dec(const Json& j) const { return rational_from_json(j); }
};

}  // namespace codec

}  // namespace sepset
