#pragma once

/**
 * @file cli.hpp
 * @brief Command dispatch behind the command-line tool.
 *
 * Exit codes: 0 when the run succeeds and any certificate passes, 2 when a
 * certificate or report check fails, 1 for bad input, schema violations and
 * exhausted budgets.  This lets CI distinguish "algorithm wrong" from
 * "input wrong".
 */

#include <sepset/complete_extend.hpp>
#include <sepset/dyn_space.hpp>
#include <sepset/greedy.hpp>
#include <sepset/json_io.hpp>
#include <sepset/oracle.hpp>

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace sepset::cli {

struct RunConfig {
    std::string command;
    std::string space_path;       // --space
    std::string delta = "1";      // --delta
    std::string mode = "strict";  // --mode
    std::uint64_t horizon = 0;    // --horizon; 0 falls back to the dense size
    std::uint64_t max_size = 0;   // --max-size; 0 is unlimited
    std::uint32_t steps = 20;     // --steps
    std::string seed_spec;        // --seed; a file path, or "canonical"
    std::string out_path;         // --out
    std::uint64_t rng_seed = 1;   // --rng-seed
    std::uint32_t random_n = 0;         // --random-n; oracle without --space
    std::string result_path;            // --result
    std::string closed_set_path;        // --closed-set
    std::uint64_t enum_limit = 100000;  // --enum-limit
    std::uint64_t bound = 32;           // --bound; fixture identity sample cap
    std::uint64_t audit_horizon = 16;   // --audit-horizon
    std::optional<std::uint32_t> corrupt_case;  // --corrupt-case
};

namespace detail {

inline Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw SchemaError("invalid JSON in '" + path + "': " + e.what());
    }
}

inline Json load_space_doc(const RunConfig& cfg) {
    if (cfg.space_path.empty()) throw ValidationError("this command needs --space");
    return load_json(cfg.space_path);
}

inline Rational parse_delta(const RunConfig& cfg) {
    Rational d = Rational::parse(cfg.delta);
    if (d.sign() <= 0) throw ValidationError("delta must be positive");
    return d;
}

inline std::uint64_t resolve_horizon(const DynSpace& space, std::uint64_t requested) {
    if (requested > 0) return requested;
    if (auto n = space.dense_size()) return *n;
    throw ValidationError("this space has no finite enumeration; pass --horizon");
}

inline int emit(const RunConfig& cfg, std::ostream& fallback, const Json& doc, int code) {
    std::string text = doc.dump(2);
    text.push_back('\n');
    if (cfg.out_path.empty()) {
        fallback << text;
    } else {
        std::ofstream out(cfg.out_path);
        if (!out) throw ValidationError("cannot write '" + cfg.out_path + "'");
        out << text;
    }
    return code;
}

// Result points may arrive as a bare list, a set document, or a whole run
// output; dig down to the point list.
inline const Json& result_points(const Json& doc) {
    const Json* cur = &doc;
    if (cur->is_object() && cur->contains("set")) cur = &cur->at("set");
    if (cur->is_object() && cur->contains("points")) cur = &cur->at("points");
    if (!cur->is_array()) throw SchemaError("result documents carry a point list");
    return *cur;
}

// File seeds adopt the mode the command requires; the canonical seed of a
// fixture keeps its built-in delta and mode.
inline SeparatedSet<Json> load_seed(const RunConfig& cfg, const DynSpace& space, Mode mode,
                                    const Rational& delta) {
    SeparatedSet<Json> seed;
    seed.delta = delta;
    seed.mode = mode;
    if (cfg.seed_spec.empty()) return seed;
    if (cfg.seed_spec == "canonical") {
        auto s = space.canonical_seed(cfg.horizon);
        if (!s) throw ValidationError("this space does not define a canonical seed");
        return *s;
    }
    const Json doc = load_json(cfg.seed_spec);
    for (const auto& p : result_points(doc)) seed.points.push_back(space.normalize(p));
    return seed;
}

inline int run_build(const RunConfig& cfg, std::ostream& out) {
    if (mode_from_string(cfg.mode) != Mode::Strict)
        throw ValidationError("build-strict supports strict mode only");
    DynSpace space = parse_space_spec(load_space_doc(cfg));
    const Rational delta = parse_delta(cfg);
    const std::uint64_t horizon = resolve_horizon(space, cfg.horizon);

    auto res = build_maximal_strict(space, delta, horizon, cfg.max_size);
    Json doc;
    doc["command"] = "build-strict";
    doc["delta"] = delta.str();
    doc["horizon"] = horizon;
    doc["set"] = set_to_json(res.set);
    doc["certificate"] = certificate_to_json(res.certificate);
    return emit(cfg, out, doc, res.certificate.ok() ? 0 : 2);
}

inline int run_extend_excision(const RunConfig& cfg, std::ostream& out) {
    DynSpace space = parse_space_spec(load_space_doc(cfg));
    const Rational delta = parse_delta(cfg);
    const std::uint64_t horizon = resolve_horizon(space, cfg.horizon);
    SeparatedSet<Json> seed = load_seed(cfg, space, Mode::Strict, delta);

    auto res = extend_via_excision(space, seed, horizon);
    Json doc;
    doc["command"] = "extend-excision";
    doc["delta"] = res.set.delta.str();
    doc["horizon"] = horizon;
    doc["seed_size"] = seed.points.size();
    doc["set"] = set_to_json(res.set);
    doc["certificate"] = certificate_to_json(res.certificate);
    return emit(cfg, out, doc, res.certificate.ok() ? 0 : 2);
}

inline int run_extend_nonstrict(const RunConfig& cfg, std::ostream& out) {
    DynSpace space = parse_space_spec(load_space_doc(cfg));
    const Rational delta = parse_delta(cfg);
    SeparatedSet<Json> seed = load_seed(cfg, space, Mode::NonStrict, delta);

    ExtendBudgets budgets;
    budgets.enum_limit = cfg.enum_limit;
    budgets.steps = cfg.steps;
    auto res = extend_nonstrict(space, seed, seed.delta, budgets);
    Json doc;
    doc["command"] = "extend-nonstrict";
    doc["delta"] = res.set.delta.str();
    doc["seed_size"] = seed.points.size();
    doc["heuristic"] = res.heuristic;
    doc["set"] = set_to_json(res.set);
    doc["certificate"] = certificate_to_json(res.certificate);
    return emit(cfg, out, doc, res.certificate.ok() ? 0 : 2);
}

inline int run_choose_closed(const RunConfig& cfg, std::ostream& out) {
    Json sdoc = load_space_doc(cfg);
    if (!sdoc.is_object() || sdoc.value("type", "") != "interval")
        throw ValidationError("choose-closed runs on interval spaces");
    IntervalSpace space(rational_from_json(sdoc.at("lo")), rational_from_json(sdoc.at("hi")));
    if (cfg.closed_set_path.empty()) throw ValidationError("choose-closed needs --closed-set");
    ClosedSetOracle<Rational> target = parse_closed_set(load_json(cfg.closed_set_path));

    auto res = choose_in_closed(space, target, cfg.steps);
    Json doc;
    doc["command"] = "choose-closed";
    doc["steps"] = cfg.steps;
    doc["indices"] = res.indices;
    doc["point"] = res.point.str();
    doc["gap"] = res.gap.str();
    return emit(cfg, out, doc, 0);
}

inline int run_oracle(const RunConfig& cfg, std::ostream& out) {
    const Rational delta = parse_delta(cfg);
    const Mode mode = mode_from_string(cfg.mode);

    std::optional<FiniteSpace> space;
    bool echo_space = false;
    if (!cfg.space_path.empty()) {
        Json sdoc = load_json(cfg.space_path);
        if (!sdoc.is_object() || sdoc.value("type", "") != "finite")
            throw ValidationError("the oracle enumerates finite spaces only");
        space.emplace(parse_finite_space(sdoc));
    } else if (cfg.random_n > 0) {
        space.emplace(random_finite_metric(cfg.random_n, cfg.rng_seed));
        echo_space = true;
    } else {
        throw ValidationError("oracle needs --space or --random-n");
    }

    auto catalogue = enumerate_maximal_sets(*space, delta, mode);
    Json doc;
    doc["command"] = "oracle";
    doc["delta"] = delta.str();
    doc["mode"] = to_string(mode);
    if (echo_space) doc["space"] = finite_space_to_json(*space);
    Json cat = Json::array();
    for (const auto& s : catalogue) cat.push_back(s);
    doc["catalogue"] = std::move(cat);

    int code = 0;
    if (!cfg.result_path.empty()) {
        const Json rdoc = load_json(cfg.result_path);
        std::vector<std::string> pts;
        for (const auto& p : result_points(rdoc)) {
            if (!p.is_string()) throw SchemaError("point ids are strings, got " + p.dump());
            pts.push_back(p.get<std::string>());
        }
        CrossCheckReport report = cross_check(*space, delta, mode, pts);
        Json rep;
        rep["separated"] = report.separated;
        rep["maximal"] = report.maximal;
        rep["in_catalogue"] = report.in_catalogue;
        if (report.violation) {
            rep["violation"] = Json{{"a", report.violation->a},
                                    {"b", report.violation->b},
                                    {"distance", exact_to_json(report.violation->dist)}};
        }
        if (report.addable) rep["addable"] = *report.addable;
        rep["ok"] = report.ok();
        doc["cross_check"] = std::move(rep);
        code = report.ok() ? 0 : 2;
    }
    return emit(cfg, out, doc, code);
}

inline int run_fixture_check(const RunConfig& cfg, std::ostream& out) {
    Json sdoc = load_space_doc(cfg);
    Json fdoc = sdoc;
    std::optional<std::uint32_t> target = cfg.corrupt_case;
    Rational factor(9, 8);
    Rational bump(1, 2);
    if (sdoc.is_object() && sdoc.value("type", "") == "corrupt") {
        if (!sdoc.contains("inner") || !sdoc.contains("case"))
            throw SchemaError("corrupt documents need an inner fixture and a case");
        fdoc = sdoc.at("inner");
        if (!target) target = sdoc.at("case").get<std::uint32_t>();
        if (sdoc.contains("factor")) factor = rational_from_json(sdoc.at("factor"));
        if (sdoc.contains("bump")) bump = rational_from_json(sdoc.at("bump"));
    }

    Json entries = Json::array();
    bool all_pass = true;
    auto add = [&](const std::string& name, bool pass, const std::string& counterexample) {
        Json e;
        e["identity"] = name;
        e["status"] = pass ? "pass" : "fail";
        if (!pass) {
            e["counterexample"] = counterexample;
            all_pass = false;
        }
        entries.push_back(std::move(e));
    };

    std::visit(
        [&](const auto& fx) {
            using S = std::decay_t<decltype(fx)>;
            std::optional<CorruptSpace<S>> bad;
            if (target) bad.emplace(fx, *target, factor, bump);

            try {
                if (bad)
                    audit_axioms(*bad, cfg.audit_horizon);
                else
                    audit_axioms(fx, cfg.audit_horizon);
                add("metric axioms on a truncation", true, "");
            } catch (const ValidationError& e) {
                add("metric axioms on a truncation", false, e.what());
            }

            IdentityReport report = bad ? fx.check_identities_against(*bad, cfg.bound)
                                        : fx.check_identities(cfg.bound);
            for (const auto& entry : report.entries)
                add(entry.identity, entry.pass, entry.counterexample);
        },
        parse_fixture_spec(fdoc));

    Json doc;
    doc["command"] = "fixture-check";
    doc["bound"] = cfg.bound;
    doc["audit_horizon"] = cfg.audit_horizon;
    if (target) doc["corrupt_case"] = *target;
    doc["report"] = std::move(entries);
    return emit(cfg, out, doc, all_pass ? 0 : 2);
}

inline int run_extract_choice(const RunConfig& cfg, std::ostream& out) {
    if (cfg.result_path.empty()) throw ValidationError("extract-choice needs --result");
    const Json rdoc = load_json(cfg.result_path);
    const Json& pts = result_points(rdoc);

    Json choice = Json::object();
    std::visit(
        [&](const auto& fx) {
            using S = std::decay_t<decltype(fx)>;
            auto codec = codec_for(fx);
            SeparatedSet<typename S::point_type> set;
            for (const auto& p : pts) set.points.push_back(codec.dec(p));
            for (const auto& [n, name] : fx.extract_choice(set))
                choice[std::to_string(n)] = name;
        },
        parse_fixture_spec(load_space_doc(cfg)));

    Json doc;
    doc["command"] = "extract-choice";
    doc["choice"] = std::move(choice);
    return emit(cfg, out, doc, 0);
}

}  // namespace detail

inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "build-strict") return detail::run_build(cfg, out);
        if (cfg.command == "extend-excision") return detail::run_extend_excision(cfg, out);
        if (cfg.command == "extend-nonstrict") return detail::run_extend_nonstrict(cfg, out);
        if (cfg.command == "choose-closed") return detail::run_choose_closed(cfg, out);
        if (cfg.command == "oracle") return detail::run_oracle(cfg, out);
        if (cfg.command == "fixture-check") return detail::run_fixture_check(cfg, out);
        if (cfg.command == "extract-choice") return detail::run_extract_choice(cfg, out);
        throw ValidationError("unknown command '" + cfg.command + "'");
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace sepset::cli
