#include <catch2/catch_amalgamated.hpp>

#include <sepset/dyn_space.hpp>
#include <sepset/greedy.hpp>
#include <sepset/json_io.hpp>

#include <string>
#include <vector>

using namespace sepset;
using Catch::Matchers::ContainsSubstring;

namespace {

Json doc(const char* text) { return Json::parse(text); }

const char* kLineSpace = R"({
    "type": "finite",
    "kind": "metric",
    "points": ["0", "3/5", "6/5", "5/2"],
    "dist": [
        ["0", "3/5", "6/5", "5/2"],
        ["3/5", "0", "3/5", "19/10"],
        ["6/5", "3/5", "0", "13/10"],
        ["5/2", "19/10", "13/10", "0"]
    ]
})";

}  // namespace

TEST_CASE("value serialization") {
    SECTION("rationals are canonical strings") {
        CHECK(rational_from_json(Json("5/2")) == Rational(5, 2));
        CHECK(rational_from_json(Json(-3)) == Rational(-3));
        CHECK(rational_to_json(Rational(10, 4)) == Json("5/2"));
        CHECK_THROWS_AS(rational_from_json(Json("1/0")), SchemaError);
        CHECK_THROWS_AS(rational_from_json(Json("abc")), SchemaError);
        CHECK_THROWS_AS(rational_from_json(Json(1.5)), SchemaError);
    }

    SECTION("exact values round-trip") {
        ExactValue rat{Rational(5, 2)};
        CHECK(exact_to_json(rat) == Json("5/2"));
        CHECK(exact_from_json(exact_to_json(rat)).same_value(rat));

        ExactValue root2 = ExactValue::sqrt_of(Rational(2));
        Json sj = exact_to_json(root2);
        CHECK(sj.at("a") == "0");
        CHECK(sj.at("b") == "1");
        CHECK(sj.at("c") == "2");
        CHECK(exact_from_json(sj).same_value(root2));

        CHECK(exact_from_json(doc(R"({"a":"1","b":"1","c":"2"})"))
                  .same_value(ExactValue(Surd(Rational(1), Rational(1), Rational(2)))));

        // A nested root: sqrt(2 - (2/7) sqrt(10)) has no surd form.
        RadicalSum inner = RadicalSum(Rational(2)) +
                           RadicalSum::from_surd(Surd(Rational(0), Rational(-2, 7), Rational(10)));
        ExactValue nested = ExactValue::sqrt_of_sum(inner);
        REQUIRE(nested.is_root());
        Json nj = exact_to_json(nested);
        REQUIRE(nj.contains("root_of"));
        CHECK(exact_from_json(nj).same_value(nested));

        CHECK_THROWS_AS(exact_from_json(doc(R"({"a":"1","b":"1","c":"-2"})")), SchemaError);
        CHECK_THROWS_AS(exact_from_json(Json::array()), SchemaError);
    }

    SECTION("traces are index-pair lists") {
        GreedyTrace t;
        t.pairs = {{1, 1}, {3, 4}};
        Json j = trace_to_json(t);
        CHECK(j.dump() == "[[1,1],[3,4]]");
        CHECK(trace_from_json(j) == t);
        CHECK_THROWS_AS(trace_from_json(doc("[[1]]")), SchemaError);
        CHECK_THROWS_AS(trace_from_json(doc("[[1,-2]]")), SchemaError);
    }

    SECTION("modes") {
        CHECK(mode_from_string("strict") == Mode::Strict);
        CHECK(mode_from_string("nonstrict") == Mode::NonStrict);
        CHECK_THROWS_AS(mode_from_string("loose"), SchemaError);
    }
}

TEST_CASE("space documents") {
    SECTION("finite spaces parse and run") {
        DynSpace line = parse_space_spec(doc(kLineSpace));
        CHECK(line.kind() == SpaceKind::Metric);
        REQUIRE(line.dense_size());
        CHECK(*line.dense_size() == 4);
        CHECK(line.dense_point(1) == Json("0"));
        CHECK(line.distance(Json("0"), Json("5/2")).same_value(ExactValue(Rational(5, 2))));
        CHECK(line.is_complete());

        auto res = build_maximal_strict(line, Rational(1), 4);
        std::vector<Json> expect{Json("0"), Json("6/5"), Json("5/2")};
        CHECK(res.set.points == expect);
        CHECK(res.certificate.ok());

        Json out = set_to_json(res.set);
        CHECK(out.at("delta") == "1");
        CHECK(out.at("mode") == "strict");
        CHECK(out.contains("trace"));
    }

    SECTION("bad matrices are refused with the pair named") {
        Json bad = doc(kLineSpace);
        bad["dist"][0][1] = "7/10";
        CHECK_THROWS_WITH(parse_space_spec(bad),
                          ContainsSubstring("asymmetric distances between '0' and '3/5'"));
        CHECK_THROWS_AS(parse_space_spec(doc(R"({"type":"finite","points":["a"]})")),
                        SchemaError);
    }

    SECTION("rescale halves every distance") {
        Json wrapped = Json{{"type", "rescale"}, {"rho", "1/2"}, {"inner", doc(kLineSpace)}};
        DynSpace half = parse_space_spec(wrapped);
        CHECK(half.distance(Json("0"), Json("6/5")).same_value(ExactValue(Rational(3, 5))));

        // The construction at delta/2 picks the same points as the original
        // at delta.
        auto base = build_maximal_strict(parse_space_spec(doc(kLineSpace)), Rational(1), 4);
        auto scaled = build_maximal_strict(half, Rational(1, 2), 4);
        CHECK(base.set.points == scaled.set.points);
        CHECK(base.trace == scaled.trace);
    }

    SECTION("quotient collapses zero classes") {
        Json pseudo = doc(R"({
            "type": "finite",
            "kind": "pseudometric",
            "points": ["a", "b", "c"],
            "dist": [["0","0","1"],["0","0","1"],["1","1","0"]]
        })");
        DynSpace q = parse_space_spec(Json{{"type", "quotient"}, {"inner", pseudo}});
        CHECK(q.kind() == SpaceKind::Metric);
        REQUIRE(q.dense_size());
        CHECK(*q.dense_size() == 2);
        CHECK(q.distance(Json("a"), Json("b")).is_zero());
    }

    SECTION("interval spaces enumerate dyadics") {
        DynSpace unit = parse_space_spec(doc(R"({"type":"interval","lo":"0","hi":"1"})"));
        CHECK(unit.dense_size() == std::nullopt);
        CHECK(unit.dense_point(3) == Json("1/2"));
        CHECK(unit.is_complete());
    }

    SECTION("schema violations") {
        CHECK_THROWS_AS(parse_space_spec(doc(R"({"type":"nope"})")), SchemaError);
        CHECK_THROWS_AS(parse_space_spec(doc(R"({"no_type":1})")), SchemaError);
        CHECK_THROWS_AS(parse_space_spec(doc(R"({"type":"pse"})")), SchemaError);
        CHECK_THROWS_AS(parse_space_spec(doc(R"({"type":"rescale","rho":"1/2"})")), SchemaError);
    }
}

TEST_CASE("fixture documents") {
    SECTION("spike fixture: seed, extension, point normalization") {
        DynSpace sp = parse_space_spec(doc(R"({
            "type": "pse",
            "family": [
                {"n": 0, "labels": ["y0_0", "y0_1"]},
                {"n": 1, "labels": ["y1_0"]}
            ],
            "params": {"truncation": 6}
        })"));
        REQUIRE(sp.dense_size());
        CHECK(*sp.dense_size() == 24);

        auto seed = sp.canonical_seed();
        REQUIRE(seed);
        CHECK(seed->points.size() == 12);
        CHECK(seed->mode == Mode::Strict);

        auto res = extend_via_excision(sp, *seed, *sp.dense_size());
        CHECK(res.certificate.ok());
        CHECK(res.set.points.size() == 14);  // one label lands per set

        Json shuffled = doc(R"({"n":0,"i":1,"kind":"a"})");
        CHECK(sp.normalize(shuffled).dump() == R"({"kind":"a","i":1,"n":0})");
        CHECK_THROWS_AS(sp.normalize(doc(R"({"kind":"b","i":1,"n":0})")), SchemaError);
        CHECK_THROWS_AS(sp.normalize(doc(R"({"kind":"a","i":0,"n":0})")), SchemaError);
    }

    SECTION("band fixture: copies and arcs decode") {
        DynSpace pn = parse_space_spec(doc(R"({
            "type": "pn",
            "family": [{"n": 0, "labels": ["u0", "v0"]}],
            "params": {"arc_resolution": 8}
        })"));
        CHECK(pn.dense_point(1).dump() == R"({"kind":"arc","half":0,"n":0,"x":"3/28"})");
        Json lower{{"kind", "copy"}, {"half", 0}, {"n", 0}, {"name", "u0"}};
        Json upper{{"kind", "copy"}, {"half", 1}, {"n", 0}, {"name", "v0"}};
        CHECK(pn.distance(lower, upper).same_value(ExactValue(Rational(1))));
        CHECK(pn.kind() == SpaceKind::Pseudometric);
    }

    SECTION("ladder fixture: canonical seeds need even horizons") {
        DynSpace dy = parse_space_spec(doc(R"({
            "type": "dyadic",
            "family": [{"n": 0, "labels": [{"name": "x0", "value": "1/13"}]}],
            "params": {"depth": 3}
        })"));
        CHECK_FALSE(dy.is_complete());
        CHECK_THROWS_AS(dy.canonical_seed(3), ValidationError);
        auto seed = dy.canonical_seed(4);
        REQUIRE(seed);
        CHECK(seed->points.size() == 2);
        for (const auto& p : seed->points) CHECK(p.at("kind") == "shifted");
    }

    SECTION("island fixture: label coordinates are derived from t") {
        DynSpace ci = parse_space_spec(doc(R"({
            "type": "circle",
            "family": [
                {"n": 0, "labels": [{"name": "c0", "value": "0"}]},
                {"n": 1, "labels": [{"name": "c1", "value": "2"}]}
            ],
            "params": {"disk_resolution": 4}
        })"));
        CHECK(ci.dense_point(2).dump() == R"({"kind":"grid","n":1,"x":"4","y":"0"})");
        Json center{{"kind", "grid"}, {"n", 1}, {"x", "4"}, {"y", "0"}};
        Json label{{"kind", "label"}, {"n", 1}, {"name", "c1"}, {"t", "2"}};
        CHECK(ci.distance(center, label).same_value(ExactValue(Rational(1))));
    }

    SECTION("corruption wrappers tamper with one metric case") {
        Json inner = doc(R"({
            "type": "pse",
            "family": [{"n": 0, "labels": ["y0"]}],
            "params": {"truncation": 4}
        })");
        DynSpace bad = parse_space_spec(
            Json{{"type", "corrupt"}, {"case", 2}, {"inner", inner}});
        Json a1{{"kind", "a"}, {"i", 1}, {"n", 0}};
        Json p1{{"kind", "a'"}, {"i", 1}, {"n", 0}};
        // The unit gap d(a_1, a'_1) = 1 lands in the spike-spike case and
        // gets scaled by the default 9/8.
        CHECK(bad.distance(a1, p1).same_value(ExactValue(Rational(9, 8))));
        // Label distances are untouched.
        Json lab{{"kind", "label"}, {"n", 0}, {"name", "y0"}};
        CHECK(bad.distance(a1, lab).same_value(ExactValue(Rational(2))));
    }
}

TEST_CASE("closed-set documents") {
    auto members = [](const ClosedSetOracle<Rational>& f, const Rational& x) {
        return f.member_test(x);
    };

    SECTION("finite point sets") {
        auto f = parse_closed_set(doc(R"({"type":"finite-points","points":["1/2","3/4"]})"));
        CHECK(members(f, Rational(1, 2)));
        CHECK_FALSE(members(f, Rational(1, 3)));
        CHECK(f.intersects_open_ball(Rational(0), Rational(1)));
        CHECK_FALSE(f.intersects_open_ball(Rational(0), Rational(1, 2)));
    }

    SECTION("intervals") {
        auto f = parse_closed_set(doc(R"({"type":"interval","lo":"1/3","hi":"2/3"})"));
        CHECK(members(f, Rational(1, 2)));
        CHECK_FALSE(members(f, Rational(3, 4)));
    }

    SECTION("grids of cells") {
        auto f = parse_closed_set(
            doc(R"({"type":"predicate-grid","centers":["0","1/2"],"radius":"1/8"})"));
        CHECK(members(f, Rational(1, 16)));
        CHECK(members(f, Rational(5, 8)));
        CHECK_FALSE(members(f, Rational(1, 4)));
    }

    SECTION("unknown types are refused") {
        CHECK_THROWS_AS(parse_closed_set(doc(R"({"type":"open-set"})")), SchemaError);
    }
}

TEST_CASE("documents are byte-stable") {
    auto render = [] {
        DynSpace line = parse_space_spec(doc(kLineSpace));
        auto res = build_maximal_strict(line, Rational(1), 4);
        Json out;
        out["set"] = set_to_json(res.set);
        out["certificate"] = certificate_to_json(res.certificate);
        return out.dump(2);
    };
    CHECK(render() == render());
}
