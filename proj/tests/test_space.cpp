#include <sepset/finite_space.hpp>
#include <sepset/quotient.hpp>
#include <sepset/space.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace sepset;

namespace {

FiniteSpace demo_line() {
    return line_space({Rational(0), Rational(3, 5), Rational(6, 5), Rational(5, 2)});
}

// Minimal infinite space: the positive integers on the line.
struct IntegerLine {
    using point_type = Rational;
    ExactValue distance(const Rational& a, const Rational& b) const {
        return ExactValue((a - b).abs());
    }
    std::optional<std::uint64_t> dense_size() const { return std::nullopt; }
    Rational dense_point(std::uint64_t i) const { return Rational(static_cast<long long>(i)); }
    const std::vector<Rational>& extra_points() const { return extras; }
    SpaceKind kind() const { return SpaceKind::Metric; }
    std::vector<Rational> extras;
};

}  // namespace

TEST_CASE("finite space audit rejects malformed matrices") {
    auto E = [](long long v) { return ExactValue(Rational(v)); };

    SECTION("asymmetry is reported with the pair") {
        std::vector<std::vector<ExactValue>> m = {{E(0), E(1)}, {E(2), E(0)}};
        REQUIRE_THROWS_MATCHES(FiniteSpace({"a", "b"}, m), ValidationError,
                               Catch::Matchers::MessageMatches(
                                   Catch::Matchers::ContainsSubstring("'a' and 'b'")));
    }
    SECTION("nonzero diagonal") {
        std::vector<std::vector<ExactValue>> m = {{E(1)}};
        REQUIRE_THROWS_AS(FiniteSpace({"a"}, m), ValidationError);
    }
    SECTION("negative entry") {
        std::vector<std::vector<ExactValue>> m = {{E(0), E(-1)}, {E(-1), E(0)}};
        REQUIRE_THROWS_AS(FiniteSpace({"a", "b"}, m), ValidationError);
    }
    SECTION("triangle violation names the triple") {
        std::vector<std::vector<ExactValue>> m = {
            {E(0), E(1), E(3)}, {E(1), E(0), E(1)}, {E(3), E(1), E(0)}};
        REQUIRE_THROWS_MATCHES(FiniteSpace({"a", "b", "c"}, m), ValidationError,
                               Catch::Matchers::MessageMatches(
                                   Catch::Matchers::ContainsSubstring("triangle")));
    }
    SECTION("duplicate ids") {
        std::vector<std::vector<ExactValue>> m = {{E(0), E(1)}, {E(1), E(0)}};
        REQUIRE_THROWS_AS(FiniteSpace({"a", "a"}, m), ValidationError);
    }
    SECTION("non-square matrix") {
        std::vector<std::vector<ExactValue>> m = {{E(0), E(1)}};
        REQUIRE_THROWS_AS(FiniteSpace({"a", "b"}, m), ValidationError);
    }
    SECTION("surd distances pass the triangle audit") {
        ExactValue s2 = ExactValue::sqrt_of(Rational(2));
        std::vector<std::vector<ExactValue>> m = {
            {E(0), E(1), s2}, {E(1), E(0), E(1)}, {s2, E(1), E(0)}};
        FiniteSpace sp({"a", "b", "c"}, m);
        REQUIRE(sp.kind() == SpaceKind::Metric);
    }
}

TEST_CASE("kind inference and declaration") {
    auto E = [](long long v) { return ExactValue(Rational(v)); };
    std::vector<std::vector<ExactValue>> zero_pair = {
        {E(0), E(0), E(1)}, {E(0), E(0), E(1)}, {E(1), E(1), E(0)}};
    REQUIRE(FiniteSpace({"a", "b", "c"}, zero_pair).kind() == SpaceKind::Pseudometric);
    REQUIRE_THROWS_AS(FiniteSpace({"a", "b", "c"}, zero_pair, SpaceKind::Metric),
                      ValidationError);
    REQUIRE(demo_line().kind() == SpaceKind::Metric);
    REQUIRE(FiniteSpace({"a", "b", "c"}, zero_pair, SpaceKind::Pseudometric).kind() ==
            SpaceKind::Pseudometric);
}

TEST_CASE("separation certificates on the demo line") {
    FiniteSpace sp = demo_line();

    SECTION("a strictly 1-separated triple") {
        SeparatedSet<std::string> s{{"0", "6/5", "5/2"}, Rational(1), Mode::Strict, {}};
        REQUIRE_FALSE(is_separated(sp, s).has_value());
        auto cert = certify(sp, s, 4);
        REQUIRE(cert.separation_ok);
        REQUIRE(cert.maximal_on_horizon);
        REQUIRE(cert.ok());
        REQUIRE(cert.horizon == 4);
    }
    SECTION("violation names the close pair") {
        SeparatedSet<std::string> s{{"0", "3/5"}, Rational(1), Mode::Strict, {}};
        auto bad = is_separated(sp, s);
        REQUIRE(bad.has_value());
        REQUIRE(bad->a == "0");
        REQUIRE(bad->b == "3/5");
        REQUIRE(bad->dist.compare(Rational(3, 5)) == 0);
        REQUIRE_FALSE(certify(sp, s, 4).separation_ok);
    }
    SECTION("a singleton is not maximal; the witness is the first addable point") {
        SeparatedSet<std::string> s{{"0"}, Rational(1), Mode::Strict, {}};
        auto cert = certify(sp, s, 4);
        REQUIRE(cert.separation_ok);
        REQUIRE_FALSE(cert.maximal_on_horizon);
        REQUIRE(cert.addable == "6/5");
    }
    SECTION("the empty set's witness is the first dense point") {
        SeparatedSet<std::string> s{{}, Rational(1), Mode::Strict, {}};
        auto cert = certify(sp, s, 4);
        REQUIRE_FALSE(cert.maximal_on_horizon);
        REQUIRE(cert.addable == "0");
    }
    SECTION("non-maximality persists as the horizon grows") {
        SeparatedSet<std::string> s{{"0"}, Rational(1), Mode::Strict, {}};
        REQUIRE(certify(sp, s, 2).maximal_on_horizon);  // 3/5 is too close to add
        REQUIRE_FALSE(certify(sp, s, 3).maximal_on_horizon);
        REQUIRE_FALSE(certify(sp, s, 4).maximal_on_horizon);
    }
    SECTION("nonstrict mode admits boundary pairs") {
        FiniteSpace two = line_space({Rational(0), Rational(1)});
        SeparatedSet<std::string> s{{"0", "1"}, Rational(1), Mode::NonStrict, {}};
        REQUIRE_FALSE(is_separated(two, s).has_value());
        SeparatedSet<std::string> strict{{"0", "1"}, Rational(1), Mode::Strict, {}};
        REQUIRE(is_separated(two, strict).has_value());
    }
}

TEST_CASE("open-ball excision membership") {
    FiniteSpace sp = demo_line();
    std::vector<std::string> members{"0"};
    REQUIRE(in_excision(sp, members, Rational(1), "3/5"));
    REQUIRE_FALSE(in_excision(sp, members, Rational(1), "6/5"));
    // Boundary point of the open ball stays outside.
    REQUIRE_FALSE(in_excision(sp, members, Rational(6, 5), "6/5"));
    REQUIRE(in_excision(sp, members, Rational(13, 10), "6/5"));
    REQUIRE_FALSE(in_excision(sp, {}, Rational(1), "0"));
}

TEST_CASE("encode_point identifies points through the dense enumeration") {
    FiniteSpace sp = demo_line();
    auto code = encode_point(sp, std::string("5/2"), 3, 10);
    REQUIRE(code == std::vector<std::uint64_t>{4, 4, 4});

    // Depth 1 cannot tell 0 from 3/5; depth 2 can.
    REQUIRE(encode_point(sp, std::string("0"), 1, 10) ==
            encode_point(sp, std::string("3/5"), 1, 10));
    REQUIRE(encode_point(sp, std::string("0"), 2, 10) !=
            encode_point(sp, std::string("3/5"), 2, 10));

    REQUIRE_THROWS_AS(encode_point(sp, std::string("5/2"), 1, 3), BudgetExhausted);
}

TEST_CASE("rescaling multiplies every distance") {
    FiniteSpace sp = demo_line();
    auto half = rescale(sp, Rational(1, 2));
    REQUIRE(half.distance("0", "6/5").compare(Rational(3, 5)) == 0);
    REQUIRE(half.dense_size() == sp.dense_size());
    REQUIRE(half.kind() == sp.kind());
    REQUIRE(half.is_complete());
    REQUIRE_THROWS_AS(rescale(sp, Rational(0)), ValidationError);
    REQUIRE_THROWS_AS(rescale(sp, Rational(-1)), ValidationError);

    // Separation at delta transfers to separation at rho * delta.
    SeparatedSet<std::string> s{{"0", "6/5", "5/2"}, Rational(1), Mode::Strict, {}};
    SeparatedSet<std::string> shalf{{"0", "6/5", "5/2"}, Rational(1, 2), Mode::Strict, {}};
    REQUIRE_FALSE(is_separated(sp, s).has_value());
    REQUIRE_FALSE(is_separated(half, shalf).has_value());
}

TEST_CASE("quotient collapses zero-distance classes") {
    auto E = [](long long v) { return ExactValue(Rational(v)); };
    std::vector<std::vector<ExactValue>> m = {
        {E(0), E(0), E(1)}, {E(0), E(0), E(1)}, {E(1), E(1), E(0)}};
    FiniteSpace sp({"a", "b", "c"}, m);

    auto q = quotient_to_metric(sp);
    REQUIRE(q.kind() == SpaceKind::Metric);
    REQUIRE(q.dense_size() == std::uint64_t{2});
    REQUIRE(q.dense_point(1) == "a");
    REQUIRE(q.dense_point(2) == "c");
    REQUIRE(q.classes().size() == 2);
    REQUIRE(q.classes()[0] == std::vector<std::string>{"a", "b"});
    REQUIRE(q.representative("b") == "a");
    REQUIRE(q.representative("c") == "c");
    REQUIRE(q.distance("a", "c").compare(Rational(1)) == 0);
    REQUIRE_THROWS_AS(q.representative("zz"), ValidationError);

    SECTION("a metric space is its own quotient") {
        FiniteSpace line = demo_line();
        auto qq = quotient_to_metric(line);
        REQUIRE(qq.dense_size() == std::uint64_t{4});
        for (std::uint64_t i = 1; i <= 4; ++i) REQUIRE(qq.dense_point(i) == line.dense_point(i));
    }
    SECTION("infinite presentations are refused") {
        IntegerLine inf;
        REQUIRE_THROWS_AS(quotient_to_metric(inf), UnsupportedCapability);
    }
}

TEST_CASE("materialize and enumeration helpers") {
    FiniteSpace sp = demo_line();
    auto pts = materialize_points(sp, 100);
    REQUIRE(pts == std::vector<std::string>{"0", "3/5", "6/5", "5/2"});
    REQUIRE(materialize_points(sp, 2) == std::vector<std::string>{"0", "3/5"});
    REQUIRE(dense_horizon(sp, 100) == 4);

    IntegerLine inf;
    REQUIRE(dense_horizon(inf, 7) == 7);
    REQUIRE(materialize_points(inf, 3) == std::vector<Rational>{Rational(1), Rational(2), Rational(3)});
}
