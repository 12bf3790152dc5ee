#pragma once

/**
 * @file exact_value.hpp
 * @brief Distance values: nonnegative reals with exact order against rationals.
 *
 * A distance is one of
 *  - a Rational,
 *  - a quadratic Surd a + b*sqrt(c),
 *  - Root, the square root of a RadicalSum (arc-to-arc distances in the
 *    plane fixture have squares with several radicands, so no Surd holds
 *    them), or
 *  - Approx, a tolerance-tagged double for callers that only have floating
 *    point data.  Comparisons treat an Approx as equal to a rational whenever
 *    they differ by at most the tag; everything else about it is exact
 *    (a double is a rational).
 *
 * Construction folds values down to the simplest form, including denesting
 * sqrt(p + q*sqrt(m)) back to u + v*sqrt(m) when that works, so rational
 * distances always print as rationals.
 */

#include <sepset/radical_sum.hpp>
#include <sepset/rational.hpp>
#include <sepset/surd.hpp>

#include <cmath>
#include <compare>
#include <optional>
#include <string>
#include <variant>

namespace sepset {

class ExactValue {
  public:
    struct Root {
        RadicalSum square;
        friend bool operator==(const Root&, const Root&) = default;
    };
    struct Approx {
        double value;
        double tolerance;
        friend bool operator==(const Approx&, const Approx&) = default;
    };

    ExactValue() : v_(Rational(0)) {}
    ExactValue(const Rational& q) : v_(q) {}
    ExactValue(const Surd& s) : v_(s.is_rational() ? Rep(s.rational_part()) : Rep(s)) {}

    static ExactValue sqrt_of(const Rational& q) {
        if (q.is_negative()) throw std::domain_error("sqrt of negative rational");
        Rational root;
        if (detail::rational_sqrt(q, root)) return ExactValue(root);
        return ExactValue(Surd::sqrt_of(q));
    }

    // Value sqrt(s); s must be nonnegative.
    static ExactValue sqrt_of_sum(const RadicalSum& s) {
        if (s.is_rational()) return sqrt_of(s.rational_part());
        if (s.sign() < 0) throw std::domain_error("sqrt of negative value");
        if (auto surd = s.as_surd()) {
            if (auto denested = denest(*surd)) return ExactValue(*denested);
        }
        ExactValue out;
        out.v_ = Root{s};
        return out;
    }

    static ExactValue approx(double value, double tolerance) {
        if (value < 0 || tolerance < 0) throw std::domain_error("approx distance needs value, tolerance >= 0");
        ExactValue out;
        out.v_ = Approx{value, tolerance};
        return out;
    }

    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    bool is_surd() const { return std::holds_alternative<Surd>(v_); }
    bool is_root() const { return std::holds_alternative<Root>(v_); }
    bool is_exact() const { return !std::holds_alternative<Approx>(v_); }

    const Rational& as_rational() const { return std::get<Rational>(v_); }
    const Surd& as_surd() const { return std::get<Surd>(v_); }
    const RadicalSum& root_square() const { return std::get<Root>(v_).square; }
    const Approx& as_approx() const { return std::get<Approx>(v_); }

    std::strong_ordering compare(const Rational& r) const {
        if (auto q = std::get_if<Rational>(&v_)) return *q <=> r;
        if (auto s = std::get_if<Surd>(&v_)) return s->compare(r);
        if (auto root = std::get_if<Root>(&v_)) {
            if (r.sign() < 0) return std::strong_ordering::greater;
            return root->square.compare(square(r));
        }
        const Approx& ap = std::get<Approx>(v_);
        double rv = r.to_double();
        double diff = ap.value - rv;
        if (diff <= ap.tolerance && -diff <= ap.tolerance) return std::strong_ordering::equal;
        return diff < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    bool is_zero() const { return compare(Rational(0)) == std::strong_ordering::equal; }

    // Square of the value as a RadicalSum (Approx via its exact double value).
    RadicalSum squared() const {
        if (auto q = std::get_if<Rational>(&v_)) return RadicalSum(square(*q));
        if (auto s = std::get_if<Surd>(&v_)) return RadicalSum::from_surd(s->squared());
        if (auto root = std::get_if<Root>(&v_)) return root->square;
        return RadicalSum(square(double_to_rational(std::get<Approx>(v_).value)));
    }

    bool same_value(const ExactValue& o) const {
        if ((compare(Rational(0)) < 0) != (o.compare(Rational(0)) < 0)) return false;
        return (squared() - o.squared()).sign() == 0;
    }

    // Multiply by a positive rational.
    ExactValue scaled(const Rational& rho) const {
        if (rho.sign() <= 0) throw std::domain_error("scale factor must be positive");
        if (auto q = std::get_if<Rational>(&v_)) return ExactValue(*q * rho);
        if (auto s = std::get_if<Surd>(&v_)) return ExactValue(s->scaled(rho));
        if (auto root = std::get_if<Root>(&v_)) {
            ExactValue out;
            out.v_ = Root{root->square.scaled(square(rho))};
            return out;
        }
        const Approx& ap = std::get<Approx>(v_);
        double f = rho.to_double();
        return approx(ap.value * f, ap.tolerance * f);
    }

    std::string str() const {
        if (auto q = std::get_if<Rational>(&v_)) return q->str();
        if (auto s = std::get_if<Surd>(&v_)) return s->str();
        if (auto root = std::get_if<Root>(&v_)) return "sqrt(" + root->square.str() + ")";
        const Approx& ap = std::get<Approx>(v_);
        return "approx(" + std::to_string(ap.value) + " +- " + std::to_string(ap.tolerance) + ")";
    }

    static Rational double_to_rational(double d);

    friend bool operator==(const ExactValue& x, const ExactValue& y) { return x.v_ == y.v_; }

  private:
    using Rep = std::variant<Rational, Surd, Root, Approx>;

    // sqrt(p + q*sqrt(m)) = u + v*sqrt(m) when p^2 - q^2 m is a rational
    // square and one of (p +- s)/2 is too.
    static std::optional<Surd> denest(const Surd& s) {
        const Rational& p = s.rational_part();
        const Rational& q = s.coefficient();
        const Rational& m = s.radicand();
        Rational disc = square(p) - square(q) * m;
        Rational root;
        if (!detail::rational_sqrt(disc, root)) return std::nullopt;
        for (const Rational& uu : {(p + root) / Rational(2), (p - root) / Rational(2)}) {
            Rational u;
            if (!detail::rational_sqrt(uu, u) || u.is_zero()) continue;
            Rational v = q / (Rational(2) * u);
            Surd candidate(u, v, m);
            if (candidate.squared() == s && candidate.sign() >= 0) return candidate;
        }
        return std::nullopt;
    }

    Rep v_;
};

inline Rational ExactValue::double_to_rational(double d) {
    if (d != d || d - d != 0) throw std::domain_error("non-finite double");
    bool neg = d < 0;
    if (neg) d = -d;
    // Every finite double is m * 2^e exactly.
    int exp = 0;
    double mant = std::frexp(d, &exp);
    BigInt num = 0;
    for (int i = 0; i < 64 && mant != 0; ++i) {
        mant *= 2;
        int bit = int(mant);
        mant -= bit;
        num = (num << 1) + bit;
        --exp;
    }
    Rational out = Rational(num) * Rational::pow2(exp);
    return neg ? -out : out;
}

// Decides a <= b + c for nonnegative values via at most two squarings.
inline bool triangle_holds(const ExactValue& a, const ExactValue& b, const ExactValue& c) {
    RadicalSum sa = a.squared(), sb = b.squared(), sc = c.squared();
    RadicalSum t = sa - sb - sc;
    if (t.sign() <= 0) return true;
    return (t * t - (sb * sc).scaled(Rational(4))).sign() <= 0;
}

}  // namespace sepset
