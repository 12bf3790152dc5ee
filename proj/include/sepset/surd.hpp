#pragma once

/**
 * @file surd.hpp
 * @brief Quadratic surds a + b*sqrt(c) with exact comparison against rationals.
 *
 * Canonical form, maintained by every constructor:
 *  - if the value is rational, b == 0 and c == 0;
 *  - otherwise c is a squarefree integer >= 2 (square factors and the
 *    radicand's denominator are folded into b).
 *
 * Canonical form is unique, so fieldwise equality is value equality, and two
 * surds share a radicand exactly when their values live in the same quadratic
 * extension.  Sums across different radicands are deliberately not a Surd;
 * surd_linear reports that case to its caller instead of widening the type.
 */

#include <sepset/intfactor.hpp>
#include <sepset/rational.hpp>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>

namespace sepset {

class Surd {
  public:
    Surd() : a_(0), b_(0), c_(0) {}
    Surd(const Rational& a) : a_(a), b_(0), c_(0) {}
    Surd(const Rational& a, const Rational& b, const Rational& c) : a_(a), b_(b), c_(c) {
        canonicalize();
    }

    static Surd sqrt_of(const Rational& q) {
        if (q.is_negative()) throw std::domain_error("sqrt of negative rational");
        return Surd(Rational(0), Rational(1), q);
    }

    const Rational& rational_part() const { return a_; }
    const Rational& coefficient() const { return b_; }
    const Rational& radicand() const { return c_; }

    bool is_rational() const { return b_.is_zero(); }

    int sign() const {
        if (b_.is_zero()) return a_.sign();
        int sa = a_.sign(), sb = b_.sign();
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // a and b*sqrt(c) pull in opposite directions; one squaring decides.
        auto ord = square(a_) <=> square(b_) * c_;
        if (ord == std::strong_ordering::equal) return 0;
        return ord == std::strong_ordering::greater ? sa : sb;
    }

    std::strong_ordering compare(const Rational& r) const {
        int s = Surd(a_ - r, b_, c_, already_canonical{}).sign();
        if (s < 0) return std::strong_ordering::less;
        if (s > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Surd negated() const { return Surd(-a_, -b_, c_, already_canonical{}); }

    Surd scaled(const Rational& r) const {
        if (r.is_zero()) return Surd();
        return Surd(a_ * r, b_ * r, c_, already_canonical{});
    }

    // (a + b*sqrt(c))^2 stays in the same extension.
    Surd squared() const {
        return Surd(square(a_) + square(b_) * c_, a_ * b_ + a_ * b_, c_);
    }

    friend bool operator==(const Surd& x, const Surd& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
    }

    std::string str() const {
        if (is_rational()) return a_.str();
        return a_.str() + " + " + b_.str() + "*sqrt(" + c_.str() + ")";
    }

  private:
    struct already_canonical {};
    Surd(Rational a, Rational b, Rational c, already_canonical)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

    void canonicalize() {
        if (c_.is_negative()) throw std::domain_error("surd: negative radicand");
        if (b_.is_zero() || c_.is_zero()) {
            b_ = Rational(0);
            c_ = Rational(0);
            return;
        }
        // sqrt(p/q) = (1/q) * sqrt(p*q); then split p*q into s^2 * core.
        BigInt pq = c_.numerator() * c_.denominator();
        auto parts = detail::squarefree_decompose(pq);
        Rational folded = Rational(parts.root, c_.denominator());
        if (parts.core == 1) {
            a_ = a_ + b_ * folded;
            b_ = Rational(0);
            c_ = Rational(0);
            return;
        }
        b_ = b_ * folded;
        c_ = Rational(parts.core);
    }

    Rational a_, b_, c_;
};

inline Surd surd_from_sqrt(const Rational& q) { return Surd::sqrt_of(q); }

inline std::strong_ordering surd_cmp(const Surd& s, const Rational& r) { return s.compare(r); }

// Sum of two surds when it stays a quadratic surd; empty when the radicands
// are distinct and both survive, in which case the caller must fall back to
// a squared comparison.
inline std::optional<Surd> surd_linear(const Surd& s1, const Surd& s2) {
    if (s1.is_rational())
        return Surd(s1.rational_part() + s2.rational_part(), s2.coefficient(), s2.radicand());
    if (s2.is_rational())
        return Surd(s1.rational_part() + s2.rational_part(), s1.coefficient(), s1.radicand());
    if (s1.radicand() != s2.radicand()) return std::nullopt;
    return Surd(s1.rational_part() + s2.rational_part(),
                s1.coefficient() + s2.coefficient(), s1.radicand());
}

}  // namespace sepset
