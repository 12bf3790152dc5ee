#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers over arbitrary-precision integers.
 *
 * Every quantity the library compares against a distance is a Rational or is
 * derived from Rationals, so this type pins the conventions everything else
 * relies on:
 *
 *  - canonical form: lowest terms, denominator > 0 (the zero value is 0/1),
 *  - total order via exact integer cross-multiplication,
 *  - a single string format, "p/q" with "/1" omitted, used verbatim in JSON.
 *
 * Storage is boost::multiprecision::cpp_rational, which already maintains
 * lowest terms.  Its two-argument constructor rejects negative denominators,
 * so sign normalization happens here.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sepset {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(BigInt num, BigInt den) {
        if (den == 0) throw std::domain_error("rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        v_ = BigRat(num, den);
    }

    // Accepts "p", "-p", "p/q" with q > 0 after sign normalization.
    static Rational parse(std::string_view s) {
        auto bad = [&] {
            return std::invalid_argument("bad rational literal: '" + std::string(s) + "'");
        };
        if (s.empty()) throw bad();
        std::size_t slash = s.find('/');
        auto parse_int = [&](std::string_view t) {
            if (t.empty()) throw bad();
            std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
            if (i == t.size()) throw bad();
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9') throw bad();
            return BigInt(std::string(t));
        };
        if (slash == std::string_view::npos) return Rational(parse_int(s));
        BigInt num = parse_int(s.substr(0, slash));
        BigInt den = parse_int(s.substr(slash + 1));
        return Rational(std::move(num), std::move(den));
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    bool is_negative() const { return v_ < 0; }

    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    Rational abs() const { return v_ < 0 ? Rational(BigRat(-v_)) : *this; }

    // Largest integer <= value.
    BigInt floor() const {
        BigInt q = numerator() / denominator();
        if (v_ < 0 && q * denominator() != numerator()) --q;
        return q;
    }
    BigInt ceil() const { return -(Rational(BigRat(-v_)).floor()); }

    std::string str() const {
        std::string out = numerator().str();
        if (denominator() != 1) {
            out += '/';
            out += denominator().str();
        }
        return out;
    }

    double to_double() const { return v_.convert_to<double>(); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(BigRat(a.v_ + b.v_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(BigRat(a.v_ - b.v_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(BigRat(a.v_ * b.v_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.v_ == 0) throw std::domain_error("rational: division by zero");
        return Rational(BigRat(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(BigRat(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // 2^-k for the geometric radii of the closed-set selector.
    static Rational pow2(int k) {
        BigInt one = 1;
        if (k >= 0) return Rational(BigInt(one << k));
        return Rational(one, BigInt(one << -k));
    }

  private:
    explicit Rational(BigRat v) : v_(std::move(v)) {}
    BigRat v_;
};

inline Rational square(const Rational& q) { return q * q; }

}  // namespace sepset
