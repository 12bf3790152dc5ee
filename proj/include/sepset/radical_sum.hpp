#pragma once

/**
 * @file radical_sum.hpp
 * @brief Exact sums q0 + sum_i qi * sqrt(mi) with distinct squarefree mi.
 *
 * This is the squared-comparison workhorse behind ExactValue: squared
 * Euclidean distances between points whose coordinates carry square roots
 * land here, and deciding a separation or triangle inequality reduces to
 * sign().  Only ring operations and sign are provided.  The representation
 * is canonical (squarefree radicands, nonzero coefficients), so structural
 * equality is value equality.
 *
 * sign() eliminates one prime at a time: writing S = u + v*sqrt(p) with u, v
 * free of sqrt(p), the sign of S follows from the signs of u, v and of
 * u^2 - p*v^2, all of which live in a strictly smaller radical extension.
 * No linear-independence assumption is needed for that case split, so the
 * routine is exact even before canonicalization arguments enter.
 */

#include <sepset/intfactor.hpp>
#include <sepset/rational.hpp>
#include <sepset/surd.hpp>

#include <map>
#include <string>

namespace sepset {

class RadicalSum {
  public:
    RadicalSum() : rat_(0) {}
    RadicalSum(const Rational& q) : rat_(q) {}

    static RadicalSum sqrt_of(const Rational& q) {
        if (q.is_negative()) throw std::domain_error("sqrt of negative rational");
        RadicalSum out;
        if (q.is_zero()) return out;
        BigInt pq = q.numerator() * q.denominator();
        auto parts = detail::squarefree_decompose(pq);
        Rational coeff(parts.root, q.denominator());
        if (parts.core == 1)
            out.rat_ = coeff;
        else
            out.terms_[parts.core] = coeff;
        return out;
    }

    static RadicalSum from_surd(const Surd& s) {
        RadicalSum out(s.rational_part());
        if (!s.is_rational()) out.terms_[s.radicand().numerator()] = s.coefficient();
        return out;
    }

    const Rational& rational_part() const { return rat_; }
    const std::map<BigInt, Rational>& radical_terms() const { return terms_; }

    bool is_rational() const { return terms_.empty(); }
    bool is_zero() const { return terms_.empty() && rat_.is_zero(); }

    // Present when the value is a plain quadratic surd.
    std::optional<Surd> as_surd() const {
        if (terms_.empty()) return Surd(rat_);
        if (terms_.size() > 1) return std::nullopt;
        const auto& [core, coeff] = *terms_.begin();
        return Surd(rat_, coeff, Rational(core));
    }

    friend RadicalSum operator+(const RadicalSum& x, const RadicalSum& y) {
        RadicalSum out = x;
        out.rat_ += y.rat_;
        for (const auto& [core, coeff] : y.terms_) out.add_term(core, coeff);
        return out;
    }
    friend RadicalSum operator-(const RadicalSum& x, const RadicalSum& y) {
        RadicalSum out = x;
        out.rat_ -= y.rat_;
        for (const auto& [core, coeff] : y.terms_) out.add_term(core, -coeff);
        return out;
    }
    friend RadicalSum operator*(const RadicalSum& x, const RadicalSum& y) {
        RadicalSum out(x.rat_ * y.rat_);
        for (const auto& [core, coeff] : y.terms_) out.add_term(core, x.rat_ * coeff);
        for (const auto& [core, coeff] : x.terms_) {
            out.add_term(core, coeff * y.rat_);
            for (const auto& [core2, coeff2] : y.terms_) {
                // sqrt(m) * sqrt(m') = g * sqrt(m m'/g^2) with g = gcd; both
                // factors squarefree keeps the product squarefree.
                BigInt g = boost::multiprecision::gcd(core, core2);
                BigInt prod = (core / g) * (core2 / g);
                Rational c = coeff * coeff2 * Rational(g);
                if (prod == 1)
                    out.rat_ += c;
                else
                    out.add_term(prod, c);
            }
        }
        return out;
    }
    RadicalSum operator-() const {
        RadicalSum out(-rat_);
        for (const auto& [core, coeff] : terms_) out.terms_[core] = -coeff;
        return out;
    }
    RadicalSum scaled(const Rational& r) const {
        if (r.is_zero()) return RadicalSum();
        RadicalSum out(rat_ * r);
        for (const auto& [core, coeff] : terms_) out.terms_[core] = coeff * r;
        return out;
    }

    friend bool operator==(const RadicalSum& x, const RadicalSum& y) {
        return x.rat_ == y.rat_ && x.terms_ == y.terms_;
    }

    int sign() const {
        if (terms_.empty()) return rat_.sign();
        if (terms_.size() == 1) {
            const auto& [core, coeff] = *terms_.begin();
            int sa = rat_.sign(), sb = coeff.sign();
            if (sa == 0) return sb;
            if (sa == sb) return sa;
            auto ord = square(rat_) <=> square(coeff) * Rational(core);
            if (ord == std::strong_ordering::equal) return 0;
            return ord == std::strong_ordering::greater ? sa : sb;
        }
        // Pick a prime dividing some radicand and split on it.
        BigInt p = smallest_prime_of(terms_.begin()->first);
        RadicalSum u, v;
        u.rat_ = rat_;
        for (const auto& [core, coeff] : terms_) {
            if (core % p == 0)
                v.add_term_or_rat(core / p, coeff);
            else
                u.add_term(core, coeff);
        }
        int su = u.sign(), sv = v.sign();
        if (sv == 0) return su;
        if (su == 0) return sv;
        if (su == sv) return su;
        RadicalSum w = u * u - (v * v).scaled(Rational(p));
        int t = w.sign();
        if (t == 0) return 0;
        // u > 0 > v*sqrt(p): S > 0 iff u^2 > p v^2; mirrored otherwise.
        return su > 0 ? t : -t;
    }

    std::strong_ordering compare(const Rational& r) const {
        int s = (*this - RadicalSum(r)).sign();
        if (s < 0) return std::strong_ordering::less;
        if (s > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const {
        std::string out = rat_.str();
        for (const auto& [core, coeff] : terms_)
            out += " + " + coeff.str() + "*sqrt(" + core.str() + ")";
        return out;
    }

  private:
    void add_term(const BigInt& core, const Rational& coeff) {
        if (coeff.is_zero()) return;
        auto it = terms_.find(core);
        if (it == terms_.end()) {
            terms_.emplace(core, coeff);
            return;
        }
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
    void add_term_or_rat(const BigInt& core, const Rational& coeff) {
        if (core == 1)
            rat_ += coeff;
        else
            add_term(core, coeff);
    }

    static BigInt smallest_prime_of(const BigInt& core) {
        for (std::uint32_t p : detail::small_primes())
            if (core % p == 0) return BigInt(p);
        // Squarefree with no small factor: take a full factorization.
        return detail::factorize(core).begin()->first;
    }

    Rational rat_;
    std::map<BigInt, Rational> terms_;  // squarefree radicand >= 2 -> nonzero coefficient
};

}  // namespace sepset
