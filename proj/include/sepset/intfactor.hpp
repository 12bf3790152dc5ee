#pragma once

// Integer factorization support for radicand canonicalization.  Everything
// here must be exact: a radicand whose squarefree core came out wrong would
// silently corrupt every comparison built on it.  Trial division handles the
// sizes the library actually produces; Pollard rho covers stragglers.
// Primality uses Miller-Rabin with a base set that is deterministic below
// 3.3e24, and inputs beyond that bound are rejected outright rather than
// answered probabilistically.

#include <sepset/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace sepset::detail {

inline const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        constexpr std::uint32_t limit = 10000;
        std::vector<bool> sieve(limit + 1, true);
        std::vector<std::uint32_t> out;
        for (std::uint32_t p = 2; p <= limit; ++p) {
            if (!sieve[p]) continue;
            out.push_back(p);
            for (std::uint64_t q = std::uint64_t(p) * p; q <= limit; q += p) sieve[q] = false;
        }
        return out;
    }();
    return primes;
}

// Deterministic below this bound with the fixed base set; see Sorenson and
// Webster for the certificate.
inline const BigInt& miller_rabin_bound() {
    static const BigInt bound("3317044064679887385961981");
    return bound;
}

inline bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n >= miller_rabin_bound())
        throw std::domain_error("integer too large for exact primality certificate");
    BigInt d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint32_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        BigInt x = boost::multiprecision::powm(BigInt(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < r; ++i) {
            x = (x * x) % n;
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// Brent's cycle variant.  Precondition: n composite, odd, no factor <= 10000.
inline BigInt pollard_rho(const BigInt& n) {
    BigInt c = 1;
    while (true) {
        BigInt x = 2, y = 2, d = 1, saved = 1;
        int steps = 0;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            BigInt diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            saved = (saved * diff) % n;
            if (++steps % 64 == 0) {
                d = boost::multiprecision::gcd(saved, n);
                saved = 1;
            }
        }
        if (d == 1) d = boost::multiprecision::gcd(saved, n);
        if (d != 1 && d != n) return d;
        ++c;
    }
}

inline void factorize_into(BigInt n, std::map<BigInt, unsigned>& out) {
    if (n <= 1) return;
    for (std::uint32_t p : small_primes()) {
        if (BigInt(p) * p > n) break;
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    BigInt root = boost::multiprecision::sqrt(n);
    if (root * root == n) {
        std::map<BigInt, unsigned> inner;
        factorize_into(root, inner);
        for (auto& [p, e] : inner) out[p] += 2 * e;
        return;
    }
    BigInt d = pollard_rho(n);
    factorize_into(d, out);
    factorize_into(n / d, out);
}

inline std::map<BigInt, unsigned> factorize(const BigInt& n) {
    std::map<BigInt, unsigned> out;
    factorize_into(n, out);
    return out;
}

struct SquarefreeParts {
    BigInt root;  // largest s with s*s dividing n
    BigInt core;  // n / (root * root), squarefree
};

inline SquarefreeParts squarefree_decompose(const BigInt& n) {
    if (n < 0) throw std::domain_error("squarefree_decompose: negative input");
    if (n <= 1) return {1, n};
    SquarefreeParts parts{1, 1};
    for (const auto& [p, e] : factorize(n)) {
        for (unsigned i = 0; i < e / 2; ++i) parts.root *= p;
        if (e % 2) parts.core *= p;
    }
    return parts;
}

inline bool is_perfect_square(const BigInt& n) {
    if (n < 0) return false;
    BigInt r = boost::multiprecision::sqrt(n);
    return r * r == n;
}

// Exact square root when the rational is a perfect square.
inline bool rational_sqrt(const Rational& q, Rational& out) {
    if (q.is_negative()) return false;
    BigInt num = q.numerator(), den = q.denominator();
    BigInt rn = boost::multiprecision::sqrt(num);
    BigInt rd = boost::multiprecision::sqrt(den);
    if (rn * rn != num || rd * rd != den) return false;
    out = Rational(rn, rd);
    return true;
}

}  // namespace sepset::detail
