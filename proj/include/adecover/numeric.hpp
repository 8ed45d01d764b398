#pragma once

// Exact arithmetic base layer. Integers and rationals are GMP-backed;
// mpq_class values produced by arithmetic are always canonical (reduced,
// positive denominator), which is exactly the invariant the rest of the
// library relies on.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace adecover {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Smallest nonnegative residue.
inline long mod_long(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

// Inverse of a mod m; requires gcd(a, m) = 1.
inline long inv_mod(long a, long m) {
    long t = 0, new_t = 1, r = m, new_r = mod_long(a, m);
    while (new_r != 0) {
        long q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw std::domain_error("inv_mod: not invertible");
    return mod_long(t, m);
}

inline Int int_pow(Int base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r = 1;
    Rat b = base;
    unsigned long k = e;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

inline Rat rat_abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

inline std::string rat_str(const Rat& a) { return a.get_str(); }

// Parses "p" or "p/q". Returns nullopt on malformed input.
inline std::optional<Rat> rat_parse(const std::string& s) {
    if (s.empty()) return std::nullopt;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0) || (c == '+' && i == 0);
        if (!ok) return std::nullopt;
    }
    try {
        Rat r(s);
        r.canonicalize();
        if (r.get_den() == 0) return std::nullopt;
        return r;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

// Divisors of |n|, unordered. Intended for small integers (rational root
// search on blowup tangent cones); bails out with nullopt when |n| resists
// trial division within the cap.
inline std::optional<std::vector<Int>> int_divisors(Int n, unsigned long cap = 1000000) {
    if (n < 0) n = -n;
    if (n == 0) return std::nullopt;
    std::vector<std::pair<Int, int>> fact;
    Int m = n;
    for (Int p = 2; p * p <= m; ++p) {
        if (p > cap) return std::nullopt;
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            fact.push_back({p, e});
        }
    }
    if (m > 1) fact.push_back({m, 1});
    std::vector<Int> divs{1};
    for (auto& [p, e] : fact) {
        size_t old = divs.size();
        Int pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < old; ++j) divs.push_back(divs[j] * pe);
        }
    }
    return divs;
}

}  // namespace adecover
