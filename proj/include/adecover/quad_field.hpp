#pragma once

// Quadratic cyclotomic coefficients: Q(w) with w a primitive N-th root of
// unity for N in {3, 4}. Elements are a + b*w reduced modulo the cyclotomic
// polynomial (w^2 = -w - 1 for N = 3, w^2 = -1 for N = 4). This is the only
// algebraic extension the cover catalog ever needs; everything else in the
// library stays over Q.

#include "adecover/numeric.hpp"

#include <stdexcept>
#include <string>

namespace adecover {

template <int N>
struct CycQuad {
    static_assert(N == 3 || N == 4, "only Q(w3) and Q(w4) are supported");
    Rat a, b;  // a + b*w

    CycQuad() : a(0), b(0) {}
    CycQuad(int v) : a(v), b(0) {}
    CycQuad(long v) : a(v), b(0) {}
    CycQuad(const Rat& v) : a(v), b(0) {}
    CycQuad(Rat av, Rat bv) : a(std::move(av)), b(std::move(bv)) {}

    static CycQuad root() { return CycQuad(Rat(0), Rat(1)); }

    // w^k for any integer k.
    static CycQuad root_pow(long k) {
        k = mod_long(k, N);
        CycQuad r(1);
        for (long i = 0; i < k; ++i) r = r * root();
        return r;
    }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    friend CycQuad operator+(const CycQuad& x, const CycQuad& y) { return {x.a + y.a, x.b + y.b}; }
    friend CycQuad operator-(const CycQuad& x, const CycQuad& y) { return {x.a - y.a, x.b - y.b}; }
    friend CycQuad operator-(const CycQuad& x) { return {-x.a, -x.b}; }

    friend CycQuad operator*(const CycQuad& x, const CycQuad& y) {
        // (a1 + b1 w)(a2 + b2 w) = a1 a2 + (a1 b2 + a2 b1) w + b1 b2 w^2
        Rat w2a, w2b;  // w^2 = w2a + w2b * w
        if constexpr (N == 3) {
            w2a = -1;
            w2b = -1;
        } else {
            w2a = -1;
            w2b = 0;
        }
        Rat c = x.b * y.b;
        return {x.a * y.a + c * w2a, x.a * y.b + x.b * y.a + c * w2b};
    }

    CycQuad inv() const {
        // Multiply by the conjugate; norm is the cyclotomic norm.
        if (is_zero()) throw std::domain_error("CycQuad: division by zero");
        Rat nrm;
        CycQuad conj;
        if constexpr (N == 3) {
            // conj(a + b w) = a + b w^2 = (a - b) - b w ; norm = a^2 - ab + b^2
            conj = CycQuad(a - b, -b);
            nrm = a * a - a * b + b * b;
        } else {
            conj = CycQuad(a, -b);
            nrm = a * a + b * b;
        }
        return {conj.a / nrm, conj.b / nrm};
    }

    friend CycQuad operator/(const CycQuad& x, const CycQuad& y) { return x * y.inv(); }

    CycQuad& operator+=(const CycQuad& o) { return *this = *this + o; }
    CycQuad& operator-=(const CycQuad& o) { return *this = *this - o; }
    CycQuad& operator*=(const CycQuad& o) { return *this = *this * o; }
    CycQuad& operator/=(const CycQuad& o) { return *this = *this / o; }

    friend bool operator==(const CycQuad& x, const CycQuad& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const CycQuad& x, const CycQuad& y) { return !(x == y); }

    std::string str() const {
        if (b == 0) return a.get_str();
        std::string s = "(" + a.get_str() + (b < 0 ? "" : "+") + b.get_str() + "w)";
        return s;
    }
};

// Uniform coefficient-field helpers used by the polynomial templates.
inline bool field_is_zero(const Rat& x) { return x == 0; }
template <int N>
bool field_is_zero(const CycQuad<N>& x) {
    return x.is_zero();
}
inline std::string field_str(const Rat& x) { return x.get_str(); }
template <int N>
std::string field_str(const CycQuad<N>& x) {
    return x.str();
}

}  // namespace adecover
