#pragma once

// Polynomials over an exact field K (Q, or the quadratic cyclotomic fields).
// Poly1 is dense univariate, Poly2 is sparse bivariate keyed by exponent
// pairs in graded-lex order, which makes canonical equality a term-list
// comparison. No floating point anywhere.

#include "adecover/numeric.hpp"
#include "adecover/quad_field.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace adecover {

// ---------------------------------------------------------------------------
// Univariate
// ---------------------------------------------------------------------------

template <class K = Rat>
struct Poly1 {
    std::vector<K> c;  // c[i] is the x^i coefficient; invariant: no trailing zeros

    Poly1() = default;
    explicit Poly1(const K& v) {
        if (!field_is_zero(v)) c = {v};
    }

    static Poly1 monomial(int deg, const K& v) {
        Poly1 p;
        if (field_is_zero(v)) return p;
        p.c.assign(deg + 1, K(0));
        p.c[deg] = v;
        return p;
    }

    void trim() {
        while (!c.empty() && field_is_zero(c.back())) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; }  // -1 for zero
    const K& lc() const { return c.back(); }

    K coeff(int i) const { return (i >= 0 && i < (int)c.size()) ? c[i] : K(0); }

    friend Poly1 operator+(const Poly1& a, const Poly1& b) {
        Poly1 r;
        r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
        r.trim();
        return r;
    }
    friend Poly1 operator-(const Poly1& a, const Poly1& b) {
        Poly1 r;
        r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
        r.trim();
        return r;
    }
    friend Poly1 operator-(const Poly1& a) { return Poly1() - a; }
    friend Poly1 operator*(const Poly1& a, const Poly1& b) {
        if (a.is_zero() || b.is_zero()) return {};
        Poly1 r;
        r.c.assign(a.c.size() + b.c.size() - 1, K(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        r.trim();
        return r;
    }
    friend Poly1 operator*(const K& s, const Poly1& a) {
        Poly1 r = a;
        for (auto& x : r.c) x = x * s;
        r.trim();
        return r;
    }
    friend bool operator==(const Poly1& a, const Poly1& b) { return a.c == b.c; }

    K eval(const K& x) const {
        K r(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
        return r;
    }

    Poly1 derivative() const {
        Poly1 r;
        if (c.size() <= 1) return r;
        r.c.resize(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) r.c[i - 1] = K((long)i) * c[i];
        r.trim();
        return r;
    }

    // x -> x + t
    Poly1 shift(const K& t) const {
        Poly1 r, pw(K(1));
        Poly1 lin;  // x + t
        lin.c = {t, K(1)};
        for (size_t i = 0; i < c.size(); ++i) {
            r = r + c[i] * pw;
            pw = pw * lin;
        }
        return r;
    }

    Poly1 monic() const {
        if (is_zero()) return *this;
        K inv = K(1) / lc();
        return inv * *this;
    }
};

template <class K>
std::pair<Poly1<K>, Poly1<K>> divmod(const Poly1<K>& a, const Poly1<K>& b) {
    if (b.is_zero()) throw std::domain_error("poly divmod by zero");
    Poly1<K> q, r = a;
    if (r.degree() >= b.degree()) q.c.assign(r.degree() - b.degree() + 1, K(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        K f = r.lc() / b.lc();
        int d = r.degree() - b.degree();
        q.c[d] = f;
        for (int i = 0; i <= b.degree(); ++i) r.c[i + d] -= f * b.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

// Monic gcd by the Euclidean algorithm; exact over any field.
// Both zero is a domain error (no gcd).
template <class K>
Poly1<K> gcd(const Poly1<K>& a0, const Poly1<K>& b0) {
    Poly1<K> a = a0, b = b0;
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) undefined");
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = b;
        b = r;
    }
    return a.monic();
}

template <class K>
bool divides(const Poly1<K>& d, const Poly1<K>& a) {
    if (d.is_zero()) return a.is_zero();
    return divmod(a, d).second.is_zero();
}

// Yun's squarefree decomposition: p = unit * prod f_i^i with the f_i
// squarefree and pairwise coprime. Returns (multiplicity, factor) pairs for
// the nontrivial factors, multiplicities ascending.
template <class K>
std::vector<std::pair<int, Poly1<K>>> squarefree_decomposition(const Poly1<K>& p) {
    if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
    std::vector<std::pair<int, Poly1<K>>> out;
    if (p.degree() < 1) return out;
    Poly1<K> a = gcd(p, p.derivative());
    Poly1<K> b = divmod(p, a).first;
    Poly1<K> z = divmod(p.derivative(), a).first - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Poly1<K> f = z.is_zero() ? b.monic() : gcd(b, z);
        if (f.degree() > 0) out.push_back({i, f});
        b = divmod(b, f).first;
        z = divmod(z, f).first - b.derivative();
        ++i;
    }
    return out;
}

template <class K>
Poly1<K> radical(const Poly1<K>& p) {
    Poly1<K> r(K(1));
    for (auto& [m, f] : squarefree_decomposition(p)) r = r * f;
    return r;
}

// All rational roots of p, each with multiplicity, plus the root-free
// cofactor. Clears denominators and runs the p/q candidate search.
inline std::vector<std::pair<Rat, int>> rational_roots(const Poly1<Rat>& p, Poly1<Rat>* cofactor = nullptr) {
    std::vector<std::pair<Rat, int>> roots;
    Poly1<Rat> rem = p;
    if (p.degree() < 1) {
        if (cofactor) *cofactor = p;
        return roots;
    }
    // root at 0 first
    int z = 0;
    while (!rem.is_zero() && rem.c[0] == 0) {
        rem.c.erase(rem.c.begin());
        ++z;
    }
    if (z) roots.push_back({Rat(0), z});
    if (rem.degree() >= 1) {
        Int den = 1;
        for (auto& x : rem.c) den = int_lcm(den, x.get_den());
        std::vector<Int> ic(rem.c.size());
        for (size_t i = 0; i < rem.c.size(); ++i) {
            Rat v = rem.c[i] * Rat(den);
            ic[i] = v.get_num();
        }
        auto d0 = int_divisors(ic.front());
        auto dn = int_divisors(ic.back());
        if (!d0 || !dn) throw std::domain_error("rational root search: coefficients too large to factor");
        std::vector<Rat> cands;
        for (const Int& a : *d0)
            for (const Int& b : *dn) {
                Rat r(a, b);
                r.canonicalize();
                cands.push_back(r);
                cands.push_back(-r);
            }
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        for (const Rat& r : cands) {
            int mult = 0;
            while (rem.degree() >= 1 && rem.eval(r) == 0) {
                Poly1<Rat> lin;
                lin.c = {-r, Rat(1)};
                rem = divmod(rem, lin).first;
                ++mult;
            }
            if (mult) roots.push_back({r, mult});
        }
    }
    if (cofactor) *cofactor = rem;
    return roots;
}

// ---------------------------------------------------------------------------
// Bivariate
// ---------------------------------------------------------------------------

struct ExpPair {
    int a = 0, b = 0;  // exponents of (x, y)
    friend bool operator<(const ExpPair& l, const ExpPair& r) {
        int dl = l.a + l.b, dr = r.a + r.b;
        if (dl != dr) return dl < dr;
        if (l.a != r.a) return l.a > r.a;  // graded-lex: higher x first within a degree
        return false;
    }
    friend bool operator==(const ExpPair& l, const ExpPair& r) { return l.a == r.a && l.b == r.b; }
};

template <class K = Rat>
struct Poly2 {
    std::map<ExpPair, K> t;  // invariant: no zero coefficients stored

    Poly2() = default;
    explicit Poly2(const K& v) {
        if (!field_is_zero(v)) t[{0, 0}] = v;
    }

    static Poly2 monomial(int a, int b, const K& v) {
        Poly2 p;
        if (!field_is_zero(v)) p.t[{a, b}] = v;
        return p;
    }
    static Poly2 var_x() { return monomial(1, 0, K(1)); }
    static Poly2 var_y() { return monomial(0, 1, K(1)); }

    bool is_zero() const { return t.empty(); }
    bool is_constant() const { return t.empty() || (t.size() == 1 && t.begin()->first == ExpPair{0, 0}); }

    void add_term(int a, int b, const K& v) {
        if (field_is_zero(v)) return;
        auto key = ExpPair{a, b};
        auto it = t.find(key);
        if (it == t.end())
            t[key] = v;
        else {
            it->second += v;
            if (field_is_zero(it->second)) t.erase(it);
        }
    }

    friend Poly2 operator+(const Poly2& p, const Poly2& q) {
        Poly2 r = p;
        for (auto& [e, v] : q.t) r.add_term(e.a, e.b, v);
        return r;
    }
    friend Poly2 operator-(const Poly2& p, const Poly2& q) {
        Poly2 r = p;
        for (auto& [e, v] : q.t) r.add_term(e.a, e.b, K(0) - v);
        return r;
    }
    friend Poly2 operator-(const Poly2& p) { return Poly2() - p; }
    friend Poly2 operator*(const Poly2& p, const Poly2& q) {
        Poly2 r;
        for (auto& [e1, v1] : p.t)
            for (auto& [e2, v2] : q.t) r.add_term(e1.a + e2.a, e1.b + e2.b, v1 * v2);
        return r;
    }
    friend Poly2 operator*(const K& s, const Poly2& p) {
        Poly2 r;
        for (auto& [e, v] : p.t) r.add_term(e.a, e.b, s * v);
        return r;
    }
    friend bool operator==(const Poly2& p, const Poly2& q) { return p.t == q.t; }

    Poly2 pow(int e) const {
        Poly2 r(K(1));
        Poly2 b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    int total_degree() const {
        int d = -1;
        for (auto& [e, v] : t) d = std::max(d, e.a + e.b);
        return d;
    }
    // Order of vanishing at the origin (minimal total degree); -1 for zero.
    int ord() const {
        int d = -1;
        for (auto& [e, v] : t) d = (d < 0) ? e.a + e.b : std::min(d, e.a + e.b);
        return d;
    }
    int deg_x() const {
        int d = -1;
        for (auto& [e, v] : t) d = std::max(d, e.a);
        return d;
    }
    int deg_y() const {
        int d = -1;
        for (auto& [e, v] : t) d = std::max(d, e.b);
        return d;
    }

    Poly2 homogeneous_part(int d) const {
        Poly2 r;
        for (auto& [e, v] : t)
            if (e.a + e.b == d) r.t[e] = v;
        return r;
    }
    Poly2 lowest_part() const { return is_zero() ? Poly2() : homogeneous_part(ord()); }
    bool is_homogeneous() const { return is_zero() || ord() == total_degree(); }

    K coeff(int a, int b) const {
        auto it = t.find({a, b});
        return it == t.end() ? K(0) : it->second;
    }
    K eval(const K& x, const K& y) const {
        K r(0);
        for (auto& [e, v] : t) {
            K m = v;
            for (int i = 0; i < e.a; ++i) m *= x;
            for (int i = 0; i < e.b; ++i) m *= y;
            r += m;
        }
        return r;
    }

    Poly2 dx() const {
        Poly2 r;
        for (auto& [e, v] : t)
            if (e.a > 0) r.add_term(e.a - 1, e.b, K((long)e.a) * v);
        return r;
    }
    Poly2 dy() const {
        Poly2 r;
        for (auto& [e, v] : t)
            if (e.b > 0) r.add_term(e.a, e.b - 1, K((long)e.b) * v);
        return r;
    }

    Poly2 swap_vars() const {
        Poly2 r;
        for (auto& [e, v] : t) r.t[{e.b, e.a}] = v;
        return r;
    }

    // Exact division by x^k (throws if not divisible).
    Poly2 div_xk(int k) const {
        Poly2 r;
        for (auto& [e, v] : t) {
            if (e.a < k) throw std::domain_error("div_xk: not divisible");
            r.t[{e.a - k, e.b}] = v;
        }
        return r;
    }
    Poly2 div_yk(int k) const {
        Poly2 r;
        for (auto& [e, v] : t) {
            if (e.b < k) throw std::domain_error("div_yk: not divisible");
            r.t[{e.a, e.b - k}] = v;
        }
        return r;
    }

    // Substitute x -> px, y -> py.
    Poly2 subst(const Poly2& px, const Poly2& py) const {
        Poly2 r;
        // modest caching of powers
        std::vector<Poly2> xp{Poly2(K(1))}, yp{Poly2(K(1))};
        for (auto& [e, v] : t) {
            while ((int)xp.size() <= e.a) xp.push_back(xp.back() * px);
            while ((int)yp.size() <= e.b) yp.push_back(yp.back() * py);
            r = r + v * (xp[e.a] * yp[e.b]);
        }
        return r;
    }

    // y -> y + t (x untouched)
    Poly2 shift_y(const K& t0) const {
        Poly2 lin = var_y() + Poly2(t0);
        return subst(var_x(), lin);
    }

    // Restriction to a coordinate line as a univariate polynomial.
    Poly1<K> at_x0() const {  // p(0, y)
        Poly1<K> r;
        for (auto& [e, v] : t)
            if (e.a == 0) {
                if ((int)r.c.size() <= e.b) r.c.resize(e.b + 1, K(0));
                r.c[e.b] += v;
            }
        r.trim();
        return r;
    }
    Poly1<K> at_y0() const {  // p(x, 0)
        Poly1<K> r;
        for (auto& [e, v] : t)
            if (e.b == 0) {
                if ((int)r.c.size() <= e.a) r.c.resize(e.a + 1, K(0));
                r.c[e.a] += v;
            }
        r.trim();
        return r;
    }
    // p(x, 1) with x the first variable.
    Poly1<K> dehomogenize_y() const {
        Poly1<K> r;
        for (auto& [e, v] : t) {
            if ((int)r.c.size() <= e.a) r.c.resize(e.a + 1, K(0));
            r.c[e.a] += v;
        }
        r.trim();
        return r;
    }
    static Poly2 homogenize(const Poly1<K>& p, int deg) {
        Poly2 r;
        for (int i = 0; i < (int)p.c.size(); ++i) {
            if (field_is_zero(p.c[i])) continue;
            if (deg - i < 0) throw std::domain_error("homogenize: degree too small");
            r.t[{i, deg - i}] = p.c[i];
        }
        return r;
    }

    std::string str(const std::string& xn = "x1", const std::string& yn = "x2") const {
        if (t.empty()) return "0";
        std::string s;
        // print highest degree first for readability
        for (auto it = t.rbegin(); it != t.rend(); ++it) {
            std::string c = field_str(it->second);
            if (!s.empty()) {
                if (!c.empty() && c[0] == '-') {
                    s += " - ";
                    c = c.substr(1);
                } else
                    s += " + ";
            }
            s += c + "*" + xn + "^" + std::to_string(it->first.a) + "*" + yn + "^" +
                 std::to_string(it->first.b);
        }
        return s;
    }
};

// Exact multivariate division attempt: returns p/d if d divides p, else
// nullopt. Single-divisor reduction in graded-lex order.
template <class K>
std::optional<Poly2<K>> exact_divide(const Poly2<K>& p, const Poly2<K>& d) {
    if (d.is_zero()) return std::nullopt;
    Poly2<K> r = p, q;
    auto lead = *d.t.rbegin();  // graded-lex leading term of the divisor
    while (!r.is_zero()) {
        auto lt = *r.t.rbegin();
        if (lt.first.a < lead.first.a || lt.first.b < lead.first.b) return std::nullopt;
        int ea = lt.first.a - lead.first.a, eb = lt.first.b - lead.first.b;
        K f = lt.second / lead.second;
        q.add_term(ea, eb, f);
        r = r - Poly2<K>::monomial(ea, eb, f) * d;
    }
    return q;
}

// Squarefree test for a bivariate polynomial over Q. Splits off the
// y-content, then decides gcd(p, dp/dx) = 1 by evaluating at enough sample
// lines y = y0 with nonvanishing leading coefficient: a repeated factor
// forces every specialization to have a repeated root, while a squarefree
// primitive polynomial has at most deg(disc) bad lines.
inline bool is_squarefree(const Poly2<Rat>& p) {
    if (p.is_zero()) return false;
    if (p.is_constant()) return true;
    if (p.deg_x() == 0) {
        Poly1<Rat> u = p.at_x0();
        auto sq = squarefree_decomposition(u);
        for (auto& [m, f] : sq)
            if (m > 1) return false;
        return true;
    }
    if (p.deg_y() == 0) {
        Poly1<Rat> u = p.at_y0();
        for (auto& [m, f] : squarefree_decomposition(u))
            if (m > 1) return false;
        return true;
    }
    // content in y: gcd of x-coefficient slices
    int dx = p.deg_x();
    std::vector<Poly1<Rat>> slice(dx + 1);
    for (auto& [e, v] : p.t) {
        auto& s = slice[e.a];
        if ((int)s.c.size() <= e.b) s.c.resize(e.b + 1, Rat(0));
        s.c[e.b] += v;
    }
    for (auto& s : slice) s.trim();
    Poly1<Rat> content;
    bool first = true;
    for (auto& s : slice) {
        if (s.is_zero()) continue;
        content = first ? s : gcd(content, s);
        first = false;
    }
    if (content.degree() > 0) {
        for (auto& [m, f] : squarefree_decomposition(content))
            if (m > 1) return false;
    }
    // leading x-coefficient as a polynomial in y
    Poly1<Rat> lcy = slice[dx];
    int degy = p.deg_y();
    long bound = (long)(2 * dx - 1) * (long)degy + (long)lcy.degree() + 2;
    long found = 0;
    for (long y0 = 0; found <= bound + 1; ++y0) {
        Rat yv((long)y0);
        if (lcy.eval(yv) == 0) continue;
        ++found;
        // specialize
        Poly1<Rat> u;
        u.c.assign(dx + 1, Rat(0));
        for (int i = 0; i <= dx; ++i) u.c[i] = slice[i].eval(yv);
        u.trim();
        Poly1<Rat> du = u.derivative();
        if (du.is_zero()) continue;
        if (gcd(u, du).degree() == 0) return true;  // squarefree specialization found
    }
    return false;
}

}  // namespace adecover
