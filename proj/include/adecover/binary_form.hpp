#pragma once

// Homogeneous binary forms over Q and the gcd / squarefree machinery on
// them. Bivariate computations reduce to univariate ones by dehomogenizing
// at x2 = 1 and carrying the x2-power (the root at infinity (1:0))
// separately, so a form of degree n always accounts for exactly n roots
// on P^1 with multiplicity.

#include "adecover/poly.hpp"

#include <stdexcept>
#include <vector>

namespace adecover {

template <class K = Rat>
struct BinaryForm {
    int n = 0;        // total degree
    Poly2<K> p;       // homogeneous of degree n, nonzero

    BinaryForm() = default;
    BinaryForm(int deg, Poly2<K> poly) : n(deg), p(std::move(poly)) {
        if (p.is_zero()) throw std::domain_error("BinaryForm: zero form");
        if (!p.is_homogeneous() || p.total_degree() != n)
            throw std::domain_error("BinaryForm: not homogeneous of the stated degree");
    }
    static BinaryForm of(const Poly2<K>& poly) {
        if (poly.is_zero()) throw std::domain_error("BinaryForm: zero form");
        return BinaryForm(poly.total_degree(), poly);
    }

    // Multiplicity of the x2-factor, i.e. of the root at (1:0).
    int infinity_multiplicity() const {
        int m = n;
        for (auto& [e, v] : p.t) m = std::min(m, e.b);
        return m;
    }
    Poly1<K> dehom() const { return p.dehomogenize_y(); }

    friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.n == b.n && a.p == b.p; }
};

// gcd of polynomials in the module contract: univariate, or bivariate
// homogeneous. Result is normalized with leading coefficient 1 (graded-lex).
template <class K>
Poly2<K> poly_gcd(const Poly2<K>& a, const Poly2<K>& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("poly_gcd(0, 0) undefined");
    if (a.is_zero()) return (K(1) / b.t.rbegin()->second) * b;
    if (b.is_zero()) return (K(1) / a.t.rbegin()->second) * a;
    if (!a.is_homogeneous() || !b.is_homogeneous())
        throw std::domain_error("poly_gcd: bivariate inputs must be homogeneous");
    int ea = [&] { int m = a.total_degree(); for (auto& [e, v] : a.t) m = std::min(m, e.b); return m; }();
    int eb = [&] { int m = b.total_degree(); for (auto& [e, v] : b.t) m = std::min(m, e.b); return m; }();
    Poly1<K> ua = a.dehomogenize_y();
    Poly1<K> ub = b.dehomogenize_y();
    Poly1<K> g = gcd(ua, ub);
    int e = std::min(ea, eb);
    Poly2<K> r = Poly2<K>::homogenize(g, g.degree()) * Poly2<K>::monomial(0, e, K(1));
    return (K(1) / r.t.rbegin()->second) * r;
}

// Squarefree decomposition of a binary form: pairwise-coprime squarefree
// forms with multiplicities; the x2^e factor shows up as the form x2 with
// multiplicity e. Multiplicities ascending except that the infinity factor
// comes last.
template <class K>
std::vector<std::pair<int, BinaryForm<K>>> squarefree_decomposition(const BinaryForm<K>& f) {
    std::vector<std::pair<int, BinaryForm<K>>> out;
    Poly1<K> u = f.dehom();
    if (u.degree() >= 1)
        for (auto& [m, g] : squarefree_decomposition(u))
            out.push_back({m, BinaryForm<K>(g.degree(), Poly2<K>::homogenize(g, g.degree()))});
    int e = f.infinity_multiplicity();
    if (e > 0) out.push_back({e, BinaryForm<K>(1, Poly2<K>::var_y())});
    return out;
}

// Root-multiplicity profile of a form of degree n: one part per P^1 root.
// A squarefree factor of degree d with multiplicity m contributes d parts
// equal to m; the point at infinity contributes its own part.
template <class K>
std::vector<int> multiplicity_profile(const BinaryForm<K>& f) {
    std::vector<int> parts;
    for (auto& [m, g] : squarefree_decomposition(f)) {
        int d = g.n;
        for (int i = 0; i < d; ++i) parts.push_back(m);
    }
    int sum = 0;
    for (int x : parts) sum += x;
    if (sum != f.n) throw std::logic_error("multiplicity profile does not sum to the degree");
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

}  // namespace adecover
