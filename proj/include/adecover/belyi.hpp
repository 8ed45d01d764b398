#pragma once

// Rational Belyi pairs in both representations: a permutation triple
// (s0, s1, sinf) with s0*s1*sinf = id generating a transitive group, or a
// pair of coprime independent binary forms (h1 : h2). The passport is the
// triple of cycle types over 0, 1, infinity; Riemann-Hurwitz for genus 0
// reads n + 2 = k0 + k1 + kinf.

#include "adecover/binary_form.hpp"
#include "adecover/perm.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace adecover {

struct Passport {
    int n = 0;
    CycleType c0, c1, cinf;

    bool two_point_branched() const { return c0.all_ones() || c1.all_ones() || cinf.all_ones(); }
    // Branch points among {0, 1, inf}: a slot is unbranched iff all-ones.
    std::vector<int> branch_set() const {  // 0, 1, 2 encode 0, 1, inf
        std::vector<int> b;
        if (!c0.all_ones()) b.push_back(0);
        if (!c1.all_ones()) b.push_back(1);
        if (!cinf.all_ones()) b.push_back(2);
        return b;
    }
};

struct MalformedPassport : std::domain_error {
    using std::domain_error::domain_error;
};
struct NotGenusZero : std::domain_error {
    using std::domain_error::domain_error;
};

inline bool check_riemann_hurwitz(const Passport& p) {
    if (p.c0.total() != p.n || p.c1.total() != p.n || p.cinf.total() != p.n)
        throw MalformedPassport("cycle type totals disagree");
    return p.n + 2 == p.c0.count() + p.c1.count() + p.cinf.count();
}

struct PermTriple {
    Permutation s0, s1, sinf;

    PermTriple(Permutation a, Permutation b, Permutation c)
        : s0(std::move(a)), s1(std::move(b)), sinf(std::move(c)) {
        if (s0.degree() != s1.degree() || s1.degree() != sinf.degree())
            throw std::domain_error("PermTriple: degree mismatch");
        if (!(s0 * s1 * sinf).is_identity())
            throw std::domain_error("PermTriple: product is not the identity");
        if (!is_transitive({s0, s1}, s0.degree()))
            throw std::domain_error("PermTriple: monodromy group is not transitive");
    }
    static PermTriple from_two(const Permutation& a, const Permutation& b) {
        return PermTriple(a, b, (a * b).inverse());
    }
    int degree() const { return s0.degree(); }
};

inline Passport passport_of_triple(const PermTriple& t) {
    Passport p;
    p.n = t.degree();
    p.c0 = cycle_type(t.s0);
    p.c1 = cycle_type(t.s1);
    p.cinf = cycle_type(t.sinf);
    if (!check_riemann_hurwitz(p))
        throw NotGenusZero("triple has positive genus: " + p.c0.str() + p.c1.str() + p.cinf.str());
    return p;
}

// ---------------------------------------------------------------------------
// Form representation
// ---------------------------------------------------------------------------

template <class K = Rat>
struct FormPairT {
    BinaryForm<K> h1, h2;

    FormPairT(BinaryForm<K> a, BinaryForm<K> b) : h1(std::move(a)), h2(std::move(b)) {
        if (h1.n != h2.n || h1.n < 1) throw std::domain_error("FormPair: degrees must match and be >= 1");
        Poly2<K> g = poly_gcd(h1.p, h2.p);
        if (!g.is_constant()) throw std::domain_error("FormPair: forms are not coprime");
        // linear independence: h2 is not a scalar multiple of h1
        auto lt = h1.p.t.begin();
        K c2 = h2.p.coeff(lt->first.a, lt->first.b);
        if ((h2.p - (c2 / lt->second) * h1.p).is_zero())
            throw std::domain_error("FormPair: forms are linearly dependent");
    }
    int degree() const { return h1.n; }
};

using FormPair = FormPairT<Rat>;

template <class K>
BinaryForm<K> jacobian_form(const FormPairT<K>& f) {
    Poly2<K> j = f.h1.p.dx() * f.h2.p.dy() - f.h1.p.dy() * f.h2.p.dx();
    if (j.is_zero()) throw std::domain_error("jacobian is zero (dependent forms)");
    return BinaryForm<K>(2 * f.degree() - 2, j);
}

// Radical of a binary form, as a form.
template <class K>
Poly2<K> form_radical(const BinaryForm<K>& f) {
    Poly2<K> r(K(1));
    for (auto& [m, g] : squarefree_decomposition(f)) r = r * g.p;
    return r;
}

// Witness for a failed Belyi test: a squarefree factor of J_f none of whose
// roots is a root of h1*h2*(h1-h2).
template <class K>
std::optional<Poly2<K>> non_belyi_witness(const FormPairT<K>& f) {
    BinaryForm<K> j = jacobian_form(f);
    Poly2<K> prod = f.h1.p * f.h2.p * (f.h1.p - f.h2.p);
    // compare radicals via the dehomogenized polynomials plus infinity bookkeeping
    Poly1<K> rj = radical(j.dehom());
    Poly1<K> rp = radical(BinaryForm<K>::of(prod).dehom());
    Poly1<K> g = gcd(rj, rp);
    Poly1<K> bad = divmod(rj, g).first;
    bool inf_bad = j.infinity_multiplicity() > 0 && BinaryForm<K>::of(prod).infinity_multiplicity() == 0;
    if (bad.degree() <= 0 && !inf_bad) return std::nullopt;
    Poly2<K> w = Poly2<K>::homogenize(bad, std::max(bad.degree(), 0));
    if (inf_bad) w = w * Poly2<K>::var_y();
    return w;
}

template <class K>
bool is_belyi(const FormPairT<K>& f) {
    return !non_belyi_witness(f).has_value();
}

struct NotBelyi : std::domain_error {
    std::string witness;
    NotBelyi(const std::string& msg, std::string w) : std::domain_error(msg), witness(std::move(w)) {}
};

// c0 from the multiplicity profile of h1, cinf from h2, c1 from h1 - h2.
template <class K>
Passport passport_of_forms(const FormPairT<K>& f) {
    auto w = non_belyi_witness(f);
    if (w)
        throw NotBelyi("pair is not Belyi: extra critical value on " + w->str(), w->str());
    Passport p;
    p.n = f.degree();
    p.c0 = CycleType(multiplicity_profile(f.h1));
    p.cinf = CycleType(multiplicity_profile(f.h2));
    p.c1 = CycleType(multiplicity_profile(BinaryForm<K>(f.degree(), f.h1.p - f.h2.p)));
    if (!check_riemann_hurwitz(p)) throw NotGenusZero("form pair passport violates Riemann-Hurwitz");
    return p;
}

}  // namespace adecover
