#pragma once

// The decision layer: ADE typing of Belyi passports, contractibility counts,
// the catalog of covers over two-point-branched pairs, the three-lines
// constructor with its beta computation, normal-form verification by exact
// Jacobian factoring, and the fiber description combining all of it.

#include "adecover/belyi.hpp"
#include "adecover/pullback.hpp"
#include "adecover/quad_field.hpp"
#include "adecover/resolution.hpp"

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace adecover::cls {

using res::AdeLabel;

// ---------------------------------------------------------------------------
// ADE typing of a passport
// ---------------------------------------------------------------------------

struct AssignmentResult {
    std::array<int, 3> src;  // target slot i takes cycle type src[i] (0=c0, 1=c1, 2=cinf)
    bool ok = false;
    int r1 = 0, r2 = 0;
};

struct TypeReport {
    AdeLabel label;
    std::vector<AssignmentResult> assignments;
    bool typed = false;
};

namespace detail {

// counts the parts of c violating pred; slack parts must satisfy `slack`
// when given. ok iff violations <= cap.
template <class Pred, class Slack>
std::optional<int> slack_count(const CycleType& c, Pred good, Slack slack_ok, int cap) {
    int r = 0;
    for (int x : c.parts)
        if (!good(x)) {
            if (!slack_ok(x)) return std::nullopt;
            ++r;
        }
    if (r > cap) return std::nullopt;
    return r;
}

}  // namespace detail

inline AssignmentResult check_type_clause(const AdeLabel& T, const CycleType& c1,
                                          const CycleType& c2, const CycleType& c3) {
    AssignmentResult res;
    auto any = [](int) { return true; };
    int n = c1.total();
    (void)c3;
    if (T.fam == 'A' && T.n == 0) {
        res.ok = n == 1;
        return res;
    }
    if (T.fam == 'A' && T.n == 1) {
        // two-point-branched pairs only: some slot must be trivial
        res.ok = c1.all_ones() || c2.all_ones() || c3.all_ones();
        return res;
    }
    if (T.fam == 'D' && T.n == 4) {
        res.ok = true;
        return res;
    }
    if (T.fam == 'A' && T.n % 2 == 1) {
        int k = (T.n - 1) / 2;  // k >= 1
        auto r1 = detail::slack_count(
            c1, [&](int x) { return x == k + 1; }, [&](int x) { return (k + 1) % x == 0; }, 2);
        if (r1) {
            res.ok = true;
            res.r1 = *r1;
        }
        return res;
    }
    if (T.fam == 'A') {
        int k = T.n / 2;  // k >= 1
        auto r1 = detail::slack_count(
            c1, [&](int x) { return x == 2 * k + 1; }, [&](int x) { return (2 * k + 1) % x == 0; }, 2);
        auto r2 = detail::slack_count(
            c2, [&](int x) { return x == 2; }, [&](int x) { return x == 1; }, 2);
        if (r1 && r2 && *r1 + *r2 <= 2) {
            res.ok = true;
            res.r1 = *r1;
            res.r2 = *r2;
        }
        return res;
    }
    if (T.fam == 'D' && T.n % 2 == 0) {
        int k = (T.n - 2) / 2;  // k >= 2
        auto r1 = detail::slack_count(c1, [&](int x) { return x % k == 0; }, any, 2);
        if (r1) {
            res.ok = true;
            res.r1 = *r1;
        }
        return res;
    }
    if (T.fam == 'D') {
        int k = (T.n - 3) / 2;  // k >= 1
        auto r1 = detail::slack_count(c1, [&](int x) { return x % (2 * k + 1) == 0; }, any, 2);
        auto r2 = detail::slack_count(
            c2, [&](int x) { return x == 2; }, [&](int x) { return x == 1; }, 2);
        if (r1 && r2 && *r1 + *r2 <= 2) {
            res.ok = true;
            res.r1 = *r1;
            res.r2 = *r2;
        }
        return res;
    }
    if (T.fam == 'E' && T.n == 6) {
        auto r1 = detail::slack_count(
            c1, [&](int x) { return x == 4; }, [&](int x) { return x == 1 || x == 2; }, 2);
        auto r2 = detail::slack_count(
            c2, [&](int x) { return x == 3; }, [&](int x) { return x == 1; }, 2);
        if (r1 && r2 && *r1 + *r2 <= 2) {
            res.ok = true;
            res.r1 = *r1;
            res.r2 = *r2;
        }
        return res;
    }
    if (T.fam == 'E' && T.n == 7) {
        auto r1 = detail::slack_count(c1, [&](int x) { return x % 2 == 0; }, any, 2);
        auto r2 = detail::slack_count(
            c2, [&](int x) { return x == 3; }, [&](int x) { return x == 1; }, 2);
        if (r1 && r2 && *r1 + *r2 <= 2) {
            res.ok = true;
            res.r1 = *r1;
            res.r2 = *r2;
        }
        return res;
    }
    if (T.fam == 'E' && T.n == 8) {
        auto r1 = detail::slack_count(
            c1, [&](int x) { return x == 3; }, [&](int x) { return x == 1; }, 2);
        auto r2 = detail::slack_count(
            c2, [&](int x) { return x == 5; }, [&](int x) { return x == 1; }, 2);
        if (r1 && r2 && *r1 + *r2 <= 2) {
            res.ok = true;
            res.r1 = *r1;
            res.r2 = *r2;
        }
        return res;
    }
    throw std::domain_error("unknown ADE label");
}

// Evaluates the typing clause on all 6 arrangements of the passport slots.
inline TypeReport type_check(const Passport& p, const AdeLabel& T) {
    if (!check_riemann_hurwitz(p)) throw NotGenusZero("passport fails the degree formula");
    TypeReport rep;
    rep.label = T;
    const std::array<const CycleType*, 3> slots{&p.c0, &p.c1, &p.cinf};
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end());
    do {
        AssignmentResult r = check_type_clause(T, *slots[idx[0]], *slots[idx[1]], *slots[idx[2]]);
        r.src = idx;
        rep.assignments.push_back(r);
        rep.typed = rep.typed || r.ok;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return rep;
}

// ---------------------------------------------------------------------------
// Contractibility counts over the trails
// ---------------------------------------------------------------------------

struct ContractibilityCounts {
    std::array<int, 3> r{0, 0, 0};
    bool ok = false;
    std::array<long, 3> trail_orders{1, 1, 1};
};

// assignment[j] = which cycle type (0=c0, 1=c1, 2=cinf) sits over trail j.
inline ContractibilityCounts contractibility_counts(const res::Resolution& r, const Passport& p,
                                                    const std::array<int, 3>& assignment) {
    if (r.trails.size() != 3) throw std::domain_error("resolution has no trail decomposition");
    ContractibilityCounts out;
    const std::array<const CycleType*, 3> slots{&p.c0, &p.c1, &p.cinf};
    bool hard_ok = true;
    int total = 0;
    for (int j = 0; j < 3; ++j) {
        const res::Trail& t = r.trails[j];
        const CycleType& c = *slots[assignment[j]];
        if (!t.exceptional) continue;
        long ord = hj::chain_group(hj::WeightedChain(t.exc_weights)).order;
        out.trail_orders[j] = ord;
        int rj = 0;
        for (int part : c.parts) {
            bool contractible = t.completely_exceptional ? (part == ord) : (part % ord == 0);
            if (!contractible) ++rj;
            if (t.completely_exceptional && ord % part != 0) hard_ok = false;
        }
        out.r[j] = rj;
        total += rj;
    }
    out.ok = hard_ok && total <= 2;
    return out;
}

// ---------------------------------------------------------------------------
// Cover formulas
// ---------------------------------------------------------------------------

struct FTerm {
    Rat c;             // rational coefficient
    int omega_pow = 0;  // power of the root-of-unity symbol
    int z = 0, w = 0;   // exponents
};

struct FExpr {
    std::vector<FTerm> base;
    int pow = 1;
};

struct CoverFormula {
    FExpr u, v;
    int omega_modulus = 0;  // omega = exp(2 pi i j / modulus); 0 = no omega
    int omega_j = 0;
    std::string family;
    std::map<std::string, long> params;
    long degree = 0;

    bool needs_omega() const {
        if (omega_modulus == 0) return false;
        for (auto& e : {u, v})
            for (auto& t : e.base)
                if (t.omega_pow % omega_modulus != 0) return true;
        return false;
    }
    // true when every omega power that appears is rational (+-1)
    bool omega_rational() const {
        if (omega_modulus == 0) return true;
        for (auto& e : {u, v})
            for (auto& t : e.base)
                if ((2 * t.omega_pow * omega_j) % omega_modulus != 0) return false;
        return true;
    }
};

template <class K>
Poly2<K> expand_expr(const FExpr& e, const K& omega) {
    Poly2<K> base;
    for (auto& t : e.base) {
        K c(t.c);
        K om(1);
        for (int i = 0; i < t.omega_pow; ++i) om = om * omega;
        base = base + Poly2<K>::monomial(t.z, t.w, c * om);
    }
    return base.pow(e.pow);
}

inline std::string expr_str(const FExpr& e, int omega_j, int omega_modulus) {
    std::string b;
    for (size_t i = 0; i < e.base.size(); ++i) {
        const FTerm& t = e.base[i];
        std::string term;
        Rat c = t.c;
        if (i && c >= 0) b += " + ";
        if (i && c < 0) {
            b += " - ";
            c = -c;
        }
        if (c != 1 || (t.z == 0 && t.w == 0 && t.omega_pow == 0)) term += c.get_str();
        if (t.omega_pow) {
            if (!term.empty()) term += "*";
            term += "w" + std::to_string(mod_long(t.omega_pow * omega_j, omega_modulus)) + "_";
            term += std::to_string(omega_modulus);
        }
        if (t.z) {
            if (!term.empty()) term += "*";
            term += "z" + (t.z > 1 ? "^" + std::to_string(t.z) : "");
        }
        if (t.w) {
            if (!term.empty()) term += "*";
            term += "w" + (t.w > 1 ? "^" + std::to_string(t.w) : "");
        }
        b += term;
    }
    if (e.pow == 1) return b;
    return "(" + b + ")^" + std::to_string(e.pow);
}

// ---------------------------------------------------------------------------
// Catalog of covers with two-point-branched image
// ---------------------------------------------------------------------------

struct CatalogError : std::domain_error {
    using std::domain_error::domain_error;
};
struct NoTwoPointFamily : CatalogError {
    using CatalogError::CatalogError;
};

struct CatalogParams {
    long n = 0, m1 = 0, m2 = 0, k = 0, k1 = 0, k2 = 0, n1 = 0, j = 0;
    int family = 0;  // 1-based index within the label, 0 = only family
};

namespace detail {

inline FTerm tz(long e) { return FTerm{Rat(1), 0, (int)e, 0}; }
inline FTerm tw(long e) { return FTerm{Rat(1), 0, 0, (int)e}; }
inline FTerm neg(FTerm t) {
    t.c = -t.c;
    return t;
}
inline FTerm with_omega(FTerm t, int p) {
    t.omega_pow = p;
    return t;
}
inline FExpr one_term(FTerm t, int pow = 1) { return FExpr{{t}, pow}; }
inline FExpr two_term(FTerm a, FTerm b, int pow = 1) { return FExpr{{a, b}, pow}; }

inline void require(bool cond, const std::string& what) {
    if (!cond) throw CatalogError("side condition violated: " + what);
}

}  // namespace detail

// The exact formula list for covers whose image pair is branched in at most
// two points, one family per shape. Families per label: A-odd has 3 (use
// params.family to pick), D-even has 3, the three-lines label has 2.
// Side conditions follow the classification, including the occurrence
// conditions that make the stated branch type correct.
inline CoverFormula two_point_catalog(const AdeLabel& T, const CatalogParams& P) {
    using namespace detail;
    CoverFormula f;
    auto set = [&](const char* key, long v) { f.params[key] = v; };
    if (T.fam == 'A' && T.n == 0) {
        long m = P.m1 ? P.m1 : P.n;
        require(m >= 1, "m >= 1");
        f.family = "A0";
        f.u = one_term(tz(m));
        f.v = one_term(tw(1));
        f.degree = m;
        set("m", m);
        return f;
    }
    if (T.fam == 'A' && T.n == 1) {
        require(P.n >= 1 && P.m1 >= P.m2 && P.m2 >= 1, "n >= 1, m1 >= m2 >= 1");
        require(gcd_long(P.m1, P.m2) == 1, "gcd(m1, m2) = 1");
        require(P.n * P.m2 >= 2, "n*m2 >= 2 (otherwise the branch germ degenerates)");
        f.family = "A1";
        f.u = one_term(tz(P.n * P.m1));
        f.v = one_term(tw(P.n * P.m2));
        f.degree = P.n * P.n * P.m1 * P.m2;
        set("n", P.n);
        set("m1", P.m1);
        set("m2", P.m2);
        return f;
    }
    if (T.fam == 'A' && T.n % 2 == 1 && T.n >= 3) {
        long k = (T.n - 1) / 2;
        int fam = P.family;
        if (!fam) fam = (P.j > 0) ? 3 : ((P.n >= 2 && P.m2 >= 2 && P.n * P.m2 == k + 1) ? 1 : 2);
        if (fam == 1) {
            // u = (z^m + w^m0)^n, v = w with k+1 = n m0; here m = m1, m0 = m2
            require(P.n > 1 && P.m1 > 1 && P.m2 > 1, "n, m, m0 > 1");
            require(P.n * P.m2 == k + 1, "k + 1 = n*m0");
            require(gcd_long(P.m1, P.m2) == 1, "gcd(m, m0) = 1");
            f.family = "A2k+1.zw";
            f.u = two_term(tz(P.m1), tw(P.m2), (int)P.n);
            f.v = one_term(tw(1));
            f.degree = P.n * P.m1;
        } else if (fam == 2) {
            require(P.m1 >= 1 && P.n > 1 && P.m2 > 1, "m1 >= 1, n, m2 > 1");
            require(gcd_long(P.m1, P.m2) == 1, "gcd(m1, m2) = 1");
            require(P.n == k + 1, "k + 1 = n for this family");
            f.family = "A2k+1.power";
            f.u = one_term(tz(P.n * P.m1));
            f.v = two_term(tz(P.m1), tw(P.m2));
            f.degree = P.n * P.m1 * P.m2;
        } else {
            require(P.n > 1 && P.m1 > 1 && P.m2 > 1, "n, m1, m2 > 1");
            require(gcd_long(P.m1, P.m2) == 1, "gcd(m1, m2) = 1");
            require(P.j >= 1 && P.j <= P.n - 1, "1 <= j <= n-1");
            require(P.n == k + 1, "k + 1 = n for this family");
            f.family = "A2k+1.omega";
            f.u = two_term(with_omega(tz(P.m1), 1), neg(tw(P.m2)), (int)P.n);
            f.v = two_term(tz(P.m1), neg(tw(P.m2)));
            f.omega_modulus = (int)P.n;
            f.omega_j = (int)P.j;
            f.degree = P.n * P.m1 * P.m2;
        }
        set("n", P.n);
        set("m1", P.m1);
        set("m2", P.m2);
        if (P.j) set("j", P.j);
        return f;
    }
    if (T.fam == 'A') throw NoTwoPointFamily("even A labels have no two-point-branched covers");
    if (T.fam == 'D' && T.n == 4) {
        int fam = P.family ? P.family : (P.j > 0 ? 2 : 1);
        require(P.n >= 2 && P.m1 >= 1 && P.m2 >= 1, "n >= 2, m1, m2 >= 1");
        require(gcd_long(P.m1, P.m2) == 1, "gcd(m1, m2) = 1");
        if (fam == 1) {
            require(P.m2 >= 2, "m2 >= 2 (otherwise the branch germ is a node)");
            f.family = "D4.power";
            f.u = one_term(tz(P.m1 * P.n));
            f.v = two_term(tz(P.m1), tw(P.m2), (int)P.n);
        } else {
            require(P.j >= 1 && P.j <= P.n - 1, "1 <= j <= n-1");
            require(P.m1 * P.m2 >= 2, "(m1, m2) != (1, 1) (otherwise the branch germ is a node)");
            f.family = "D4.omega";
            f.u = two_term(tz(P.m1), neg(tw(P.m2)), (int)P.n);
            f.v = two_term(tz(P.m1), with_omega(neg(tw(P.m2)), 1), (int)P.n);
            f.omega_modulus = (int)P.n;
            f.omega_j = (int)P.j;
        }
        f.degree = P.n * P.n * P.m1 * P.m2;
        set("n", P.n);
        set("m1", P.m1);
        set("m2", P.m2);
        if (P.j) set("j", P.j);
        return f;
    }
    if (T.fam == 'D' && T.n % 2 == 1) {
        long k = (T.n - 3) / 2;
        require(k >= 1, "D label >= 5");
        require(P.n == 0 || P.n == 2, "the image degree is 2 for odd D labels");
        require(P.m1 >= 1 && P.m2 > 1, "m1 >= 1, m2 > 1");
        require(gcd_long(P.m1, P.m2) == 1, "gcd(m1, m2) = 1");
        require(gcd_long(2 * k + 1, P.m2) == 1, "gcd(2k+1, m2) = 1");
        f.family = "D2k+3";
        f.u = one_term(tz(2 * P.m1));
        f.v = two_term(tz(P.m1 * (2 * k + 1)), tw(P.m2));
        f.degree = 2 * P.m1 * P.m2;
        set("k", k);
        set("m1", P.m1);
        set("m2", P.m2);
        return f;
    }
    if (T.fam == 'D') {
        long k = (T.n - 2) / 2;
        require(k >= 2, "D-even label >= 6");
        int fam = P.family ? P.family : 1;
        require(P.m1 >= 1 && P.m2 >= 1 && gcd_long(P.m1, P.m2) == 1, "gcd(m1, m2) = 1");
        if (fam == 1) {
            require(P.k1 >= 1 && P.k2 >= 1 && P.k1 * P.k2 == k, "k = k1*k2");
            require(P.n1 >= 1, "n1 >= 1");
            long n = P.n1 * P.k1;
            require(n >= 2, "n = n1*k1 >= 2");
            require(gcd_long(n * P.m2, P.k2) == 1, "gcd(n*m2, k2) = 1");
            require(P.m2 >= 2, "m2 >= 2 (third branch line must appear)");
            require(P.n1 * P.m1 >= 2, "n1*m1 >= 2 (first branch line must appear)");
            f.family = "D2k+2.tower";
            f.u = one_term(tz(P.n1 * P.m1));
            f.v = two_term(tz(P.m1 * P.k2), tw(P.m2), (int)n);
            f.degree = n * P.n1 * P.m1 * P.m2;
            set("n1", P.n1);
            set("k1", P.k1);
            set("k2", P.k2);
        } else if (fam == 2) {
            require(P.n1 >= 2, "n1 >= 2 (first branch line must appear)");
            long n = P.n1 * k;
            require(P.m2 >= 2, "m2 >= 2 (third branch line must appear)");
            f.family = "D2k+2.section";
            f.u = two_term(tz(P.m1), neg(tw(P.m2)), (int)P.n1);
            f.v = one_term(tz(P.m1 * n));
            f.degree = n * P.n1 * P.m1 * P.m2;
            set("n1", P.n1);
        } else {
            require(P.n1 >= 2, "n1 >= 2 (first branch line must appear)");
            long n = P.n1 * k;
            require(P.j >= 1 && P.j <= n - 1, "1 <= j <= n-1");
            require(P.m1 * P.m2 >= 2, "(m1, m2) != (1, 1) (third branch line must appear)");
            f.family = "D2k+2.omega";
            f.u = two_term(tz(P.m1), neg(tw(P.m2)), (int)P.n1);
            f.v = two_term(tz(P.m1), with_omega(neg(tw(P.m2)), 1), (int)n);
            f.omega_modulus = (int)n;
            f.omega_j = (int)P.j;
            f.degree = n * P.n1 * P.m1 * P.m2;
            set("n1", P.n1);
            if (P.j) set("j", P.j);
        }
        set("k", k);
        set("m1", P.m1);
        set("m2", P.m2);
        return f;
    }
    if (T.fam == 'E' && T.n == 7) {
        require(P.m1 >= 1 && P.m2 > 1, "m1 >= 1, m2 > 1");
        require(gcd_long(P.m1, P.m2) == 1, "gcd(m1, m2) = 1");
        f.family = "E7";
        f.u = one_term(tz(3 * P.m1));
        f.v = two_term(tz(2 * P.m1), tw(P.m2));
        f.degree = 3 * P.m1 * P.m2;
        set("m1", P.m1);
        set("m2", P.m2);
        return f;
    }
    throw NoTwoPointFamily("label " + T.str() + " has no two-point-branched covers");
}


// ---------------------------------------------------------------------------
// The forms construction and beta
// ---------------------------------------------------------------------------

// Value of the pair map at a point, classified against {0, 1, inf}.
enum class PointValue { Zero, One, Infinity, Other };

inline PointValue pair_value(const FormPair& f, const Rat& x1, const Rat& x2, std::string* detail = nullptr) {
    Rat a = f.h1.p.eval(x1, x2), b = f.h2.p.eval(x1, x2);
    if (detail) *detail = "(" + a.get_str() + ":" + b.get_str() + ")";
    if (a == 0 && b == 0) throw std::logic_error("coprime forms vanish simultaneously");
    if (a == 0) return PointValue::Zero;
    if (b == 0) return PointValue::Infinity;
    if (a == b) return PointValue::One;
    return PointValue::Other;
}

struct D4Construction {
    Poly2<Rat> u, v;       // the substituted pair
    long degree = 0;
    bool in_rigid_class = true;   // branch germ has the three-lines type
    std::string note;             // why not, when in_rigid_class is false
};

struct PointConditionError : std::domain_error {
    using std::domain_error::domain_error;
};

// u = h1(z^m1, w^m2), v = h2(z^m1, w^m2). The point condition
// {f(p1), f(p2)} u B_f = {0, 1, inf} is what keeps the branch curve equal to
// the three lines when the extra cyclic cover is nontrivial; for the
// two-point-branched case the first axis must additionally sit over 1.
inline D4Construction d4_construct(const FormPair& f, long m1, long m2) {
    if (m1 < 1 || m2 < 1 || gcd_long(m1, m2) != 1)
        throw std::domain_error("need coprime positive m1, m2");
    Passport p = passport_of_forms(f);
    long n = f.degree();

    D4Construction out;
    std::string v1s, v2s;
    PointValue v1 = pair_value(f, Rat(0), Rat(1), &v1s);
    PointValue v2 = pair_value(f, Rat(1), Rat(0), &v2s);
    if (m1 > 1 || m2 > 1) {
        // the branched axes must land in {0, 1, inf} and together with B_f
        // exhaust it
        std::set<int> covered;
        for (int b : p.branch_set()) covered.insert(b);
        auto fold = [&](PointValue v, const std::string& vs, bool branched) {
            if (v == PointValue::Other) {
                if (branched)
                    throw PointConditionError("axis image " + vs + " is not in {0, 1, inf}");
                return;
            }
            covered.insert(v == PointValue::Zero ? 0 : v == PointValue::One ? 1 : 2);
        };
        fold(v1, v1s, m1 > 1);
        fold(v2, v2s, m2 > 1);
        if (covered.size() != 3)
            throw PointConditionError("point condition fails: {f(p1), f(p2)} u B_f misses a point of {0, 1, inf}");
    }
    if (p.two_point_branched()) {
        if (m1 == 1 && m2 == 1) {
            out.in_rigid_class = false;
            out.note = "two-point-branched pair: the plain forms cover is branched in a node";
        } else if (!(m1 > 1 && v1 == PointValue::One)) {
            throw PointConditionError(
                "two-point-branched pair requires m1 > 1 and f(p1) = 1; f(p1) = " + v1s);
        }
    }
    Poly2<Rat> zs = Poly2<Rat>::monomial((int)m1, 0, Rat(1));
    Poly2<Rat> ws = Poly2<Rat>::monomial(0, (int)m2, Rat(1));
    out.u = f.h1.p.subst(zs, ws);
    out.v = f.h2.p.subst(zs, ws);
    out.degree = n * n * m1 * m2;
    return out;
}

struct NotOverCenter : std::domain_error {
    using std::domain_error::domain_error;
};

// The image pair of a cover germ: lowest-degree homogeneous parts of (u, v),
// which must have equal degree and be coprime and independent.
inline FormPair beta_of_cover(const Poly2<Rat>& u, const Poly2<Rat>& v) {
    if (u.is_zero() || v.is_zero()) throw NotOverCenter("zero component");
    Poly2<Rat> h1 = u.lowest_part(), h2 = v.lowest_part();
    if (h1.total_degree() != h2.total_degree())
        throw NotOverCenter("lowest parts have degrees " + std::to_string(h1.total_degree()) +
                            " and " + std::to_string(h2.total_degree()));
    try {
        return FormPair(BinaryForm<Rat>::of(h1), BinaryForm<Rat>::of(h2));
    } catch (const std::domain_error& e) {
        throw NotOverCenter(std::string("lowest parts invalid: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// ADE identification of a resolved germ
// ---------------------------------------------------------------------------

inline std::string graph_signature(const res::Resolution& r) {
    const auto& g = r.graph;
    if (r.trails.empty()) {
        // small configurations: classify by the branch count at the center
        int branches = 0;
        for (auto& v : g.verts)
            if (!v.exceptional) ++branches;
        return "flat:" + std::to_string(branches);
    }
    std::vector<std::string> ts;
    for (auto& t : r.trails) {
        std::string s;
        for (int v : t.verts)
            s += g.verts[v].exceptional ? "e" + std::to_string(g.verts[v].weight) : std::string("b");
        ts.push_back(s);
    }
    std::sort(ts.begin(), ts.end());
    std::string sig = "c" + std::to_string(g.verts[g.center].weight);
    for (auto& s : ts) sig += "|" + s;
    return sig;
}

inline std::optional<AdeLabel> identify_ade(const res::Resolution& r) {
    static std::map<std::string, AdeLabel> cache;
    static int generated_up_to = -1;
    std::string sig = graph_signature(r);
    int bound = 2 * (int)r.graph.verts.size() + 4;
    if (bound > generated_up_to) {
        for (int n = 0; n <= bound; ++n)
            cache.emplace(graph_signature(res::resolve_minimal(res::ade_germ({'A', n}))), AdeLabel{'A', n});
        for (int n = 4; n <= bound + 4; ++n)
            cache.emplace(graph_signature(res::resolve_minimal(res::ade_germ({'D', n}))), AdeLabel{'D', n});
        for (int n = 6; n <= 8; ++n)
            cache.emplace(graph_signature(res::resolve_minimal(res::ade_germ({'E', n}))), AdeLabel{'E', n});
        generated_up_to = bound;
    }
    auto it = cache.find(sig);
    if (it == cache.end()) return std::nullopt;
    return it->second;
}


// ---------------------------------------------------------------------------
// Normal-form verification
// ---------------------------------------------------------------------------

struct VerifiedComponent {
    std::string factor;
    int multiplicity = 0;
    std::string image;  // the branch curve the component maps onto
};

struct VerifyResult {
    bool ok = false;
    std::optional<AdeLabel> label;
    std::optional<Poly2<Rat>> branch_germ;  // product of the branch curves hit
    std::vector<VerifiedComponent> components;
    std::string error;
};

// Branch curves each family claims, as polynomials in (u, v).
inline std::vector<std::pair<std::string, Poly2<Rat>>> claimed_branch_curves(
    const CoverFormula& c) {
    using P = Poly2<Rat>;
    P u = P::var_x(), v = P::var_y();
    std::vector<std::pair<std::string, P>> out;
    auto vpow = [&](long k) { return P::monomial(0, (int)k, Rat(1)); };
    auto upow = [&](long k) { return P::monomial((int)k, 0, Rat(1)); };
    const std::string& f = c.family;
    if (f == "A0") {
        out.push_back({"u", u});
    } else if (f == "A1") {
        out.push_back({"u", u});
        out.push_back({"v", v});
    } else if (f == "A2k+1.zw") {
        long kk = c.params.at("n") * c.params.at("m2");  // k + 1
        out.push_back({"u", u});
        out.push_back({"u - v^" + std::to_string(kk), u - vpow(kk)});
    } else if (f == "A2k+1.power" || f == "A2k+1.omega") {
        long n = c.params.at("n");
        out.push_back({"u", u});
        out.push_back({"u - v^" + std::to_string(n), u - vpow(n)});
    } else if (f == "D2k+3") {
        long k = c.params.at("k");
        out.push_back({"u", u});
        out.push_back({"v^2 - u^" + std::to_string(2 * k + 1), v * v - upow(2 * k + 1)});
    } else if (f.rfind("D2k+2", 0) == 0) {
        long k = c.params.at("k");
        out.push_back({"u", u});
        out.push_back({"v", v});
        out.push_back({"v - u^" + std::to_string(k), v - upow(k)});
    } else if (f.rfind("D4", 0) == 0) {
        out.push_back({"u", u});
        out.push_back({"v", v});
        out.push_back({"u - v", u - v});
    } else if (f == "E7") {
        out.push_back({"u", u});
        out.push_back({"v^3 - u^2", v * v * v - upow(2)});
    } else {
        throw std::domain_error("unknown formula family: " + f);
    }
    return out;
}

namespace detail {

template <class K>
Poly2<K> to_field(const Poly2<Rat>& p) {
    Poly2<K> out;
    for (auto& [e, c] : p.t) out.t[e] = K(c);
    return out;
}

template <class K>
VerifyResult verify_impl(const CoverFormula& c, const K& omega) {
    VerifyResult res;
    Poly2<K> u = expand_expr<K>(c.u, omega);
    Poly2<K> v = expand_expr<K>(c.v, omega);
    Poly2<K> J = u.dx() * v.dy() - u.dy() * v.dx();
    if (J.is_zero()) {
        res.error = "degenerate pair: zero Jacobian";
        return res;
    }
    // structural ramification candidates: the axes and the two bases
    std::vector<std::pair<std::string, Poly2<K>>> cands;
    cands.push_back({"z", Poly2<K>::var_x()});
    cands.push_back({"w", Poly2<K>::var_y()});
    if (c.u.base.size() > 1) cands.push_back({"base(u)", expand_expr<K>(FExpr{c.u.base, 1}, omega)});
    if (c.v.base.size() > 1) cands.push_back({"base(v)", expand_expr<K>(FExpr{c.v.base, 1}, omega)});

    auto claimed = claimed_branch_curves(c);
    std::set<std::string> hit;
    Poly2<K> rem = J;
    for (auto& [name, q] : cands) {
        int mult = 0;
        while (true) {
            auto d = exact_divide(rem, q);
            if (!d) break;
            rem = *d;
            ++mult;
        }
        if (!mult) continue;
        VerifiedComponent comp;
        comp.factor = name;
        comp.multiplicity = mult;
        bool found = false;
        for (auto& [pname, P] : claimed) {
            Poly2<K> img = to_field<K>(P).subst(u, v);
            if (exact_divide(img, q)) {
                comp.image = pname;
                hit.insert(pname);
                found = true;
                break;
            }
        }
        if (!found) {
            res.error = "ramification component " + name + " does not map into the claimed branch curve";
            res.components.push_back(comp);
            return res;
        }
        res.components.push_back(comp);
    }
    if (!rem.is_constant()) {
        res.error = "unaccounted ramification factor remains";
        return res;
    }
    // assemble the branch germ over Q from the curves actually hit
    Poly2<Rat> germ(Rat(1));
    bool nontrivial = false;
    for (auto& [pname, P] : claimed)
        if (hit.count(pname)) {
            germ = germ * P;
            nontrivial = true;
        }
    if (!nontrivial) {
        // unramified cover: only the trivial label fits
        res.ok = c.family == "A0";
        res.label = AdeLabel{'A', 0};
        if (!res.ok) res.error = "cover is unramified but the family claims a singular branch";
        return res;
    }
    res.branch_germ = germ;
    auto resolved = res::resolve_minimal(res::GermCurve(germ));
    res.label = identify_ade(resolved);
    if (!res.label) {
        res.error = "branch germ is not of ADE type";
        return res;
    }
    res.ok = true;
    return res;
}

}  // namespace detail

// omega_j = exp(2 pi i j / m) is a primitive root of reduced modulus
// m / gcd(j, m); only the reduced modulus decides the coefficient field.
inline std::pair<int, long> reduced_omega(int modulus, long j) {
    j = mod_long(j, modulus);
    if (j == 0) return {1, 0};
    long g = gcd_long(j, modulus);
    return {(int)(modulus / g), j / g};
}

inline bool omega_supported(int modulus, long j) {
    int m = reduced_omega(modulus, j).first;
    return m == 1 || m == 2 || m == 3 || m == 4 || m == 6;
}

// Exact verification of a catalog or construction formula: factor the
// Jacobian structurally, check every ramification component maps into a
// claimed branch curve, then resolve the branch germ and identify its type.
// Root-of-unity coefficients are handled in the quadratic cyclotomic
// fields, so reduced moduli 1, 2, 3, 4, 6 are exact.
inline VerifyResult verify_cover(const CoverFormula& c) {
    if (!c.needs_omega()) return detail::verify_impl<Rat>(c, Rat(1));
    auto [m, j] = reduced_omega(c.omega_modulus, c.omega_j);
    if (m == 1) return detail::verify_impl<Rat>(c, Rat(1));
    if (m == 2) return detail::verify_impl<Rat>(c, Rat(-1));
    if (m == 3) return detail::verify_impl<CycQuad<3>>(c, CycQuad<3>::root_pow(j));
    if (m == 4) return detail::verify_impl<CycQuad<4>>(c, CycQuad<4>::root_pow(j));
    if (m == 6) {
        CycQuad<3> w6 = -(CycQuad<3>::root_pow(2));  // primitive 6th root
        CycQuad<3> om(1);
        for (long i = 0; i < j; ++i) om = om * w6;
        return detail::verify_impl<CycQuad<3>>(c, om);
    }
    throw std::domain_error("roots of unity of reduced modulus " + std::to_string(m) +
                            " are outside the exact coefficient fields supported here");
}

// Image passport of a catalog formula through the lowest-degree parts, when
// they satisfy the center conditions (equal degree, coprime, independent).
struct BetaOutcome {
    bool defined = false;
    Passport passport;
    std::string reason;
};

namespace detail {

template <class K>
BetaOutcome catalog_beta_impl(const CoverFormula& c, const K& omega) {
    BetaOutcome out;
    Poly2<K> u = expand_expr<K>(c.u, omega);
    Poly2<K> v = expand_expr<K>(c.v, omega);
    Poly2<K> h1 = u.lowest_part(), h2 = v.lowest_part();
    if (h1.total_degree() != h2.total_degree()) {
        out.reason = "lowest parts have unequal degrees";
        return out;
    }
    try {
        FormPairT<K> f(BinaryForm<K>::of(h1), BinaryForm<K>::of(h2));
        out.passport = passport_of_forms(f);
        out.defined = true;
    } catch (const std::domain_error& e) {
        out.reason = e.what();
    }
    return out;
}

}  // namespace detail

inline BetaOutcome catalog_beta(const CoverFormula& c) {
    if (!c.needs_omega()) return detail::catalog_beta_impl<Rat>(c, Rat(1));
    auto [m, j] = reduced_omega(c.omega_modulus, c.omega_j);
    if (m == 1) return detail::catalog_beta_impl<Rat>(c, Rat(1));
    if (m == 2) return detail::catalog_beta_impl<Rat>(c, Rat(-1));
    if (m == 3) return detail::catalog_beta_impl<CycQuad<3>>(c, CycQuad<3>::root_pow(j));
    if (m == 4) return detail::catalog_beta_impl<CycQuad<4>>(c, CycQuad<4>::root_pow(j));
    if (m == 6) {
        CycQuad<3> w6 = -(CycQuad<3>::root_pow(2));
        CycQuad<3> om(1);
        for (long i = 0; i < j; ++i) om = om * w6;
        return detail::catalog_beta_impl<CycQuad<3>>(c, om);
    }
    throw std::domain_error("unsupported root-of-unity modulus");
}


// ---------------------------------------------------------------------------
// Fiber description
// ---------------------------------------------------------------------------

struct SeriesDescriptor {
    std::string style;   // "S1" or "S2"
    std::string family;  // catalog family tag or "forms"
    std::string formula;
    std::vector<std::string> constraints;
    std::vector<long> exponents;  // loop-class exponents a_j where computed
    std::string components;
};

struct BranchScenario {
    int trail_a = -1, trail_b = -1;
    bool ok = false;
    std::string detail;
    std::vector<long> chain;
    long m0 = 0;
    long central_exponent = 0;
    std::vector<pull::GermAttachment> germs;  // with loop classes on success
};

struct FiberDescription {
    AdeLabel label;
    long n = 0;
    TypeReport type_report;
    bool nonempty = false;
    bool complete = true;
    long m0 = 0;
    long minimal_degree = 0;
    std::string witness;
    std::string note;
    std::vector<BranchScenario> scenarios;
    std::vector<SeriesDescriptor> series;
};

namespace detail {

// loop classes of the surviving germ components of a successful scenario,
// indexed by the germ vertex of the trail they lie over
struct GermClassTable {
    std::map<int, long> cls;  // downstairs germ vertex id -> class of the center preimage

    long over(int vertex_id) const {
        auto it = cls.find(vertex_id);
        return it == cls.end() ? 0 : it->second;
    }
};

inline GermClassTable germ_classes(const BranchScenario& sc) {
    GermClassTable t;
    for (auto& g : sc.germs)
        if (g.down_vertex >= 0) t.cls[g.down_vertex] = g.loop_class;
    return t;
}

// the germ vertex at the outer end of a trail, or -1
inline int trail_germ_vertex(const res::Resolution& r, int trail) {
    if (trail < 0) return -1;
    const auto& t = r.trails[trail];
    int v = t.verts.back();
    return r.graph.verts[v].exceptional ? -1 : v;
}

inline void add_two_point_series(FiberDescription& out, const AdeLabel& T, long n,
                            const res::Resolution* r, const BranchScenario* best) {
    auto add = [&](SeriesDescriptor d) { out.series.push_back(std::move(d)); };
    GermClassTable table;
    int branched_germ = -1, other_branched_germ = -1, unbranched_germ = -1;
    if (r && best) {
        table = germ_classes(*best);
        for (int i = 0; i < (int)r->trails.size(); ++i) {
            int g = trail_germ_vertex(*r, i);
            if (g < 0) continue;
            if (i == best->trail_a || i == best->trail_b)
                (branched_germ < 0 ? branched_germ : other_branched_germ) = g;
            else
                unbranched_germ = g;
        }
    }
    if (T.fam == 'A' && T.n == 0) {
        add({"S1", "A0", "u = z^m, v = w", {"m >= 1"}, {1}, "the smooth branch"});
        return;
    }
    if (T.fam == 'A' && T.n == 1) {
        add({"S2", "A1", "u = z^(n m1), v = w^(n m2)",
             {"gcd(m1, m2) = 1", "m1 >= m2 >= 1"}, {1, 1}, "the two branch lines"});
        return;
    }
    if (T.fam == 'A' && T.n % 2 == 1) {
        long k = (T.n - 1) / 2;
        if (n > 1 && (k + 1) % n == 0) {
            long m0p = (k + 1) / n;
            if (m0p > 1) {
                long a = unbranched_germ >= 0 ? table.over(unbranched_germ) : m0p;
                add({"S1", "A2k+1.zw", "u = (z^m + w^" + std::to_string(m0p) + ")^n, v = w",
                     {"gcd(m, " + std::to_string(a) + ") = 1", "m > 1"},
                     {a},
                     "a component of the preimage of the transversal branch"});
            }
            if (m0p == 1) {
                long a1 = branched_germ >= 0 ? table.over(branched_germ) : 1;
                long a2 = unbranched_germ >= 0 ? table.over(unbranched_germ) : 1;
                add({"S2", "A2k+1.power", "u = z^(n m1), v = z^m1 + w^m2",
                     {"gcd(m1, m2) = 1", "m2 > 1"}, {a1, a2}, "axis and transversal branch"});
                add({"S2", "A2k+1.omega", "u = (w_j z^m1 - w^m2)^n, v = z^m1 - w^m2",
                     {"gcd(m1, m2) = 1", "m1, m2 > 1", "1 <= j <= n-1"}, {a2, a2},
                     "two components of the transversal branch preimage"});
            }
        }
        return;
    }
    if (T.fam == 'D' && T.n == 4) {
        long a = best && !best->germs.empty() ? best->germs.front().loop_class : 1;
        add({"S1", "D4.power", "u = z^(m1 n), v = (z^m1 + w^m2)^n",
             {"gcd(m1, m2) = 1", "m2 >= 2"}, {a}, "a branch line and a transversal line"});
        add({"S2", "D4.omega", "u = (z^m1 - w^m2)^n, v = (z^m1 - w_j w^m2)^n",
             {"gcd(m1, m2) = 1", "(m1, m2) != (1, 1)", "1 <= j <= n-1"}, {a, a},
             "two of the branch lines"});
        return;
    }
    if (T.fam == 'D' && T.n % 2 == 1 && n == 2) {
        long k = (T.n - 3) / 2;
        long a1 = branched_germ >= 0 ? table.over(branched_germ) : 1;
        long a2 = unbranched_germ >= 0 ? table.over(unbranched_germ) : 2 * k + 1;
        add({"S2", "D2k+3", "u = z^(2 m1), v = z^((2k+1) m1) + w^m2",
             {"gcd(m1, m2) = 1", "m2 > 1", "gcd(2k+1, m2) = 1"}, {a1, a2},
             "axis and one branch of the tangent pair"});
        return;
    }
    if (T.fam == 'D' && T.n % 2 == 0 && T.n >= 6) {
        long a1 = branched_germ >= 0 ? table.over(branched_germ) : 0;
        long a2 = other_branched_germ >= 0 ? table.over(other_branched_germ) : 0;
        long a3 = unbranched_germ >= 0 ? table.over(unbranched_germ) : 0;
        add({"S2", "D2k+2.tower", "u = z^(n1 m1), v = (z^(m1 k2) + w^m2)^n",
             {"k = k1 k2", "n = n1 k1 >= 2", "gcd(m1, m2) = 1", "gcd(n m2, k2) = 1", "m2 >= 2",
              "n1 m1 >= 2"},
             {a1, a3}, "first axis and a component of the third line preimage"});
        add({"S2", "D2k+2.section", "u = (z^m1 - w^m2)^n1, v = z^(m1 n)",
             {"n = n1 k", "n1 >= 2", "gcd(m1, m2) = 1", "m2 >= 2"}, {a2, a3},
             "second axis and a component of the third line preimage"});
        add({"S2", "D2k+2.omega", "u = (z^m1 - w^m2)^n1, v = (z^m1 - w_j w^m2)^n",
             {"n = n1 k", "n1 >= 2", "gcd(m1, m2) = 1", "(m1, m2) != (1, 1)", "1 <= j <= n-1"},
             {a3, a3}, "two components of the third line preimage"});
        return;
    }
    if (T.fam == 'E' && T.n == 7 && n == 3) {
        // the viable branching carries the line trail and the exceptional
        // trail; the cusp germ rides the unbranched trail
        long a1 = branched_germ >= 0 ? table.over(branched_germ) : 1;
        long a2 = unbranched_germ >= 0 ? table.over(unbranched_germ) : 2;
        add({"S2", "E7", "u = z^(3 m1), v = z^(2 m1) + w^m2",
             {"gcd(m1, m2) = 1", "m2 > 1"}, {a1, a2}, "axis and one branch of the cusp pair"});
        return;
    }
}

}  // namespace detail

// Decides R_T-fiber nonemptiness over a Belyi pair. The two-point-branched
// and three-lines cases are decided completely; other three-point cases
// report the necessary conditions only (complete = false when they pass).
inline FiberDescription fiber_describe(const Passport& p, const std::optional<FormPair>& forms,
                                       const AdeLabel& T) {
    FiberDescription out;
    out.label = T;
    out.n = p.n;
    out.type_report = type_check(p, T);
    if (!out.type_report.typed) {
        out.nonempty = false;
        out.complete = true;
        out.witness = "passport does not have type " + T.str() + " in any arrangement";
        return out;
    }
    long n = p.n;
    bool two_point = p.two_point_branched();

    if (T.fam == 'D' && T.n == 4 && !two_point) {
        // three-lines fiber over a genuinely three-point-branched pair
        auto b = pull::d4_m0(n);
        // loop class of the center preimage over a branch line, computed on
        // the minimal cover of the contracted chain
        long a = 1;
        if (n > 1) {
            pull::BZeroChain probe = b;
            probe.germs.push_back({0, 0, 0});
            pull::fill_classes_via_minimal_cover(probe);
            a = probe.germs.front().loop_class;
        }
        out.nonempty = true;
        out.complete = true;
        out.m0 = b.m0;
        out.minimal_degree = n * b.m0;
        BranchScenario sc;
        sc.ok = true;
        sc.detail = "forms cover, center preimage of self-intersection -" + std::to_string(n);
        sc.chain = b.chain.w;
        sc.m0 = b.m0;
        sc.central_exponent = b.central_exponent;
        out.scenarios.push_back(sc);
        if (forms) {
            Poly2<Rat> prod = forms->h1.p * forms->h2.p * (forms->h1.p - forms->h2.p);
            auto dec = squarefree_decomposition(BinaryForm<Rat>::of(prod));
            int nlines = 0;
            for (auto& [m, g] : dec) {
                out.series.push_back({"S1", "forms",
                                      "u = h1(z^m1, w), v = h2(z^m1, w)",
                                      {"gcd(m1, " + std::to_string(a) + ") = 1: all m1"},
                                      {a},
                                      std::to_string(g.n) + " line(s) of " + g.p.str()});
                nlines += g.n;
            }
            out.series.push_back(
                {"S2", "forms", "u = h1(z^m1, w^m2), v = h2(z^m1, w^m2)",
                 {"gcd(m1 m2, m1 + m2) = 1, i.e. gcd(m1, m2) = 1"},
                 {a, a},
                 "any ordered pair of the " + std::to_string(nlines) + " branch lines"});
        } else {
            out.series.push_back({"S2", "forms", "u = h1(z^m1, w^m2), v = h2(z^m1, w^m2)",
                                  {"gcd(m1, m2) = 1"},
                                  {a, a},
                                  "pairs of branch lines (forms not supplied)"});
        }
        return out;
    }

    if (two_point) {
        out.complete = true;
        if (T.fam == 'A' && T.n == 0) {
            out.nonempty = n == 1;
            out.m0 = 1;
            out.minimal_degree = 1;
            detail::add_two_point_series(out, T, n, nullptr, nullptr);
            return out;
        }
        if (T.fam == 'A' && T.n == 1) {
            auto b = pull::d4_m0(n);  // same shape: unbranched center cover over two germs
            out.nonempty = true;
            out.m0 = b.m0;
            out.minimal_degree = n * b.m0;
            BranchScenario sc;
            sc.ok = true;
            sc.chain = b.chain.w;
            sc.m0 = b.m0;
            sc.central_exponent = b.central_exponent;
            sc.detail = "branched in the two smooth branches";
            out.scenarios.push_back(sc);
            detail::add_two_point_series(out, T, n, nullptr, nullptr);
            return out;
        }
        auto r = res::resolve_minimal(res::ade_germ(T));
        if (r.trails.size() != 3) throw std::logic_error("expected a trail decomposition");
        long best = -1;
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) {
                BranchScenario sc;
                sc.trail_a = a;
                sc.trail_b = b;
                auto res2 = pull::pullback_cyclic(r, a, b, n);
                if (pull::succeeded(res2)) {
                    auto& bz = std::get<pull::BZeroChain>(res2);
                    sc.ok = true;
                    sc.chain = bz.chain.w;
                    sc.m0 = bz.m0;
                    sc.central_exponent = bz.central_exponent;
                    sc.germs = bz.germs;
                    if (best < 0 || bz.m0 < best) best = bz.m0;
                } else {
                    auto& w = std::get<pull::FailureWitness>(res2);
                    sc.ok = false;
                    sc.detail = w.kind_str() + ": " + w.detail;
                    sc.chain = w.chain;
                    sc.m0 = w.m0;
                    sc.central_exponent = w.exponent;
                }
                out.scenarios.push_back(sc);
            }
        out.nonempty = best >= 0;
        if (out.nonempty) {
            out.m0 = best;
            out.minimal_degree = n * best;
            const BranchScenario* best_sc = nullptr;
            for (auto& sc : out.scenarios)
                if (sc.ok && sc.m0 == best && !best_sc) best_sc = &sc;
            detail::add_two_point_series(out, T, n, &r, best_sc);
        } else {
            out.witness = "all trail branchings fail:";
            for (auto& sc : out.scenarios)
                out.witness += " [" + std::to_string(sc.trail_a) + "," +
                               std::to_string(sc.trail_b) + "] " + sc.detail + ";";
        }
        return out;
    }

    // three-point-branched pair, label other than the three lines: only the
    // necessary conditions are decided here
    auto r = res::resolve_minimal(res::ade_germ(T));
    bool any_ok = false;
    std::string cc_note;
    if (r.trails.size() == 3) {
        std::array<int, 3> idx{0, 1, 2};
        std::sort(idx.begin(), idx.end());
        do {
            auto cc = contractibility_counts(r, p, idx);
            if (cc.ok) any_ok = true;
        } while (std::next_permutation(idx.begin(), idx.end()));
        if (!any_ok) cc_note = "no arrangement satisfies the contractibility counts";
    }
    if (!any_ok) {
        out.nonempty = false;
        out.complete = true;
        out.witness = cc_note;
        return out;
    }
    out.nonempty = true;
    out.complete = false;
    out.note =
        "necessary conditions hold (type and contractibility counts); the construction for "
        "three-point monodromy beyond the three-lines case is not decided here";
    return out;
}

}  // namespace adecover::cls
