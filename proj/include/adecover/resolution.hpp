#pragma once

// Embedded resolution of plane curve germs over Q by iterated point
// blowups. The engine tracks the strict transform through explicit chart
// substitutions (x,y) -> (x, xy) and (x,y) -> (xy, y), blowing up every
// point where the total transform fails to be a normal crossing divisor.
// Inputs whose infinitely-near points are irrational are out of scope and
// reported as errors; transversal conjugate clusters are fine and yield one
// germ-branch vertex per conjugate point.
//
// The result is the dual weighted graph: exceptional vertices carry
// w = -(E^2), germ-branch vertices carry weight 0, the center is the
// exceptional curve of the last blowup, and for a valency-3 center the
// complement of the center decomposes into three trails.

#include "adecover/belyi.hpp"
#include "adecover/hj.hpp"
#include "adecover/poly.hpp"

#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace adecover::res {

struct NonIsolatedSingularity : std::domain_error {
    using std::domain_error::domain_error;
};
struct NonRationalPoint : std::domain_error {
    using std::domain_error::domain_error;
};

struct AdeLabel {
    char fam = 'A';  // 'A', 'D', 'E'
    int n = 0;

    std::string str() const { return std::string(1, fam) + std::to_string(n); }
    friend bool operator==(const AdeLabel& a, const AdeLabel& b) { return a.fam == b.fam && a.n == b.n; }
    static std::optional<AdeLabel> parse(const std::string& s) {
        if (s.size() < 2) return std::nullopt;
        char f = (char)toupper((unsigned char)s[0]);
        if (f != 'A' && f != 'D' && f != 'E') return std::nullopt;
        for (size_t i = 1; i < s.size(); ++i)
            if (!isdigit((unsigned char)s[i])) return std::nullopt;
        AdeLabel l{f, std::stoi(s.substr(1))};
        if (f == 'A' && l.n < 0) return std::nullopt;
        if (f == 'D' && l.n < 4) return std::nullopt;
        if (f == 'E' && (l.n < 6 || l.n > 8)) return std::nullopt;
        return l;
    }
};

struct GermCurve {
    Poly2<Rat> poly;                    // squarefree, vanishing at the origin
    std::vector<Poly2<Rat>> branches;   // known irreducible factors, may be empty

    explicit GermCurve(Poly2<Rat> p, std::vector<Poly2<Rat>> brs = {})
        : poly(std::move(p)), branches(std::move(brs)) {
        if (poly.is_zero() || poly.coeff(0, 0) != 0)
            throw std::domain_error("germ curve must vanish at the origin");
        if (!is_squarefree(poly)) throw NonIsolatedSingularity("germ is not reduced");
        for (auto& b : branches)
            if (b.coeff(0, 0) != 0) throw std::domain_error("branch factor misses the origin");
        if (!branches.empty()) {
            Poly2<Rat> prod(Rat(1));
            for (auto& b : branches) prod = prod * b;
            auto q = exact_divide(poly, prod);
            if (!q || !q->is_constant()) throw std::domain_error("branch factors do not multiply to the germ");
        }
    }
};

// The ADE normal forms: A_n: u^2 - v^{n+1}; D_n: v(u^2 - v^{n-2});
// E6: u^3 - v^4; E7: u(u^2 - v^3); E8: u^3 - v^5.
inline GermCurve ade_germ(const AdeLabel& l) {
    using P = Poly2<Rat>;
    P u = P::var_x(), v = P::var_y();
    auto vpow = [&](int k) { return P::monomial(0, k, Rat(1)); };
    auto upow = [&](int k) { return P::monomial(k, 0, Rat(1)); };
    auto split_even = [&](int k) {  // factors of u^2 - v^k
        std::vector<P> f;
        if (k % 2 == 0) {
            f.push_back(u - vpow(k / 2));
            f.push_back(u + vpow(k / 2));
        } else
            f.push_back(upow(2) - vpow(k));
        return f;
    };
    if (l.fam == 'A') {
        if (l.n < 0) throw std::domain_error("A_n needs n >= 0");
        if (l.n == 0) return GermCurve(upow(2) - v, {upow(2) - v});
        auto f = split_even(l.n + 1);
        return GermCurve(upow(2) - vpow(l.n + 1), f);
    }
    if (l.fam == 'D') {
        if (l.n < 4) throw std::domain_error("D_n needs n >= 4");
        auto f = split_even(l.n - 2);
        f.insert(f.begin(), v);
        return GermCurve(v * (upow(2) - vpow(l.n - 2)), f);
    }
    if (l.fam == 'E') {
        if (l.n == 6) return GermCurve(upow(3) - vpow(4), {upow(3) - vpow(4)});
        if (l.n == 7) return GermCurve(u * (upow(2) - vpow(3)), {u, upow(2) - vpow(3)});
        if (l.n == 8) return GermCurve(upow(3) - vpow(5), {upow(3) - vpow(5)});
    }
    throw std::domain_error("unknown ADE label");
}

// ---------------------------------------------------------------------------
// Dual graph
// ---------------------------------------------------------------------------

struct ResVertex {
    bool exceptional = false;
    long weight = 0;   // -(E^2) for exceptional curves, 0 for germ branches
    int birth = -1;    // blowup index for exceptional curves
    int factor = -1;   // input branch-factor index for germ branches, if tracked
};

struct Trail {
    std::vector<int> verts;  // ordered, adjacent-to-center first
    bool exceptional = false;
    bool completely_exceptional = false;
    std::vector<long> exc_weights;  // weights of the exceptional part, in trail order
};

struct ResolutionGraph {
    std::vector<ResVertex> verts;
    std::vector<std::pair<int, int>> edges;
    int center = -1;
    int blowups = 0;

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for (auto& [a, b] : edges) {
            if (a == v) out.push_back(b);
            if (b == v) out.push_back(a);
        }
        return out;
    }
    int valency(int v) const { return (int)neighbors(v).size(); }
};

struct Resolution {
    ResolutionGraph graph;
    std::vector<Trail> trails;  // present when the center has valency >= 3
};

// State of an unfinished resolution: how many points still violate normal
// crossings and what they look like.
struct PendingPoint {
    bool on_curve = false;
    int exceptionals = 0;  // curves of the total transform through the point
    bool smooth = false;       // strict transform is smooth there
    bool transversal = false;  // ... and transversal to the exceptional curve
};

struct PartialResolution {
    ResolutionGraph graph;
    std::vector<PendingPoint> pending;
    bool finished = false;
};

// ---------------------------------------------------------------------------
// Engine
// ---------------------------------------------------------------------------

namespace detail {

struct Point {
    Poly2<Rat> g;                    // strict transform at this point
    int exc_x = -1, exc_y = -1;      // curve ids of {x=0}, {y=0}
    std::vector<Poly2<Rat>> fg;      // per-factor strict transforms
};

inline Poly2<Rat> chart_a(const Poly2<Rat>& g, int m) {
    // (x, y) -> (x, x y), divided by x^m
    Poly2<Rat> s = g.subst(Poly2<Rat>::var_x(), Poly2<Rat>::var_x() * Poly2<Rat>::var_y());
    return s.div_xk(m);
}
inline Poly2<Rat> chart_b(const Poly2<Rat>& g, int m) {
    // (x, y) -> (x y, y), divided by y^m
    Poly2<Rat> s = g.subst(Poly2<Rat>::var_x() * Poly2<Rat>::var_y(), Poly2<Rat>::var_y());
    return s.div_yk(m);
}

// Tangent cone of g restricted to the new exceptional curve in chart A:
// tc(b) = sum_{i+j=m} c_{ij} b^j.
inline Poly1<Rat> tangent_cone(const Poly2<Rat>& g) {
    int m = g.ord();
    Poly1<Rat> tc;
    for (auto& [e, v] : g.t)
        if (e.a + e.b == m) {
            if ((int)tc.c.size() <= e.b) tc.c.resize(e.b + 1, Rat(0));
            tc.c[e.b] += v;
        }
    tc.trim();
    return tc;
}

}  // namespace detail

// Runs the blowup loop; with max_blowups >= 0 it stops after that many
// sigma-processes and reports the surviving non-normal-crossing points.
inline PartialResolution resolve_engine(const GermCurve& germ, int max_blowups) {
    using detail::Point;
    ResolutionGraph graph;
    std::deque<Point> queue;

    std::vector<long> weight;  // per exceptional curve
    std::vector<std::pair<int, int>> exc_edges;
    struct BranchVert {
        int attached;
        int factor;
    };
    std::vector<BranchVert> branch_verts;

    Point p0;
    p0.g = germ.poly;
    p0.fg = germ.branches;
    queue.push_back(p0);

    std::vector<PendingPoint> pending;
    bool first = true;
    int guard = 0;
    while (!queue.empty()) {
        if (++guard > 100000) throw std::logic_error("resolution did not terminate");
        Point pt = queue.front();
        queue.pop_front();

        bool on_curve = pt.g.coeff(0, 0) == 0;
        if (!on_curve && !first) {
            if (pt.exc_x >= 0 && pt.exc_y >= 0) exc_edges.push_back({pt.exc_x, pt.exc_y});
            continue;
        }
        if (!first && pt.exc_x >= 0 && pt.exc_y < 0) {
            // lone exceptional through the point: finished iff the germ is
            // smooth and transversal to it
            if (pt.g.dy().coeff(0, 0) != 0) {
                int fidx = -1;
                for (size_t i = 0; i < pt.fg.size(); ++i)
                    if (pt.fg[i].coeff(0, 0) == 0) fidx = (int)i;
                branch_verts.push_back({pt.exc_x, fidx});
                continue;
            }
        }
        if (!first && pt.exc_x < 0 && pt.exc_y >= 0) {
            // normalize: exceptional on the x-axis
            Point q;
            q.g = pt.g.swap_vars();
            q.exc_x = pt.exc_y;
            q.exc_y = -1;
            for (auto& f : pt.fg) q.fg.push_back(f.swap_vars());
            queue.push_front(q);
            continue;
        }
        // blow up this point
        if (max_blowups >= 0 && graph.blowups >= max_blowups) {
            PendingPoint info;
            info.on_curve = on_curve;
            info.exceptionals = (pt.exc_x >= 0) + (pt.exc_y >= 0);
            info.smooth = on_curve && pt.g.ord() == 1;
            info.transversal = info.smooth && info.exceptionals == 1 && pt.g.dy().coeff(0, 0) != 0;
            pending.push_back(info);
            continue;
        }
        first = false;
        int m = pt.g.ord();
        int E = (int)weight.size();
        weight.push_back(1);
        if (pt.exc_x >= 0) weight[pt.exc_x] += 1;
        if (pt.exc_y >= 0) weight[pt.exc_y] += 1;
        ++graph.blowups;

        Poly1<Rat> tc = detail::tangent_cone(pt.g);
        auto factor_ord = [&](const Poly2<Rat>& f) { return f.coeff(0, 0) == 0 ? f.ord() : 0; };

        // chart A origin: direction of the old {y=0}
        if (pt.exc_y >= 0 || tc.coeff(0) == 0) {
            Point q;
            q.g = detail::chart_a(pt.g, m);
            q.exc_x = E;
            q.exc_y = pt.exc_y;
            for (auto& f : pt.fg) q.fg.push_back(detail::chart_a(f, factor_ord(f)));
            queue.push_back(q);
        }
        // chart B origin: direction of the old {x=0}
        if (pt.exc_x >= 0 || tc.degree() < m) {
            Point q;
            q.g = detail::chart_b(pt.g, m);
            q.exc_x = pt.exc_x;
            q.exc_y = E;
            for (auto& f : pt.fg) q.fg.push_back(detail::chart_b(f, factor_ord(f)));
            queue.push_back(q);
        }
        // finite nonzero roots of the tangent cone
        Poly1<Rat> tcz = tc;
        {
            int v0 = 0;
            while (!tcz.is_zero() && tcz.c[0] == 0) {
                tcz.c.erase(tcz.c.begin());
                ++v0;
            }
        }
        if (tcz.degree() >= 1) {
            Poly2<Rat> gA = detail::chart_a(pt.g, m);
            std::vector<Poly2<Rat>> fgA;
            for (auto& f : pt.fg) fgA.push_back(detail::chart_a(f, factor_ord(f)));
            for (auto& [mult, fac] : squarefree_decomposition(tcz)) {
                if (mult == 1) {
                    // transversal points, one branch vertex per root; rational
                    // or not, they are already normal crossings
                    Poly1<Rat> rem = fac;
                    for (size_t i = 0; i < pt.fg.size() && rem.degree() > 0; ++i) {
                        Poly1<Rat> ftc = fgA[i].at_x0();  // factor restricted to E
                        if (ftc.is_zero()) continue;
                        Poly1<Rat> shared = gcd(rem, ftc);
                        for (int r = 0; r < shared.degree(); ++r) branch_verts.push_back({E, (int)i});
                        rem = divmod(rem, shared).first;
                    }
                    for (int r = 0; r < rem.degree(); ++r) branch_verts.push_back({E, -1});
                } else {
                    Poly1<Rat> cof;
                    auto roots = rational_roots(fac, &cof);
                    if (cof.degree() >= 1)
                        throw NonRationalPoint("non-rational infinitely near point of multiplicity >= 2");
                    for (auto& [c, rm] : roots) {
                        Point q;
                        q.g = gA.shift_y(c);
                        q.exc_x = E;
                        q.exc_y = -1;
                        for (auto& f : fgA) q.fg.push_back(f.shift_y(c));
                        queue.push_back(q);
                    }
                }
            }
        }
    }

    // assemble the dual graph: exceptional vertices first, branches after
    for (size_t i = 0; i < weight.size(); ++i)
        graph.verts.push_back({true, weight[i], (int)i, -1});
    for (auto& [a, b] : exc_edges) graph.edges.push_back({a, b});
    for (auto& bv : branch_verts) {
        int id = (int)graph.verts.size();
        graph.verts.push_back({false, 0, -1, bv.factor});
        graph.edges.push_back({bv.attached, id});
    }
    graph.center = (int)weight.size() - 1;

    PartialResolution part;
    part.graph = graph;
    part.pending = pending;
    part.finished = pending.empty();
    return part;
}

inline PartialResolution resolve_partial(const GermCurve& germ, int max_blowups) {
    return resolve_engine(germ, max_blowups);
}

inline Resolution resolve_minimal(const GermCurve& germ) {
    PartialResolution part = resolve_engine(germ, -1);
    ResolutionGraph graph = part.graph;

    Resolution out;
    out.graph = graph;

    // trails: the chains of the center complement
    int c = graph.center;
    std::vector<int> arms = graph.neighbors(c);
    if ((int)arms.size() >= 3) {
        bool chains_ok = true;
        for (int head : arms) {
            Trail t;
            int prev = c, cur = head;
            while (chains_ok) {
                t.verts.push_back(cur);
                auto nb = graph.neighbors(cur);
                int next = -1;
                int cnt = 0;
                for (int x : nb)
                    if (x != prev) {
                        next = x;
                        ++cnt;
                    }
                if (cnt == 0) break;
                if (cnt > 1) {
                    chains_ok = false;  // arm branches, no trail decomposition
                    break;
                }
                prev = cur;
                cur = next;
            }
            t.exceptional = false;
            t.completely_exceptional = true;
            for (int v : t.verts) {
                if (graph.verts[v].exceptional) {
                    t.exceptional = true;
                    t.exc_weights.push_back(graph.verts[v].weight);
                } else
                    t.completely_exceptional = false;
            }
            if (!t.exceptional) t.completely_exceptional = false;
            out.trails.push_back(t);
        }
        if (!chains_ok) out.trails.clear();
    }
    return out;
}

// Abelianized loop classes of the exceptional curves over the germ-branch
// loops: the class of E_i is sum_j mult_i(B_j) b_j where mult is the
// multiplicity of the total transform of branch j along E_i. Solved from
// the orthogonality of total transforms to every exceptional curve.
inline std::vector<std::vector<Int>> exceptional_classes(const ResolutionGraph& g) {
    int k = 0;
    for (auto& v : g.verts)
        if (v.exceptional) ++k;
    std::vector<int> branches;
    for (int i = 0; i < (int)g.verts.size(); ++i)
        if (!g.verts[i].exceptional) branches.push_back(i);

    // intersection matrix of the exceptional curves
    std::vector<std::vector<Rat>> M(k, std::vector<Rat>(k, Rat(0)));
    for (int i = 0; i < k; ++i) M[i][i] = Rat(-g.verts[i].weight);
    for (auto& [a, b] : g.edges)
        if (a < k && b < k) {
            M[a][b] += 1;
            M[b][a] += 1;
        }

    std::vector<std::vector<Int>> cls(k, std::vector<Int>(branches.size(), 0));
    for (size_t j = 0; j < branches.size(); ++j) {
        std::vector<Rat> rhs(k, Rat(0));
        for (auto& [a, b] : g.edges) {
            if (a < k && b == branches[j]) rhs[a] -= 1;
            if (b < k && a == branches[j]) rhs[b] -= 1;
        }
        // gaussian elimination, exact
        auto A = M;
        auto x = rhs;
        std::vector<int> piv(k, -1);
        int row = 0;
        for (int col = 0; col < k && row < k; ++col) {
            int sel = -1;
            for (int r = row; r < k; ++r)
                if (A[r][col] != 0) {
                    sel = r;
                    break;
                }
            if (sel < 0) continue;
            std::swap(A[sel], A[row]);
            std::swap(x[sel], x[row]);
            for (int r = 0; r < k; ++r) {
                if (r == row || A[r][col] == 0) continue;
                Rat f = A[r][col] / A[row][col];
                for (int cc = col; cc < k; ++cc) A[r][cc] -= f * A[row][cc];
                x[r] -= f * x[row];
            }
            piv[row] = col;
            ++row;
        }
        std::vector<Rat> sol(k, Rat(0));
        for (int r = 0; r < k; ++r)
            if (piv[r] >= 0) sol[piv[r]] = x[r] / A[r][piv[r]];
        for (int i = 0; i < k; ++i) {
            if (sol[i].get_den() != 1 || sol[i] < 0)
                throw std::logic_error("branch multiplicities must be nonnegative integers");
            cls[i][j] = sol[i].get_num();
        }
    }
    return cls;
}

}  // namespace adecover::res
