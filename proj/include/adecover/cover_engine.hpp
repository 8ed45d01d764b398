#pragma once

// Combinatorial pullback of a normal-crossing curve configuration along a
// cyclic cover, on the level of dual weighted graphs.
//
// Downstairs: curves (compact with self-intersections, or germs) meeting
// transversally, and a monodromy exponent mod d on each curve. Upstairs:
//   * the preimage of a curve v splits into gcd(d, x_v, neighbours)
//     components, each ramified to order d / gcd(d, x_v);
//   * over an intersection point the cover has a cyclic quotient point,
//     resolved by the Hirzebruch-Jung chain read off the kernel lattice of
//     the local monodromy: the inserted curves are the lattice points on
//     the boundary of the convex hull of the kernel lattice in the first
//     quadrant, with u_{i-1} + u_{i+1} = a_i u_i giving the weights and the
//     coordinates giving the pullback multiplicities;
//   * self-intersections upstairs are solved exactly from
//     (psi^* v)^2 = d (v^2), all other terms of the expansion being known.
//
// A contraction pass then blows down unprotected (-1)-components, tracking
// how many land on a designated side.

#include "adecover/hj.hpp"
#include "adecover/numeric.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace adecover::cover {

struct DownVertex {
    bool compact = true;
    long selfint = 0;   // compact curves only
    long exponent = 0;  // monodromy exponent mod d
    bool marked = false;
};

struct DownConfig {
    long d = 1;
    std::vector<DownVertex> verts;
    std::vector<std::pair<int, int>> edges;
    int center = -1;  // preimage of this vertex is protected from contraction
    // set when the configuration is the full branch divisor, enabling the
    // rationality cross-check on the pulled-back components (model
    // configurations with curves meeting branch divisors elsewhere must
    // leave it off)
    bool complete_divisor = false;
};

struct UpVertex {
    int down = -1;  // downstairs vertex, or -1 for an inserted chain curve
    long selfint = 0;
    bool compact = true;
    bool prot = false;  // protected from contraction
    bool is_center = false;
};

struct UpGraph {
    std::vector<UpVertex> verts;
    std::vector<std::pair<int, int>> edges;  // multigraph

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for (auto& [a, b] : edges) {
            if (a == v) out.push_back(b);
            if (b == v) out.push_back(a);
        }
        return out;
    }
};

struct EngineError : std::domain_error {
    using std::domain_error::domain_error;
};

namespace detail {

struct LocalChart {
    // inserted chain between the v-side and w-side, in order from v to w
    std::vector<long> weights;
    std::vector<long> mult_v;  // multiplicity of psi^* v on each chain curve
    std::vector<long> mult_w;
};

// Chart of the cover near a point where curves with exponents (a, b) cross.
// h is the local cover degree. Rays: v on (0,1), w on (1,0). The boundary
// path of the kernel-lattice hull is walked by gift wrapping: from the
// current point take the most clockwise forward direction, nearest point
// first, so collinear lattice points stay on the path.
inline LocalChart local_chart(long h, long abar, long bbar) {
    LocalChart out;
    if (h == 1) return out;
    long rv = h / gcd_long(h, abar);
    long rw = h / gcd_long(h, bbar);
    std::vector<std::pair<long, long>> pts;
    for (long i = 0; i <= rw; ++i)
        for (long j = 0; j <= rv; ++j) {
            if (i == 0 && j == 0) continue;
            if (mod_long(i * bbar + j * abar, h) == 0) pts.push_back({i, j});
        }
    std::vector<std::pair<long, long>> path{{0, rv}};
    while (path.back() != std::make_pair(rw, 0L)) {
        auto c = path.back();
        std::optional<std::pair<long, long>> best;
        for (auto& p : pts) {
            bool forward = p.first > c.first || (p.first == c.first && p.second < c.second);
            if (!forward) continue;
            if (!best) {
                best = p;
                continue;
            }
            long d1x = best->first - c.first, d1y = best->second - c.second;
            long d2x = p.first - c.first, d2y = p.second - c.second;
            long cross = d1x * d2y - d1y * d2x;
            if (cross < 0)
                best = p;  // p is clockwise of the current best
            else if (cross == 0 && (labs(d2x) + labs(d2y) < labs(d1x) + labs(d1y)))
                best = p;  // collinear: nearer point first
        }
        if (!best) throw std::logic_error("hull walk lost its way");
        path.push_back(*best);
    }
    // weights from u_{i-1} + u_{i+1} = a_i u_i
    for (size_t i = 1; i + 1 < path.size(); ++i) {
        auto [x0, y0] = path[i - 1];
        auto [x1, y1] = path[i];
        auto [x2, y2] = path[i + 1];
        long ai = x1 != 0 ? (x0 + x2) / x1 : (y0 + y2) / y1;
        if ((x1 * ai != x0 + x2) || (y1 * ai != y0 + y2))
            throw std::logic_error("hull relation failed");
        if (ai < 1) throw std::logic_error("hull weight must be positive");
        out.weights.push_back(ai);
        out.mult_v.push_back(y1);
        out.mult_w.push_back(x1);
    }
    return out;
}

}  // namespace detail

// Result of the pullback before contraction, with bookkeeping to map
// components back to their downstairs curves.
struct Pullback {
    UpGraph graph;
    std::vector<std::vector<int>> comp_of;  // down vertex -> its component ids

    int center_component() const {
        for (int i = 0; i < (int)graph.verts.size(); ++i)
            if (graph.verts[i].is_center) return i;
        return -1;
    }
};

inline Pullback pull_back(const DownConfig& cfg) {
    long d = cfg.d;
    if (d < 1) throw EngineError("cover degree must be positive");
    long conn = d;
    for (auto& v : cfg.verts) conn = gcd_long(conn, v.exponent);
    if (conn != 1) throw EngineError("monodromy exponents do not generate: cover disconnected");

    int n = (int)cfg.verts.size();
    std::vector<std::vector<int>> adj(n);
    for (auto& [a, b] : cfg.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    // subgroup data per vertex
    std::vector<long> gv(n), rv(n);
    for (int v = 0; v < n; ++v) {
        long g = gcd_long(d, cfg.verts[v].exponent);
        for (int w : adj[v]) g = gcd_long(g, cfg.verts[w].exponent);
        gv[v] = g;  // number of components
        rv[v] = d / gcd_long(d, cfg.verts[v].exponent);
    }

    Pullback out;
    out.comp_of.assign(n, {});
    for (int v = 0; v < n; ++v) {
        for (long r = 0; r < gv[v]; ++r) {
            UpVertex uv;
            uv.down = v;
            uv.compact = cfg.verts[v].compact;
            uv.prot = cfg.verts[v].marked || v == cfg.center || !cfg.verts[v].compact;
            uv.is_center = (v == cfg.center);
            out.comp_of[v].push_back((int)out.graph.verts.size());
            out.graph.verts.push_back(uv);
        }
    }

    // accumulated correction terms of (psi^* v)^2 per downstairs vertex
    std::vector<long> corr(n, 0);

    for (auto& [v, w] : cfg.edges) {
        long a = mod_long(cfg.verts[v].exponent, d);
        long b = mod_long(cfg.verts[w].exponent, d);
        long ge = gcd_long(gcd_long(a, b), d);
        if (ge == 0) ge = d;
        long h = d / ge;
        long abar = mod_long(a / ge, h == 0 ? 1 : h);
        long bbar = mod_long(b / ge, h == 0 ? 1 : h);
        detail::LocalChart chart =
            h <= 1 ? detail::LocalChart{} : detail::local_chart(h, abar, bbar);
        for (long r = 0; r < ge; ++r) {
            int cv = out.comp_of[v][(int)(r % gv[v])];
            int cw = out.comp_of[w][(int)(r % gv[w])];
            if (chart.weights.empty()) {
                out.graph.edges.push_back({cv, cw});
            } else {
                int prev = cv;
                for (size_t i = 0; i < chart.weights.size(); ++i) {
                    UpVertex f;
                    f.down = -1;
                    f.compact = true;
                    f.selfint = -chart.weights[i];
                    int id = (int)out.graph.verts.size();
                    out.graph.verts.push_back(f);
                    out.graph.edges.push_back({prev, id});
                    prev = id;
                }
                out.graph.edges.push_back({prev, cw});
            }
            // correction terms for the two adjacent solves; the chain data is
            // stored v-to-w, so the w-side couples to the back of the chain
            auto side = [&](long rr, const std::vector<long>& mult, bool from_front) {
                if (chart.weights.empty()) return 0L;
                long t = 2 * rr * (from_front ? mult.front() : mult.back());
                for (size_t i = 0; i < chart.weights.size(); ++i) {
                    t -= chart.weights[i] * mult[i] * mult[i];
                    if (i + 1 < chart.weights.size()) t += 2 * mult[i] * mult[i + 1];
                }
                return t;
            };
            if (cfg.verts[v].compact) corr[v] += side(rv[v], chart.mult_v, true);
            if (cfg.verts[w].compact) corr[w] += side(rv[w], chart.mult_w, false);
        }
    }

    // solve the self-intersections
    for (int v = 0; v < n; ++v) {
        if (!cfg.verts[v].compact) continue;
        long lhs = d * cfg.verts[v].selfint - corr[v];
        long denom = rv[v] * rv[v] * gv[v];
        if (lhs % denom != 0) throw std::logic_error("component self-intersection is not integral");
        long xi = lhs / denom;
        for (int id : out.comp_of[v]) out.graph.verts[id].selfint = xi;
    }

    // independent sanity check: every component over a compact curve is a
    // rational curve, so its covering of the line satisfies
    // 2 = 2 delta - sum (e - 1) over its ramification points
    for (int v = 0; cfg.complete_divisor && v < n; ++v) {
        if (!cfg.verts[v].compact) continue;
        long delta = (d / gv[v]) / rv[v];
        long ram = 0;
        for (auto& [a, b] : cfg.edges) {
            if (a != v && b != v) continue;
            int w = a == v ? b : a;
            long xv = mod_long(cfg.verts[v].exponent, d);
            long xw = mod_long(cfg.verts[w].exponent, d);
            long ge = gcd_long(gcd_long(xv, xw), d);
            if (ge == 0) ge = d;
            long e = gcd_long(d, xv == 0 ? d : xv) / ge;
            ram += (ge / gv[v]) * (e - 1);
        }
        if (2 * delta - ram != 2)
            throw std::logic_error("pulled-back component is not rational: degree/ramification mismatch");
    }
    return out;
}

// Blow down unprotected compact (-1)-components repeatedly. Returns the
// final graph; if `count_side` is a vertex id of the *input* graph, counts
// the contractions that touched (the image of) that vertex.
struct ContractionResult {
    UpGraph graph;
    std::vector<int> survivors;  // input ids of surviving vertices, in order
    long side_count = 0;
    bool normal_crossing = true;  // false if a blowdown created a tangency or node
};

inline ContractionResult contract(const UpGraph& input, int count_side = -1) {
    int n = (int)input.verts.size();
    std::vector<UpVertex> verts = input.verts;
    std::vector<char> alive(n, 1);
    // multiplicity matrix of intersections
    std::map<std::pair<int, int>, long> mult;
    auto key = [](int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
    for (auto& [a, b] : input.edges) {
        if (a == b) throw std::logic_error("self-intersecting component");
        mult[key(a, b)] += 1;
    }
    ContractionResult res;

    bool changed = true;
    while (changed) {
        changed = false;
        for (int e = 0; e < n; ++e) {
            if (!alive[e] || verts[e].prot || !verts[e].compact || verts[e].selfint != -1) continue;
            // gather neighbours with multiplicities
            std::vector<std::pair<int, long>> nb;
            for (auto& [k, m] : mult) {
                if (m == 0) continue;
                if (k.first == e && alive[k.second]) nb.push_back({k.second, m});
                if (k.second == e && alive[k.first]) nb.push_back({k.first, m});
            }
            if (count_side >= 0) {
                for (auto& [w, m] : nb)
                    if (w == count_side) res.side_count += 1;
            }
            // blow down e
            for (auto& [w, m] : nb) {
                if (verts[w].compact) verts[w].selfint += m * m;
                if (m > 1) res.normal_crossing = false;
            }
            for (size_t i = 0; i < nb.size(); ++i)
                for (size_t j = i + 1; j < nb.size(); ++j) {
                    mult[key(nb[i].first, nb[j].first)] += nb[i].second * nb[j].second;
                    if (mult[key(nb[i].first, nb[j].first)] > 1) res.normal_crossing = false;
                }
            for (auto& [w, m] : nb) mult[key(e, w)] = 0;
            alive[e] = 0;
            changed = true;
        }
    }

    std::vector<int> remap(n, -1);
    for (int i = 0; i < n; ++i) {
        if (!alive[i]) continue;
        remap[i] = (int)res.graph.verts.size();
        res.graph.verts.push_back(verts[i]);
        res.survivors.push_back(i);
    }
    for (auto& [k, m] : mult) {
        if (m == 0 || !alive[k.first] || !alive[k.second]) continue;
        for (long c = 0; c < m; ++c) res.graph.edges.push_back({remap[k.first], remap[k.second]});
    }
    return res;
}

}  // namespace adecover::cover
