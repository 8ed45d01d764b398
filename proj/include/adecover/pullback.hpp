#pragma once

// Pullback of an ADE resolution graph along cyclic monodromy: branch the
// cover in two of the three trails, pull the configuration back, insert the
// quotient-point chains, contract everything contractible over the trails,
// and read off the central chain with the class of the center preimage.
// Failures (inconsistent monodromy, non-chain configurations, a central
// class that does not generate) are first-class results.

#include "adecover/cover_engine.hpp"
#include "adecover/hj.hpp"
#include "adecover/resolution.hpp"

#include <string>
#include <variant>
#include <vector>

namespace adecover::pull {

struct GermAttachment {
    size_t chain_index = 0;  // which central-chain curve the germ crosses
    int down_vertex = -1;    // downstairs vertex id it lies over
    long loop_class = 0;     // exponent a with (central class) = (germ loop)^a
};

struct BZeroChain {
    hj::WeightedChain chain;     // central chain, mark at the center preimage
    long m0 = 1;                 // order of the chain group
    long central_exponent = 1;   // class of the marked curve in it
    std::vector<GermAttachment> germs;

    bool generates() const { return m0 == 1 || gcd_long(central_exponent, m0) == 1; }
};

// Class of the marked chain curve over the loop around each attached germ,
// solved from the orthogonality of germ total transforms to the chain.
inline std::vector<long> germ_loop_classes(const hj::WeightedChain& chain,
                                           const std::vector<size_t>& attach_at) {
    res::ResolutionGraph g;
    for (size_t i = 0; i < chain.w.size(); ++i) g.verts.push_back({true, chain.w[i], (int)i, -1});
    for (size_t i = 0; i + 1 < chain.w.size(); ++i) g.edges.push_back({(int)i, (int)(i + 1)});
    for (size_t j = 0; j < attach_at.size(); ++j) {
        int id = (int)g.verts.size();
        g.verts.push_back({false, 0, -1, (int)j});
        g.edges.push_back({(int)attach_at[j], id});
    }
    auto classes = res::exceptional_classes(g);
    if (!chain.mark) throw std::domain_error("chain has no marked curve");
    std::vector<long> out;
    for (size_t j = 0; j < attach_at.size(); ++j) out.push_back((long)classes[*chain.mark][j].get_si());
    return out;
}

struct FailureWitness {
    enum Kind { InconsistentMonodromy, Disconnected, NotAChain, GeneratorFails };
    Kind kind;
    std::string detail;
    std::vector<long> chain;  // populated for GeneratorFails
    long m0 = 0;
    long exponent = 0;

    std::string kind_str() const {
        switch (kind) {
            case InconsistentMonodromy: return "inconsistent-monodromy";
            case Disconnected: return "disconnected-cover";
            case NotAChain: return "not-a-chain";
            case GeneratorFails: return "central-class-does-not-generate";
        }
        return "?";
    }
};

using PullbackResult = std::variant<BZeroChain, FailureWitness>;

inline bool succeeded(const PullbackResult& r) { return std::holds_alternative<BZeroChain>(r); }

// Monodromy exponents on every vertex of the resolution graph for the
// cyclic cover of degree n branched in trails a and b (exponents +1 and
// n-1), the remaining trail unbranched. Returns nullopt with a message when
// the chain relations cannot be satisfied.
inline std::optional<std::vector<long>> trail_exponents(const res::Resolution& r, int trail_a,
                                                        int trail_b, long n, std::string* err) {
    std::vector<long> x(r.graph.verts.size(), 0);
    for (int ti = 0; ti < (int)r.trails.size(); ++ti) {
        const res::Trail& t = r.trails[ti];
        long head = 0;
        if (ti == trail_a) head = mod_long(1, n);
        if (ti == trail_b) head = mod_long(n - 1, n);
        long prev = 0;  // center
        long cur = head;
        for (size_t j = 0; j < t.verts.size(); ++j) {
            int v = t.verts[j];
            x[v] = cur;
            if (!r.graph.verts[v].exceptional) {
                if (j + 1 != t.verts.size()) {
                    if (err) *err = "germ vertex inside a trail";
                    return std::nullopt;
                }
                break;
            }
            long w = r.graph.verts[v].weight;
            long next = mod_long(w * cur - prev, n);
            if (j + 1 == t.verts.size()) {
                // end of a fully exceptional arm: the relation must close
                if (next != 0) {
                    if (err)
                        *err = "trail relations force " + std::to_string(next) +
                               " = 0 mod " + std::to_string(n);
                    return std::nullopt;
                }
            }
            prev = cur;
            cur = next;
        }
    }
    return x;
}

// For a central chain of order m0 > 1 the germ loop classes live on the
// minimal cover: pull the chain back along the cyclic cover of degree m0
// determined by the chain group (the universal cover of the contracted
// point's punctured neighbourhood, branched in the marked curve), contract,
// and solve the classes on the resulting smooth-side chain.
inline void fill_classes_via_minimal_cover(BZeroChain& bz) {
    auto cg = hj::chain_group(bz.chain);
    cover::DownConfig cfg;
    cfg.d = bz.m0;
    cfg.complete_divisor = true;
    for (size_t i = 0; i < bz.chain.w.size(); ++i)
        cfg.verts.push_back({true, -bz.chain.w[i], mod_long(cg.exponents[i], bz.m0), false});
    cfg.center = (int)*bz.chain.mark;
    for (size_t i = 0; i + 1 < bz.chain.w.size(); ++i) cfg.edges.push_back({(int)i, (int)(i + 1)});
    size_t chain_len = bz.chain.w.size();
    for (auto& ga : bz.germs) {
        int id = (int)cfg.verts.size();
        cover::DownVertex germ;
        germ.compact = false;
        germ.exponent = 0;  // the cover is unramified away from the contracted point
        germ.marked = true;
        cfg.verts.push_back(germ);
        cfg.edges.push_back({(int)ga.chain_index, id});
    }
    auto pb = cover::pull_back(cfg);
    auto con = cover::contract(pb.graph);
    if (!con.normal_crossing) throw std::logic_error("minimal cover chain is not normal crossing");
    // order the surviving compact chain
    std::vector<int> compact;
    std::map<int, std::vector<int>> adj;
    for (int i = 0; i < (int)con.graph.verts.size(); ++i)
        if (con.graph.verts[i].compact) compact.push_back(i);
    for (auto& [a, b] : con.graph.edges)
        if (con.graph.verts[a].compact && con.graph.verts[b].compact) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    int start = -1;
    for (int v : compact)
        if ((int)adj[v].size() <= 1) start = v;
    if (start < 0) throw std::logic_error("minimal cover chain is a cycle");
    std::vector<int> order;
    for (int prev = -1, cur = start; cur >= 0;) {
        order.push_back(cur);
        int next = -1;
        for (int w : adj[cur])
            if (w != prev) next = w;
        prev = cur;
        cur = next;
    }
    hj::WeightedChain up;
    std::map<int, size_t> pos;
    std::optional<size_t> mark;
    for (size_t i = 0; i < order.size(); ++i) {
        up.w.push_back(-con.graph.verts[order[i]].selfint);
        pos[order[i]] = i;
        if (con.graph.verts[order[i]].is_center) mark = i;
    }
    up.mark = mark;
    if (!mark) throw std::logic_error("marked curve lost in the minimal cover");
    if (hj::chain_group(up).order != 1)
        throw std::logic_error("minimal cover chain should contract to a smooth point");
    // one attachment per downstairs germ (the components are symmetric)
    std::vector<size_t> attach;
    std::vector<size_t> which;
    for (size_t j = 0; j < bz.germs.size(); ++j) {
        int down = (int)(chain_len + j);
        bool found = false;
        for (int i = 0; i < (int)con.graph.verts.size() && !found; ++i) {
            if (con.graph.verts[i].compact || con.graph.verts[i].down != down) continue;
            for (int w : con.graph.neighbors(i))
                if (con.graph.verts[w].compact) {
                    attach.push_back(pos.at(w));
                    which.push_back(j);
                    found = true;
                    break;
                }
        }
    }
    auto classes = germ_loop_classes(up, attach);
    for (size_t t = 0; t < which.size(); ++t) bz.germs[which[t]].loop_class = classes[t];
}

inline PullbackResult pullback_cyclic(const res::Resolution& r, int trail_a, int trail_b, long n) {
    if (r.trails.empty()) throw std::domain_error("resolution has no trail decomposition");
    if (trail_a == trail_b || trail_a < 0 || trail_b < 0 || trail_a >= (int)r.trails.size() ||
        trail_b >= (int)r.trails.size())
        throw std::domain_error("invalid trail choice");
    std::string err;
    auto exps = trail_exponents(r, trail_a, trail_b, n, &err);
    if (!exps)
        return FailureWitness{FailureWitness::InconsistentMonodromy, err, {}, 0, 0};

    cover::DownConfig cfg;
    cfg.d = n;
    cfg.center = r.graph.center;
    cfg.complete_divisor = true;
    for (int i = 0; i < (int)r.graph.verts.size(); ++i) {
        cover::DownVertex dv;
        dv.compact = r.graph.verts[i].exceptional;
        dv.selfint = -r.graph.verts[i].weight;
        dv.exponent = (*exps)[i];
        cfg.verts.push_back(dv);
    }
    cfg.edges = r.graph.edges;

    cover::Pullback pb;
    try {
        pb = cover::pull_back(cfg);
    } catch (const cover::EngineError& e) {
        return FailureWitness{FailureWitness::Disconnected, e.what(), {}, 0, 0};
    }
    auto contracted = cover::contract(pb.graph);
    if (!contracted.normal_crossing)
        return FailureWitness{FailureWitness::NotAChain, "contraction left a non-transversal configuration",
                              {}, 0, 0};

    // central chain = surviving compact components
    std::vector<int> compact;
    for (int i = 0; i < (int)contracted.graph.verts.size(); ++i)
        if (contracted.graph.verts[i].compact) compact.push_back(i);
    // adjacency among the compact survivors
    std::map<int, std::vector<int>> adj;
    for (auto& [a, b] : contracted.graph.edges) {
        if (contracted.graph.verts[a].compact && contracted.graph.verts[b].compact) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    }
    for (int v : compact)
        if ((int)adj[v].size() > 2)
            return FailureWitness{FailureWitness::NotAChain,
                                  "central curve configuration has a vertex of valency " +
                                      std::to_string(adj[v].size()),
                                  {}, 0, 0};
    // find an endpoint and walk
    int start = -1;
    for (int v : compact)
        if ((int)adj[v].size() <= 1) {
            start = v;
            break;
        }
    if (start < 0)
        return FailureWitness{FailureWitness::NotAChain, "central curve configuration is a cycle", {}, 0, 0};
    std::vector<int> order;
    int prev = -1, cur = start;
    while (cur >= 0) {
        order.push_back(cur);
        int next = -1;
        for (int w : adj[cur])
            if (w != prev) next = w;
        prev = cur;
        cur = next;
    }
    if (order.size() != compact.size())
        return FailureWitness{FailureWitness::NotAChain, "central curve configuration is disconnected", {}, 0, 0};

    hj::WeightedChain chain;
    std::optional<size_t> mark;
    auto build = [&] {
        chain.w.clear();
        mark.reset();
        for (size_t i = 0; i < order.size(); ++i) {
            chain.w.push_back(-contracted.graph.verts[order[i]].selfint);
            if (contracted.graph.verts[order[i]].is_center) mark = i;
        }
    };
    build();
    if (!mark) throw std::logic_error("center preimage was contracted");
    // canonical orientation: marked curve in the first half, then the
    // lexicographically smaller weight sequence
    {
        size_t len = chain.w.size();
        auto rev = chain.w;
        std::reverse(rev.begin(), rev.end());
        size_t rmark = len - 1 - *mark;
        if (rmark < *mark || (rmark == *mark && rev < chain.w)) {
            std::reverse(order.begin(), order.end());
            build();
        }
    }
    chain.mark = mark;

    hj::ChainGroup cg;
    try {
        cg = hj::chain_group(chain);
    } catch (const hj::MalformedChain& e) {
        return FailureWitness{FailureWitness::NotAChain, e.what(), chain.w, 0, 0};
    }
    BZeroChain out;
    out.chain = chain;
    out.m0 = cg.order;
    out.central_exponent = cg.order == 1 ? 0 : cg.exponents[*mark];
    if (!out.generates())
        return FailureWitness{FailureWitness::GeneratorFails,
                              "central class has exponent " + std::to_string(out.central_exponent) +
                                  " in a cyclic group of order " + std::to_string(out.m0),
                              chain.w, out.m0, out.central_exponent};

    // attachments of the germ components to the central chain, with the
    // class of the marked curve over each germ loop; the class solve is
    // integral exactly when the chain contracts to a smooth point
    std::map<int, size_t> pos;
    for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    std::vector<size_t> attach_at;
    for (int i = 0; i < (int)contracted.graph.verts.size(); ++i) {
        if (contracted.graph.verts[i].compact) continue;
        for (int w : contracted.graph.neighbors(i)) {
            if (!contracted.graph.verts[w].compact) continue;
            GermAttachment ga;
            ga.chain_index = pos.at(w);
            ga.down_vertex = contracted.graph.verts[i].down;
            out.germs.push_back(ga);
            attach_at.push_back(ga.chain_index);
        }
    }
    if (!out.germs.empty()) {
        if (out.m0 == 1) {
            auto classes = germ_loop_classes(out.chain, attach_at);
            for (size_t j = 0; j < out.germs.size(); ++j) out.germs[j].loop_class = classes[j];
        } else {
            fill_classes_via_minimal_cover(out);
        }
    }
    return out;
}

// Minimal-order data for the three-lines germ: the resolution is one blowup,
// the cover of the exceptional line is unbranched of degree n, so the center
// preimage is a single (-n)-curve whose class generates a cyclic group of
// order n.
inline BZeroChain d4_m0(long n) {
    if (n < 1) throw std::domain_error("degree must be positive");
    BZeroChain out;
    out.chain = hj::WeightedChain({n}, 0);
    out.m0 = n;
    out.central_exponent = n == 1 ? 0 : 1;
    return out;
}

}  // namespace adecover::pull

namespace adecover::hj {

struct DeltaResult {
    long delta = 0;
    HJType residual;
};

// Pull the minimal resolution chain of A_{n,n-1} back along the degree-m
// cyclic cover (m | n), in the ruled-surface model: the two sections are
// (-1)-curves that never contract, the fibre chain carries exponents
// 1..n-1. Counts the blowdowns meeting the first section and reads the
// residual singularity off the remaining chain.
inline DeltaResult supplement_delta(long n, long m) {
    if (n < 1 || m < 1 || n % m != 0) throw std::domain_error("supplement requires m | n");
    cover::DownConfig cfg;
    cfg.d = m;
    // B1, E_1 .. E_{n-1}, B2
    cover::DownVertex b1{true, -1, 0, true};
    cfg.verts.push_back(b1);
    for (long j = 1; j <= n - 1; ++j) cfg.verts.push_back({true, -2, mod_long(j, m), false});
    cfg.verts.push_back({true, -1, mod_long(n, m), true});
    for (int i = 0; i + 1 < (int)cfg.verts.size(); ++i) cfg.edges.push_back({i, i + 1});

    auto pb = cover::pull_back(cfg);
    int side = pb.comp_of[0][0];  // the component over B1 (it is unique)
    if (pb.comp_of[0].size() != 1 || pb.comp_of.back().size() != 1)
        throw std::logic_error("section preimage should be irreducible");
    auto contracted = cover::contract(pb.graph, side);
    if (!contracted.normal_crossing)
        throw std::logic_error("supplement contraction left a tangency");

    DeltaResult out;
    out.delta = contracted.side_count;
    // residual chain: walk the unprotected survivors from the B1 side
    int b1c = -1, b2c = -1;
    for (int i = 0; i < (int)contracted.graph.verts.size(); ++i) {
        if (!contracted.graph.verts[i].prot) continue;
        (b1c < 0 ? b1c : b2c) = i;
    }
    std::vector<long> w;
    int prev = -1, cur = b1c;
    while (true) {
        int next = -1;
        for (int x : contracted.graph.neighbors(cur))
            if (x != prev && !(x == b1c || x == b2c)) next = x;
        if (next < 0) break;
        w.push_back(-contracted.graph.verts[next].selfint);
        prev = cur;
        cur = next;
    }
    out.residual = cf_eval(WeightedChain(w)).type;
    return out;
}

}  // namespace adecover::hj
