#pragma once

// Hirzebruch-Jung continued fractions and the cyclic groups of weighted
// chains. A chain of rational curves with weights [w1..wk] (w = -self
// intersection) resolves the cyclic quotient singularity A_{m0,q} with
// m0/q = [w1; w2, ..., wk] = w1 - 1/(w2 - 1/(...)). Reversing the chain
// swaps q for its inverse mod m0, so equality of types accepts both.

#include "adecover/numeric.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace adecover::hj {

struct MalformedChain : std::domain_error {
    using std::domain_error::domain_error;
};

struct HJType {
    long m0 = 1;
    long q = 0;  // 1 <= q <= m0, except q = 0 with m0 = 1 for the smooth case

    HJType() = default;
    HJType(long m, long qq) : m0(m), q(qq) {
        if (m0 < 1) throw std::domain_error("HJType: order must be positive");
        if (m0 == 1) {
            q = 0;
            return;
        }
        q = mod_long(q, m0);
        if (q == 0) q = m0;
        if (gcd_long(m0, q) != 1) throw std::domain_error("HJType: gcd(m0, q) != 1");
    }
    bool smooth() const { return m0 == 1; }

    // A_{m0,q} and A_{m0,q'} name the same singularity when q q' = 1 mod m0.
    friend bool operator==(const HJType& a, const HJType& b) {
        if (a.m0 != b.m0) return false;
        if (a.m0 == 1) return true;
        return a.q == b.q || mod_long(a.q * b.q, a.m0) == 1;
    }
    std::string str() const { return "A(" + std::to_string(m0) + "," + std::to_string(q) + ")"; }
};

struct WeightedChain {
    std::vector<long> w;                 // weights, >= 1
    std::optional<size_t> mark;          // index of a distinguished curve

    WeightedChain() = default;
    WeightedChain(std::vector<long> ws, std::optional<size_t> m = std::nullopt)
        : w(std::move(ws)), mark(m) {
        for (long x : w)
            if (x < 1) throw std::domain_error("chain weights must be >= 1");
        if (mark && *mark >= w.size()) throw std::domain_error("mark out of range");
    }
    size_t size() const { return w.size(); }
};

struct CfResult {
    HJType type;
    bool minimal = true;  // false when a weight-1 vertex is present (intermediate state)
};

// [w1; w2, ..., wk] evaluated exactly. Empty chain is the smooth point
// (1, 0). Errors if an intermediate tail is <= 0 or the value is <= 0.
inline CfResult cf_eval(const WeightedChain& chain) {
    CfResult res;
    for (long x : chain.w)
        if (x == 1) res.minimal = false;
    Rat cf;
    bool have = false;
    for (auto it = chain.w.rbegin(); it != chain.w.rend(); ++it) {
        if (!have) {
            cf = Rat(*it);
            have = true;
        } else {
            if (cf == 0) throw MalformedChain("continued fraction hits a zero tail");
            cf = Rat(*it) - 1 / cf;
        }
        if (cf <= 0) throw MalformedChain("continued fraction tail is not positive");
    }
    if (!have) {
        res.type = HJType(1, 0);
        return res;
    }
    // cf = m0/q in lowest terms
    long m0 = (long)cf.get_num().get_si();
    long q = (long)cf.get_den().get_si();
    if (!cf.get_num().fits_slong_p() || !cf.get_den().fits_slong_p())
        throw MalformedChain("chain order overflows");
    res.type = HJType(m0, q);
    return res;
}

// Inverse of cf_eval: minimal-resolution weights of A_{m0,q}, all >= 2.
inline std::vector<long> cf_expand(long m0, long q) {
    if (m0 < 1) throw std::domain_error("cf_expand: order must be positive");
    if (m0 == 1) return {};
    q = mod_long(q, m0);
    if (q == 0 || gcd_long(m0, q) != 1) throw std::domain_error("cf_expand: bad q");
    std::vector<long> w;
    long a = m0, b = q;
    while (b > 0) {
        long c = (a + b - 1) / b;  // ceil(a/b)
        w.push_back(c);
        long nb = c * b - a;
        a = b;
        b = nb;
    }
    return w;
}

struct ChainGroup {
    WeightedChain chain;
    long order = 1;                // |pi_1| of the chain complement
    std::vector<long> exponents;   // class of e_j as a power of e_1, mod order
    long q = 0;                    // inverse of the last exponent, matching cf_eval

    bool marked_generates() const {
        if (!chain.mark) throw std::domain_error("no marked vertex");
        if (order == 1) return true;
        return gcd_long(exponents[*chain.mark], order) == 1;
    }
};

// The chain group: generators e_j, relations e_j^{w_j} = e_{j-1} e_{j+1}
// (empty neighbours dropped). Cyclic, generated by e_1; the recurrence
// x_0 = 0, x_1 = 1, x_{j+1} = w_j x_j - x_{j-1} gives the exponent of e_j
// and the order m0 = x_{k+1}.
inline ChainGroup chain_group(const WeightedChain& chain) {
    ChainGroup g;
    g.chain = chain;
    size_t k = chain.size();
    std::vector<long> x(k + 2, 0);
    if (k == 0) {
        g.order = 1;
        return g;
    }
    x[1] = 1;
    for (size_t j = 1; j <= k; ++j) x[j + 1] = chain.w[j - 1] * x[j] - x[j - 1];
    long m0 = x[k + 1];
    if (m0 < 0) m0 = -m0;  // presentation order is |det| of the relation matrix
    g.order = m0;
    if (m0 == 0) throw MalformedChain("chain group is infinite");
    g.exponents.resize(k);
    for (size_t j = 1; j <= k; ++j) g.exponents[j - 1] = mod_long(x[j], m0 == 0 ? 1 : m0);
    if (m0 > 1) {
        long xk = mod_long(x[k], m0);
        if (gcd_long(xk, m0) != 1) throw MalformedChain("chain end does not invert");
        g.q = inv_mod(xk, m0);
    }
    return g;
}

// Decomposition of a faithful cyclic action g: (u1,u2) -> (z^p1 u1, z^p2 u2)
// of order m (z = exp(2 pi i / m)) into pseudo-reflections and the residual
// rotation: m = m1 m2 m0 with m1, m2 the reflection orders along the two
// axes, and the quotient-by-reflections action of type A_{m0,q}. Exponents
// p_j in [1..m], p_j = m meaning the trivial character.
struct CyclicDecomposition {
    long m1 = 1, m2 = 1, m0 = 1, q = 0;
    HJType residual_type() const { return m0 == 1 ? HJType(1, 0) : HJType(m0, q); }
};

inline CyclicDecomposition decompose_cyclic_action(long m, long p1, long p2) {
    if (m < 1 || p1 < 1 || p1 > m || p2 < 1 || p2 > m)
        throw std::domain_error("decompose_cyclic_action: need 1 <= p_j <= m");
    if (gcd_long(gcd_long(p1, p2), m) != 1)
        throw std::domain_error("decompose_cyclic_action: action is not faithful");
    CyclicDecomposition d;
    d.m1 = gcd_long(m, p1);
    d.m2 = gcd_long(m, p2);
    d.m0 = m / (d.m1 * d.m2);
    if (d.m0 * d.m1 * d.m2 != m) throw std::logic_error("cyclic decomposition: m1 m2 does not divide m");
    if (d.m0 > 1) {
        long e1 = mod_long(p1 / d.m1, d.m0);
        long e2 = mod_long(p2 / d.m2, d.m0);
        if (gcd_long(e2, d.m0) != 1) throw std::logic_error("cyclic decomposition: e2 not invertible");
        d.q = mod_long(e1 * inv_mod(e2, d.m0), d.m0);
        if (d.q == 0) d.q = d.m0;
    }
    return d;
}

struct NotAChain : std::domain_error {
    using std::domain_error::domain_error;
};

// Blow down unmarked (-1)-vertices of the chain until none remain: interior
// removals join the neighbours and decrement both weights, end removals
// decrement the single neighbour. A final single unmarked weight-0 vertex
// (the fibre case) is dropped as well, so fully contractible chains end
// empty. Confluent on chains; order fixed left-to-right for determinism.
inline WeightedChain contract_chain(const WeightedChain& input) {
    std::vector<long> w = input.w;
    std::vector<bool> marked(w.size(), false);
    if (input.mark) marked[*input.mark] = true;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < w.size(); ++i) {
            if (marked[i] || w[i] != 1) continue;
            if (i > 0) w[i - 1] -= 1;
            if (i + 1 < w.size()) w[i + 1] -= 1;
            w.erase(w.begin() + i);
            marked.erase(marked.begin() + i);
            changed = true;
            break;
        }
        for (long x : w)
            if (x < 0) throw NotAChain("contraction produced a negative weight");
    }
    if (w.size() == 1 && !marked[0] && w[0] == 0) {
        w.clear();
        marked.clear();
    }
    std::optional<size_t> mark;
    for (size_t i = 0; i < w.size(); ++i)
        if (marked[i]) mark = i;
    WeightedChain out;
    out.w = std::move(w);
    out.mark = mark;
    return out;
}

}  // namespace adecover::hj
