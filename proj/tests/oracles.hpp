#pragma once

// Test-only oracles and fixtures, kept independent of the implementation
// paths they check.

#include "adecover/adecover.hpp"

#include <vector>

namespace oracles {

using namespace adecover;

// Smith-style reduction of an integer matrix; returns the invariant factors
// (0 entries = free rank).
inline std::vector<long> invariant_factors(std::vector<std::vector<long>> m) {
    size_t n = m.size();
    std::vector<long> out;
    size_t r = 0, c = 0;
    while (r < n && c < n) {
        size_t pi = r, pj = c;
        bool found = false;
        long best = 0;
        for (size_t i = r; i < n; ++i)
            for (size_t j = c; j < n; ++j)
                if (m[i][j] != 0 && (!found || labs(m[i][j]) < labs(best))) {
                    best = m[i][j];
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        std::swap(m[pi], m[r]);
        for (size_t i = 0; i < n; ++i) std::swap(m[i][pj], m[i][c]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = r + 1; i < n; ++i)
                if (m[i][c] != 0) {
                    long q = m[i][c] / m[r][c];
                    for (size_t j = c; j < n; ++j) m[i][j] -= q * m[r][j];
                    if (m[i][c] != 0) {
                        std::swap(m[i], m[r]);
                        clean = false;
                    }
                }
            for (size_t j = c + 1; j < n; ++j)
                if (m[r][j] != 0) {
                    long q = m[r][j] / m[r][c];
                    for (size_t i = r; i < n; ++i) m[i][j] -= q * m[i][c];
                    if (m[r][j] != 0) {
                        for (size_t i = 0; i < n; ++i) std::swap(m[i][j], m[i][c]);
                        clean = false;
                    }
                }
        }
        out.push_back(labs(m[r][c]));
        ++r;
        ++c;
    }
    while (out.size() < n) out.push_back(0);
    return out;
}

inline std::vector<std::vector<long>> chain_relation_matrix(const std::vector<long>& w) {
    size_t k = w.size();
    std::vector<std::vector<long>> m(k, std::vector<long>(k, 0));
    for (size_t j = 0; j < k; ++j) {
        m[j][j] = w[j];
        if (j > 0) m[j][j - 1] = -1;
        if (j + 1 < k) m[j][j + 1] = -1;
    }
    return m;
}

// order of the abelianized chain group, 0 = infinite
inline long chain_order(const std::vector<long>& w) {
    if (w.empty()) return 1;
    long ord = 1;
    for (long f : invariant_factors(chain_relation_matrix(w))) {
        if (f == 0) return 0;
        ord *= f;
    }
    return ord;
}

inline bool chain_cyclic(const std::vector<long>& w) {
    if (w.empty()) return true;
    int nontrivial = 0;
    for (long f : invariant_factors(chain_relation_matrix(w)))
        if (f != 1) ++nontrivial;
    return nontrivial <= 1;
}

// ---------------------------------------------------------------------------
// fixtures
// ---------------------------------------------------------------------------

inline Poly2<Rat> mono(int a, int b, long c = 1) { return Poly2<Rat>::monomial(a, b, Rat(c)); }

inline FormPair xn_pair(int n) {
    return FormPair(BinaryForm<Rat>(n, mono(n, 0)), BinaryForm<Rat>(n, mono(0, n)));
}

// the same pair moved so that the first axis sits over 1: ((x2-x1)^n, x2^n)
inline FormPair xn_pair_rotated(int n) {
    Poly2<Rat> h1 = (mono(0, 1) - mono(1, 0)).pow(n);
    return FormPair(BinaryForm<Rat>::of(h1), BinaryForm<Rat>(n, mono(0, n)));
}

// degree-3 three-point pair with passport {(2,1),(2,1),(3)}
inline FormPair dessin3() {
    return FormPair(BinaryForm<Rat>::of(mono(2, 0) * (mono(0, 1, 3) - mono(1, 0, 2))),
                    BinaryForm<Rat>(3, mono(0, 3)));
}

// degree-4 three-point pair with passport {(2,2),(2,1,1),(4)}
inline FormPair cheb4() {
    Poly2<Rat> h1 = (mono(2, 0, 2) - mono(0, 2, 1)).pow(2);
    return FormPair(BinaryForm<Rat>::of(h1), BinaryForm<Rat>(4, mono(0, 4)));
}

}  // namespace oracles
