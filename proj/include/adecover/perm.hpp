#pragma once

// Permutations on {1..n} with right-action composition: (p*q)(i) = q(p(i)),
// matching monodromy groups acting on the fibre from the right. Points are
// 1-based to round-trip with cycle notation.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace adecover {

struct Permutation {
    std::vector<int> img;  // img[i-1] = image of i; a bijection of {1..n}

    Permutation() = default;
    explicit Permutation(std::vector<int> images) : img(std::move(images)) {
        std::vector<char> seen(img.size() + 1, 0);
        for (int v : img) {
            if (v < 1 || v > (int)img.size() || seen[v]) throw std::domain_error("not a permutation");
            seen[v] = 1;
        }
    }
    static Permutation identity(int n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = i + 1;
        return Permutation(std::move(v));
    }

    int degree() const { return (int)img.size(); }
    int operator()(int i) const { return img.at(i - 1); }

    friend Permutation operator*(const Permutation& p, const Permutation& q) {
        if (p.degree() != q.degree()) throw std::domain_error("degree mismatch");
        std::vector<int> v(p.degree());
        for (int i = 1; i <= p.degree(); ++i) v[i - 1] = q(p(i));
        return Permutation(std::move(v));
    }
    Permutation inverse() const {
        std::vector<int> v(degree());
        for (int i = 1; i <= degree(); ++i) v[img[i - 1] - 1] = i;
        return Permutation(std::move(v));
    }
    bool is_identity() const {
        for (int i = 1; i <= degree(); ++i)
            if ((*this)(i) != i) return false;
        return true;
    }
    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img == b.img; }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img < b.img; }

    std::string cycle_str() const {
        std::string s;
        std::vector<char> done(degree() + 1, 0);
        for (int i = 1; i <= degree(); ++i) {
            if (done[i] || (*this)(i) == i) continue;
            s += "(" + std::to_string(i);
            done[i] = 1;
            for (int j = (*this)(i); j != i; j = (*this)(j)) {
                s += " " + std::to_string(j);
                done[j] = 1;
            }
            s += ")";
        }
        return s.empty() ? "()" : s;
    }
};

struct CycleType {
    std::vector<int> parts;  // descending, sums to the degree

    CycleType() = default;
    explicit CycleType(std::vector<int> p) : parts(std::move(p)) {
        std::sort(parts.rbegin(), parts.rend());
        for (int x : parts)
            if (x < 1) throw std::domain_error("cycle lengths must be positive");
    }
    int total() const {
        int s = 0;
        for (int x : parts) s += x;
        return s;
    }
    int count() const { return (int)parts.size(); }
    bool all_ones() const {
        for (int x : parts)
            if (x != 1) return false;
        return true;
    }
    friend bool operator==(const CycleType& a, const CycleType& b) { return a.parts == b.parts; }
    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
        return s + ")";
    }
};

inline CycleType cycle_type(const Permutation& p) {
    std::vector<int> parts;
    std::vector<char> done(p.degree() + 1, 0);
    for (int i = 1; i <= p.degree(); ++i) {
        if (done[i]) continue;
        int len = 0;
        for (int j = i; !done[j]; j = p(j)) {
            done[j] = 1;
            ++len;
        }
        parts.push_back(len);
    }
    return CycleType(std::move(parts));
}

// Orbit of point 1 under the generated group covers {1..n}. The empty
// generating set on n > 1 is the trivial group: not transitive.
inline bool is_transitive(const std::vector<Permutation>& gens) {
    if (gens.empty()) return true;  // degree unknown; callers with n > 1 pass generators
    int n = gens.front().degree();
    for (auto& g : gens)
        if (g.degree() != n) throw std::domain_error("degree mismatch");
    if (n == 0) return true;
    std::vector<char> seen(n + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (auto& g : gens) {
            for (int y : {g(x), g.inverse()(x)}) {
                if (!seen[y]) {
                    seen[y] = 1;
                    ++cnt;
                    stack.push_back(y);
                }
            }
        }
    }
    return cnt == n;
}

inline bool is_transitive(const std::vector<Permutation>& gens, int degree) {
    if (gens.empty()) return degree <= 1;
    return is_transitive(gens);
}

// Order of the generated group by closure enumeration (BFS over products).
// Degrees in this library stay small; the degree bound keeps the
// enumeration honest.
inline long group_order(const std::vector<Permutation>& gens, int degree_bound = 12) {
    if (gens.empty()) return 1;
    int n = gens.front().degree();
    if (n > degree_bound) throw std::domain_error("group_order: degree exceeds configured bound");
    for (auto& g : gens)
        if (g.degree() != n) throw std::domain_error("degree mismatch");
    std::set<Permutation> elems{Permutation::identity(n)};
    std::vector<Permutation> frontier{Permutation::identity(n)};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (auto& e : frontier)
            for (auto& g : gens) {
                Permutation h = e * g;
                if (elems.insert(h).second) next.push_back(h);
            }
        frontier = std::move(next);
    }
    return (long)elems.size();
}

// Cycle notation: "(1 2)(3 4 5)"; fixed points may be omitted. Degree is
// taken from the explicit argument or inferred as the max moved point.
inline std::optional<Permutation> parse_permutation(const std::string& s, int degree = 0) {
    std::map<int, int> map;
    size_t i = 0;
    int maxpt = degree;
    auto skip_ws = [&] { while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i; };
    skip_ws();
    if (i == s.size()) return degree >= 0 ? std::optional(Permutation::identity(degree)) : std::nullopt;
    while (i < s.size()) {
        skip_ws();
        if (i == s.size()) break;
        if (s[i] != '(') return std::nullopt;
        ++i;
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            if (i < s.size() && s[i] == ')') {
                ++i;
                break;
            }
            size_t j = i;
            while (j < s.size() && isdigit((unsigned char)s[j])) ++j;
            if (j == i) return std::nullopt;
            int v = std::stoi(s.substr(i, j - i));
            if (v < 1) return std::nullopt;
            cyc.push_back(v);
            i = j;
            skip_ws();
            if (i < s.size() && s[i] == ',') ++i;  // tolerate comma separators
        }
        if (cyc.empty()) continue;
        for (size_t k = 0; k < cyc.size(); ++k) {
            int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
            if (map.count(from)) return std::nullopt;  // point repeated across cycles
            map[from] = to;
            maxpt = std::max(maxpt, from);
        }
        skip_ws();
    }
    int n = std::max(degree, maxpt);
    std::vector<int> img(n);
    for (int k = 1; k <= n; ++k) img[k - 1] = map.count(k) ? map[k] : k;
    try {
        return Permutation(std::move(img));
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
}

}  // namespace adecover
