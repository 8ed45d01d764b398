#pragma once

// Text and JSON interfaces: the polynomial term grammar used by every
// command (`c*x1^a*x2^b` summands, rational coefficients), JSON emitters
// for the domain types, and the DOT emitter for resolution graphs.

#include "adecover/classify.hpp"
#include "adecover/monodromy.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace adecover::io {

using nlohmann::json;

// ---------------------------------------------------------------------------
// polynomial text
// ---------------------------------------------------------------------------

// Accepted variable names: x1/u/z/x for the first, x2/v/w/y for the second.
inline std::optional<int> var_index(const std::string& name) {
    if (name == "x1" || name == "u" || name == "z" || name == "x") return 0;
    if (name == "x2" || name == "v" || name == "w" || name == "y") return 1;
    return std::nullopt;
}

struct ParseError {
    size_t pos;
    std::string message;
};

// Sum of terms `c * x1^a * x2^b`; `c` an integer or p/q fraction; the
// coefficient or either power may be omitted. Whitespace is ignored.
inline std::variant<Poly2<Rat>, ParseError> parse_poly(const std::string& s) {
    Poly2<Rat> out;
    size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && isspace((unsigned char)s[i])) ++i;
    };
    auto fail = [&](const std::string& m) { return ParseError{i, m}; };
    skip();
    if (i == s.size()) return fail("empty polynomial");
    bool first = true;
    while (true) {
        skip();
        if (i == s.size()) break;
        int sign = 1;
        bool saw_sign = false;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            saw_sign = true;
            ++i;
            skip();
        }
        if (!first && !saw_sign) return fail("expected + or - between terms");
        // optional rational coefficient
        Rat coef(1);
        bool saw_coef = false;
        size_t j = i;
        while (j < s.size() && (isdigit((unsigned char)s[j]) || s[j] == '/')) ++j;
        if (j > i) {
            auto r = rat_parse(s.substr(i, j - i));
            if (!r) return fail("bad coefficient");
            coef = *r;
            saw_coef = true;
            i = j;
        }
        // optional monomial part
        int e[2] = {0, 0};
        bool saw_var = false;
        while (true) {
            skip();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip();
            }
            if (i >= s.size() || !isalpha((unsigned char)s[i])) break;
            size_t k = i;
            while (k < s.size() && (isalnum((unsigned char)s[k]))) {
                // variable names are short; stop before an exponent digit
                if (isdigit((unsigned char)s[k]) && k > i + 1) break;
                ++k;
            }
            auto v = var_index(s.substr(i, k - i));
            if (!v) return fail("unknown variable '" + s.substr(i, k - i) + "'");
            i = k;
            int exp = 1;
            skip();
            if (i < s.size() && s[i] == '^') {
                ++i;
                skip();
                size_t d = i;
                while (d < s.size() && isdigit((unsigned char)s[d])) ++d;
                if (d == i) return fail("missing exponent");
                exp = std::stoi(s.substr(i, d - i));
                i = d;
            }
            e[*v] += exp;
            saw_var = true;
        }
        if (!saw_coef && !saw_var) return fail("expected a term");
        out.add_term(e[0], e[1], Rat(sign) * coef);
        first = false;
    }
    return out;
}

inline std::variant<FormPair, ParseError> parse_form_pair(const std::string& h1s,
                                                          const std::string& h2s) {
    auto p1 = parse_poly(h1s);
    if (std::holds_alternative<ParseError>(p1)) return std::get<ParseError>(p1);
    auto p2 = parse_poly(h2s);
    if (std::holds_alternative<ParseError>(p2)) return std::get<ParseError>(p2);
    try {
        auto f1 = BinaryForm<Rat>::of(std::get<Poly2<Rat>>(p1));
        auto f2 = BinaryForm<Rat>::of(std::get<Poly2<Rat>>(p2));
        int n = std::max(f1.n, f2.n);
        return FormPair(BinaryForm<Rat>(n, f1.p), BinaryForm<Rat>(n, f2.p));
    } catch (const std::domain_error& e) {
        return ParseError{0, e.what()};
    }
}

// ---------------------------------------------------------------------------
// JSON emitters
// ---------------------------------------------------------------------------

inline json to_json(const CycleType& c) { return json(c.parts); }

inline json to_json(const Passport& p, std::optional<bool> belyi = std::nullopt) {
    json j{{"n", p.n}, {"c0", to_json(p.c0)}, {"c1", to_json(p.c1)}, {"cinf", to_json(p.cinf)}};
    j["two_point_branched"] = p.two_point_branched();
    if (belyi) j["belyi"] = *belyi;
    return j;
}

inline json to_json(const res::Resolution& r) {
    json verts = json::array();
    for (int i = 0; i < (int)r.graph.verts.size(); ++i) {
        auto& v = r.graph.verts[i];
        json jv{{"id", i}, {"kind", v.exceptional ? "exceptional" : "branch"}, {"weight", v.weight}};
        if (v.exceptional) jv["birth"] = v.birth;
        if (!v.exceptional && v.factor >= 0) jv["factor"] = v.factor;
        verts.push_back(jv);
    }
    json edges = json::array();
    for (auto& [a, b] : r.graph.edges) edges.push_back(json::array({a, b}));
    json trails = json::array();
    json info = json::array();
    int germ_count = 0;
    for (size_t t = 0; t < r.trails.size(); ++t) {
        auto& tr = r.trails[t];
        trails.push_back(tr.verts);
        json jt{{"vertices", tr.verts},
                {"exceptional", tr.exceptional},
                {"completely_exceptional", tr.completely_exceptional},
                {"label", "trail" + std::to_string(t + 1)}};
        if (!tr.exceptional) jt["alias"] = "B" + std::to_string(++germ_count);
        if (tr.exceptional) {
            jt["weights"] = tr.exc_weights;
            jt["order"] = hj::chain_group(hj::WeightedChain(tr.exc_weights)).order;
        }
        info.push_back(jt);
    }
    return json{{"vertices", verts},
                {"edges", edges},
                {"center", r.graph.center},
                {"blowups", r.graph.blowups},
                {"trails", trails},
                {"trail_info", info}};
}

inline std::string to_dot(const res::Resolution& r) {
    std::string s = "graph resolution {\n";
    for (int i = 0; i < (int)r.graph.verts.size(); ++i) {
        auto& v = r.graph.verts[i];
        s += "  v" + std::to_string(i) + " [label=\"" +
             (v.exceptional ? "E" + std::to_string(v.birth + 1) + " w=" + std::to_string(v.weight)
                            : "B") +
             "\"" + (i == r.graph.center ? ", shape=doublecircle" : "") +
             (v.exceptional ? "" : ", shape=box") + "];\n";
    }
    for (auto& [a, b] : r.graph.edges)
        s += "  v" + std::to_string(a) + " -- v" + std::to_string(b) + ";\n";
    s += "}\n";
    return s;
}

inline json to_json(const cls::TypeReport& rep) {
    json assigns = json::array();
    const char* names[3] = {"c0", "c1", "cinf"};
    for (auto& a : rep.assignments) {
        assigns.push_back(json{{"c1", names[a.src[0]]},
                               {"c2", names[a.src[1]]},
                               {"c3", names[a.src[2]]},
                               {"ok", a.ok},
                               {"r1", a.r1},
                               {"r2", a.r2}});
    }
    return json{{"label", rep.label.str()}, {"typed", rep.typed}, {"assignments", assigns}};
}

inline json to_json(const cls::FiberDescription& d) {
    json j{{"label", d.label.str()}, {"n", d.n},       {"nonempty", d.nonempty},
           {"complete", d.complete},  {"type", to_json(d.type_report)}};
    if (d.nonempty && d.complete) {
        j["m0"] = d.m0;
        j["minimal_degree"] = d.minimal_degree;
    }
    if (!d.witness.empty()) j["witness"] = d.witness;
    if (!d.note.empty()) j["note"] = d.note;
    json scen = json::array();
    for (auto& s : d.scenarios) {
        json js{{"ok", s.ok}};
        if (s.trail_a >= 0) {
            js["trails"] = json::array({s.trail_a, s.trail_b});
        }
        if (!s.detail.empty()) js["detail"] = s.detail;
        if (!s.chain.empty()) js["chain"] = s.chain;
        if (s.m0) js["m0"] = s.m0;
        js["central_exponent"] = s.central_exponent;
        if (!s.germs.empty()) {
            json germs = json::array();
            for (auto& g : s.germs)
                germs.push_back(json{{"vertex", g.down_vertex},
                                     {"chain_index", (long)g.chain_index},
                                     {"class", g.loop_class}});
            js["germ_components"] = germs;
        }
        scen.push_back(js);
    }
    j["scenarios"] = scen;
    json ser = json::array();
    for (auto& s : d.series) {
        json js{{"style", s.style},
                {"family", s.family},
                {"formula", s.formula},
                {"constraints", s.constraints},
                {"components", s.components}};
        if (!s.exponents.empty()) js["exponents"] = s.exponents;
        ser.push_back(js);
    }
    j["series"] = ser;
    return j;
}

inline json to_json(const cls::CoverFormula& c) {
    auto expr = [](const cls::FExpr& e) {
        json terms = json::array();
        for (auto& t : e.base)
            terms.push_back(json{
                {"coef", t.c.get_str()}, {"omega", t.omega_pow}, {"z", t.z}, {"w", t.w}});
        return json{{"base", terms}, {"pow", e.pow}};
    };
    json j{{"family", c.family},
           {"u", expr(c.u)},
           {"v", expr(c.v)},
           {"degree", c.degree},
           {"params", c.params}};
    if (c.omega_modulus)
        j["omega"] = json{{"modulus", c.omega_modulus}, {"j", c.omega_j}};
    else
        j["omega"] = nullptr;
    j["u_text"] = expr_str(c.u, c.omega_j, c.omega_modulus);
    j["v_text"] = expr_str(c.v, c.omega_j, c.omega_modulus);
    return j;
}

inline std::optional<cls::CoverFormula> formula_from_json(const json& j, std::string* err) {
    try {
        cls::CoverFormula c;
        auto expr = [&](const json& je) {
            cls::FExpr e;
            e.pow = je.value("pow", 1);
            for (auto& t : je.at("base")) {
                cls::FTerm term;
                auto r = rat_parse(t.at("coef").is_string() ? t.at("coef").get<std::string>()
                                                            : std::to_string(t.at("coef").get<long>()));
                if (!r) throw std::runtime_error("bad coefficient in formula");
                term.c = *r;
                term.omega_pow = t.value("omega", 0);
                term.z = t.value("z", 0);
                term.w = t.value("w", 0);
                e.base.push_back(term);
            }
            return e;
        };
        c.u = expr(j.at("u"));
        c.v = expr(j.at("v"));
        c.family = j.value("family", std::string());
        if (j.contains("omega") && !j.at("omega").is_null()) {
            c.omega_modulus = j.at("omega").at("modulus").get<int>();
            c.omega_j = j.at("omega").at("j").get<int>();
        }
        if (j.contains("params"))
            for (auto& [k, v] : j.at("params").items()) c.params[k] = v.get<long>();
        c.degree = j.value("degree", 0L);
        return c;
    } catch (const std::exception& e) {
        if (err) *err = e.what();
        return std::nullopt;
    }
}

inline json to_json(const cls::VerifyResult& v) {
    json comps = json::array();
    for (auto& c : v.components)
        comps.push_back(json{{"factor", c.factor}, {"multiplicity", c.multiplicity}, {"image", c.image}});
    json j{{"ok", v.ok}, {"components", comps}};
    if (v.label) j["type"] = v.label->str();
    if (v.branch_germ) j["branch_germ"] = v.branch_germ->str("u", "v");
    if (!v.error.empty()) j["error"] = v.error;
    return j;
}

}  // namespace adecover::io
