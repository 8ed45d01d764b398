#pragma once

// Command-line front end. Every subcommand maps onto one library operation;
// outputs are JSON on stdout (DOT for graphs on request), domain failures
// are machine-readable JSON on stderr with exit code 1, usage problems exit
// with code 2.

#include "adecover/io.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace adecover::cli {

using io::json;

namespace detail {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::vector<long> parse_weights(const std::string& s) {
    std::vector<long> w;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            w.push_back(std::stol(tok));
        } catch (...) {
            throw UsageError("bad weight list '" + s + "'");
        }
    }
    return w;
}

inline std::vector<std::string> parse_names(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    return out;
}

inline Poly2<Rat> need_poly(const std::string& s) {
    auto r = io::parse_poly(s);
    if (std::holds_alternative<io::ParseError>(r)) {
        auto e = std::get<io::ParseError>(r);
        throw UsageError("polynomial parse error at position " + std::to_string(e.pos) + ": " +
                         e.message);
    }
    return std::get<Poly2<Rat>>(r);
}

inline FormPair need_pair(const std::string& h1, const std::string& h2) {
    auto r = io::parse_form_pair(h1, h2);
    if (std::holds_alternative<io::ParseError>(r))
        throw UsageError("form pair: " + std::get<io::ParseError>(r).message);
    return std::get<FormPair>(r);
}

inline PermTriple need_triple(const std::string& s0s, const std::string& s1s) {
    auto p0 = parse_permutation(s0s);
    if (!p0) throw UsageError("bad cycle notation: " + s0s);
    auto p1 = parse_permutation(s1s, p0->degree());
    if (!p1) throw UsageError("bad cycle notation: " + s1s);
    if (p1->degree() > p0->degree()) p0 = parse_permutation(s0s, p1->degree());
    return PermTriple::from_two(*p0, *p1);
}

inline res::AdeLabel need_label(const std::string& s) {
    auto l = res::AdeLabel::parse(s);
    if (!l) throw UsageError("bad ADE label '" + s + "'");
    return *l;
}

// trail pick by alias: trailK (1-based engine index) or Bj (j-th germ trail)
inline int trail_by_name(const res::Resolution& r, std::string name) {
    for (auto& c : name) c = (char)tolower((unsigned char)c);
    if (name.rfind("trail", 0) == 0) {
        int k = std::stoi(name.substr(5));
        if (k < 1 || k > (int)r.trails.size()) throw UsageError("no such trail: " + name);
        return k - 1;
    }
    if (name.rfind("b", 0) == 0) {
        int want = std::stoi(name.substr(1));
        int seen = 0;
        for (int i = 0; i < (int)r.trails.size(); ++i)
            if (!r.trails[i].exceptional && ++seen == want) return i;
        throw UsageError("no such germ trail: " + name);
    }
    throw UsageError("trail names are trailK or Bj, got '" + name + "'");
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    CLI::App app{"covers of plane curve germs with ADE branch types and their Belyi images"};
    app.require_subcommand(1);
    bool quiet = false, want_dot = false, want_json = true;
    app.add_flag("--quiet", quiet, "suppress normal output");
    app.add_flag("--dot", want_dot, "emit DOT instead of JSON where applicable");
    app.add_flag("--json", want_json, "emit JSON (default)");

    // resolve
    auto* resolve = app.add_subcommand("resolve", "resolve a plane curve germ by blowups");
    std::string equation;
    resolve->add_option("--equation", equation, "germ polynomial in u, v")->required();

    // hj
    auto* hjcmd = app.add_subcommand("hj", "weighted chain calculus");
    hjcmd->require_subcommand(1);
    auto* hjcf = hjcmd->add_subcommand("cf", "continued fraction of a weight chain");
    std::string cf_weights;
    hjcf->add_option("weights", cf_weights, "comma-separated weights")->required();
    auto* hjchain = hjcmd->add_subcommand("chain", "cyclic group of a weight chain");
    std::string chain_weights;
    long chain_mark = 0;
    hjchain->add_option("weights", chain_weights)->required();
    hjchain->add_option("--mark", chain_mark, "1-based marked position");
    auto* hjdelta = hjcmd->add_subcommand("delta", "cover supplement of the A_{n,n-1} chain");
    long delta_n = 0, delta_m = 0;
    hjdelta->add_option("--n", delta_n)->required();
    hjdelta->add_option("--m", delta_m)->required();

    // belyi
    auto* belyi = app.add_subcommand("belyi", "passports of Belyi pairs");
    belyi->require_subcommand(1);
    std::string h1s, h2s, s0s, s1s;
    auto* bp = belyi->add_subcommand("passport", "cycle type passport");
    bp->add_option("--h1", h1s);
    bp->add_option("--h2", h2s);
    bp->add_option("--s0", s0s);
    bp->add_option("--s1", s1s);
    auto* bc = belyi->add_subcommand("check", "Belyi property / triple diagnostics");
    bc->add_option("--h1", h1s);
    bc->add_option("--h2", h2s);
    bc->add_option("--s0", s0s);
    bc->add_option("--s1", s1s);

    // type
    auto* typec = app.add_subcommand("type", "ADE typing of a passport");
    std::string type_label;
    typec->add_option("--as", type_label, "ADE label")->required();
    typec->add_option("--h1", h1s);
    typec->add_option("--h2", h2s);
    typec->add_option("--s0", s0s);
    typec->add_option("--s1", s1s);

    // fiber
    auto* fiber = app.add_subcommand("fiber", "fiber description over a Belyi pair");
    std::string fiber_label;
    fiber->add_option("--type", fiber_label)->required();
    fiber->add_option("--h1", h1s);
    fiber->add_option("--h2", h2s);
    fiber->add_option("--s0", s0s);
    fiber->add_option("--s1", s1s);

    // catalog
    auto* catalog = app.add_subcommand("catalog", "cover formulas with two-point-branched image");
    std::string cat_label;
    cls::CatalogParams cp;
    bool bel2_flag = false;
    int family = 0;
    catalog->add_option("--type", cat_label)->required();
    catalog->add_flag("--bel2", bel2_flag, "covers with two-point-branched image (the default)");
    catalog->add_option("--n", cp.n);
    catalog->add_option("--m1", cp.m1);
    catalog->add_option("--m2", cp.m2);
    catalog->add_option("--m", cp.m1, "alias of --m1");
    catalog->add_option("--m0", cp.m2, "alias of --m2");
    catalog->add_option("--k1", cp.k1);
    catalog->add_option("--k2", cp.k2);
    catalog->add_option("--n1", cp.n1);
    catalog->add_option("--j", cp.j);
    catalog->add_option("--family", family, "1-based family index within the label");

    // verify
    auto* verify = app.add_subcommand("verify", "verify a cover formula's branch type");
    std::string formula_json;
    verify->add_option("--formula", formula_json, "CoverFormula as JSON")->required();

    // pullback
    auto* pullback = app.add_subcommand("pullback", "cyclic pullback of a germ resolution");
    std::string pb_label, pb_branch;
    long pb_degree = 0;
    pullback->add_option("--type", pb_label)->required();
    pullback->add_option("--branch", pb_branch, "two trail names, comma separated")->required();
    pullback->add_option("--degree", pb_degree)->required();

    // monodromy
    auto* monod = app.add_subcommand("monodromy", "numerical monodromy of a form pair");
    double radius = 0.5;
    int seed_steps = 64;
    monod->add_option("--h1", h1s)->required();
    monod->add_option("--h2", h2s)->required();
    monod->add_option("--radius", radius, "loop radius as a fraction of 1/2");
    monod->add_option("--seed-step", seed_steps, "initial loop subdivisions");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << json{{"error", "usage"}, {"detail", e.what()}}.dump() << "\n";
        return 2;
    }

    auto emit = [&](const json& j) {
        if (!quiet) out << j.dump(2) << "\n";
    };

    try {
        if (*resolve) {
            auto g = detail::need_poly(equation);
            auto r = res::resolve_minimal(res::GermCurve(g));
            if (want_dot)
                out << io::to_dot(r);
            else
                emit(io::to_json(r));
            return 0;
        }
        if (*hjcf) {
            auto res0 = hj::cf_eval(hj::WeightedChain(detail::parse_weights(cf_weights)));
            json j{{"m0", res0.type.m0}, {"q", res0.type.q}};
            if (!res0.minimal) j["minimal"] = false;
            emit(j);
            return 0;
        }
        if (*hjchain) {
            std::optional<size_t> mark;
            auto w = detail::parse_weights(chain_weights);
            if (chain_mark > 0) {
                if (chain_mark > (long)w.size()) throw detail::UsageError("mark out of range");
                mark = (size_t)(chain_mark - 1);
            }
            auto g = hj::chain_group(hj::WeightedChain(w, mark));
            json j{{"order", g.order}, {"exponents", g.exponents}};
            if (mark) j["marked_generates"] = g.marked_generates();
            emit(j);
            return 0;
        }
        if (*hjdelta) {
            auto d = hj::supplement_delta(delta_n, delta_m);
            emit(json{{"delta", d.delta},
                      {"residual", json::array({d.residual.m0, d.residual.q})}});
            return 0;
        }
        if (*bp || *bc) {
            if (!h1s.empty() || !h2s.empty()) {
                if (h1s.empty() || h2s.empty())
                    throw detail::UsageError("need both --h1 and --h2");
                auto f = detail::need_pair(h1s, h2s);
                if (*bc) {
                    auto w = non_belyi_witness(f);
                    json j{{"belyi", !w.has_value()}};
                    if (w) j["witness"] = w->str();
                    emit(j);
                    return 0;
                }
                auto p = passport_of_forms(f);
                emit(io::to_json(p, true));
                return 0;
            }
            if (s0s.empty() && s1s.empty())
                throw detail::UsageError("need --h1/--h2 or --s0/--s1");
            auto t = detail::need_triple(s0s, s1s);
            auto p = passport_of_triple(t);
            if (*bc) {
                emit(json{{"belyi", true},
                          {"transitive", true},
                          {"group_order",
                           t.degree() <= 12 ? json(group_order({t.s0, t.s1})) : json(nullptr)}});
                return 0;
            }
            emit(io::to_json(p, true));
            return 0;
        }
        if (*typec || *fiber) {
            std::string label = *typec ? type_label : fiber_label;
            auto T = detail::need_label(label);
            Passport p;
            std::optional<FormPair> forms;
            if (!h1s.empty()) {
                auto f = detail::need_pair(h1s, h2s);
                p = passport_of_forms(f);
                forms = f;
            } else if (!s0s.empty() || !s1s.empty()) {
                p = passport_of_triple(detail::need_triple(s0s, s1s));
            } else
                throw detail::UsageError("need --h1/--h2 or --s0/--s1");
            if (*typec) {
                emit(io::to_json(cls::type_check(p, T)));
                return 0;
            }
            emit(io::to_json(cls::fiber_describe(p, forms, T)));
            return 0;
        }
        if (*catalog) {
            cp.family = family;
            auto T = detail::need_label(cat_label);
            auto c = cls::two_point_catalog(T, cp);
            emit(io::to_json(c));
            return 0;
        }
        if (*verify) {
            json j;
            try {
                j = json::parse(formula_json);
            } catch (const json::exception& e) {
                throw detail::UsageError(std::string("formula is not valid JSON: ") + e.what());
            }
            std::string perr;
            auto c = io::formula_from_json(j, &perr);
            if (!c) throw detail::UsageError("bad formula: " + perr);
            emit(io::to_json(cls::verify_cover(*c)));
            return 0;
        }
        if (*pullback) {
            auto T = detail::need_label(pb_label);
            auto r = res::resolve_minimal(res::ade_germ(T));
            auto names = detail::parse_names(pb_branch);
            if (names.size() != 2) throw detail::UsageError("--branch needs two trail names");
            int a = detail::trail_by_name(r, names[0]);
            int b = detail::trail_by_name(r, names[1]);
            auto out2 = pull::pullback_cyclic(r, a, b, pb_degree);
            if (pull::succeeded(out2)) {
                auto& bz = std::get<pull::BZeroChain>(out2);
                emit(json{{"ok", true},
                          {"chain", bz.chain.w},
                          {"mark", bz.chain.mark ? json((long)*bz.chain.mark) : json(nullptr)},
                          {"m0", bz.m0},
                          {"central_exponent", bz.central_exponent},
                          {"generates", bz.generates()}});
            } else {
                auto& w = std::get<pull::FailureWitness>(out2);
                json j{{"ok", false}, {"kind", w.kind_str()}, {"detail", w.detail}};
                if (!w.chain.empty()) j["chain"] = w.chain;
                if (w.m0) j["m0"] = w.m0;
                emit(j);
                return 1;
            }
            return 0;
        }
        if (*monod) {
            auto f = detail::need_pair(h1s, h2s);
            mono::TrackerConfig cfg;
            cfg.radius_fraction = radius;
            cfg.seed_steps = seed_steps;
            auto r = mono::monodromy_triple(f, cfg);
            emit(json{{"s0", r.triple.s0.cycle_str()},
                      {"s1", r.triple.s1.cycle_str()},
                      {"sinf", r.triple.sinf.cycle_str()},
                      {"verified_cycle_types", r.verified_cycle_types}});
            return 0;
        }
        throw detail::UsageError("no subcommand");
    } catch (const detail::UsageError& e) {
        err << json{{"error", "usage"}, {"detail", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << json{{"error", "domain"}, {"detail", e.what()}}.dump() << "\n";
        return 1;
    }
}

}  // namespace adecover::cli
