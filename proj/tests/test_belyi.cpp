#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"

#include <random>

using namespace adecover;
using oracles::cheb4;
using oracles::dessin3;
using oracles::xn_pair;

namespace {

auto mk = [](int a, int b, long c = 1) { return oracles::mono(a, b, c); };

Passport pass(std::vector<int> a, std::vector<int> b, std::vector<int> c) {
    Passport p;
    p.c0 = CycleType(std::move(a));
    p.c1 = CycleType(std::move(b));
    p.cinf = CycleType(std::move(c));
    p.n = p.c0.total();
    return p;
}

}  // namespace

TEST_CASE("degree formula on passports") {
    CHECK(check_riemann_hurwitz(pass({3}, {1, 1, 1}, {3})));
    CHECK(check_riemann_hurwitz(pass({2, 1}, {2, 1}, {3})));
    CHECK_FALSE(check_riemann_hurwitz(pass({2}, {2}, {2})));
    CHECK_THROWS_AS(check_riemann_hurwitz(pass({2}, {1, 1, 1}, {2})), MalformedPassport);
}

TEST_CASE("passports of triples") {
    auto t = PermTriple::from_two(*parse_permutation("(1 2 3)", 3), Permutation::identity(3));
    auto p = passport_of_triple(t);
    CHECK(p.c0.parts == std::vector<int>{3});
    CHECK(p.c1.parts == std::vector<int>{1, 1, 1});
    CHECK(p.cinf.parts == std::vector<int>{3});
    CHECK(p.two_point_branched());

    auto t2 = PermTriple::from_two(*parse_permutation("(1 2)", 3), *parse_permutation("(2 3)", 3));
    auto p2 = passport_of_triple(t2);
    CHECK(p2.c0.parts == std::vector<int>{2, 1});
    CHECK(p2.c1.parts == std::vector<int>{2, 1});
    CHECK(p2.cinf.parts == std::vector<int>{3});
    CHECK_FALSE(p2.two_point_branched());

    // (1 2 3), (1 2 3): passport {(3),(3),(3)} has positive genus
    auto c3 = *parse_permutation("(1 2 3)", 3);
    CHECK_THROWS_AS(passport_of_triple(PermTriple::from_two(c3, c3)), NotGenusZero);
}

TEST_CASE("jacobian forms") {
    for (int n = 2; n <= 5; ++n) {
        auto j = jacobian_form(xn_pair(n));
        CHECK(j.p == mk(n - 1, n - 1, (long)n * n));
        CHECK(j.n == 2 * n - 2);
    }
    // the degree-3 pair: J = 18 x1 x2^2 (x2 - x1), verified by expansion
    auto j = jacobian_form(dessin3());
    CHECK(j.p == mk(1, 2, 18) * (mk(0, 1) - mk(1, 0)));

    // degree property on random coprime pairs
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> coef(-3, 3);
    int done = 0;
    while (done < 20) {
        int n = 2 + (int)(rng() % 3);
        Poly2<Rat> a, b;
        for (int i = 0; i <= n; ++i) {
            a.add_term(i, n - i, Rat(coef(rng)));
            b.add_term(i, n - i, Rat(coef(rng)));
        }
        try {
            FormPair f(BinaryForm<Rat>(n, a), BinaryForm<Rat>(n, b));
            CHECK(jacobian_form(f).n == 2 * n - 2);
            ++done;
        } catch (const std::domain_error&) {
        }
    }
}

TEST_CASE("the Belyi property") {
    for (int n = 1; n <= 6; ++n) CHECK(is_belyi(xn_pair(n)));
    CHECK(is_belyi(dessin3()));
    // h1 - h2 of the degree-3 pair is -(x1 - x2)^2 (2 x1 + x2)
    auto f = dessin3();
    Poly2<Rat> diff = f.h1.p - f.h2.p;
    Poly2<Rat> expect = -((mk(1, 0) - mk(0, 1)).pow(2) * (mk(1, 0, 2) + mk(0, 1)));
    CHECK(diff == expect);

    // (x1^3 + x2^3 : x2^3) is z^3 + 1: branched over {1, inf} only, so it is
    // a Belyi pair (gcd-chain oracle: rad J = x1 x2 divides h1 h2 (h1 - h2))
    FormPair g(BinaryForm<Rat>(3, mk(3, 0) + mk(0, 3)), BinaryForm<Rat>(3, mk(0, 3)));
    CHECK(is_belyi(g));
    auto pg = passport_of_forms(g);
    CHECK(pg.c0.parts == std::vector<int>{1, 1, 1});
    CHECK(pg.c1.parts == std::vector<int>{3});
    CHECK(pg.cinf.parts == std::vector<int>{3});
    CHECK(pg.two_point_branched());

    // a pair with a genuine extra critical value
    FormPair h(BinaryForm<Rat>(3, mk(3, 0) + mk(0, 3)), BinaryForm<Rat>(3, mk(1, 2)));
    CHECK_FALSE(is_belyi(h));
    CHECK(non_belyi_witness(h).has_value());
    CHECK_THROWS_AS(passport_of_forms(h), NotBelyi);
}

TEST_CASE("passports of forms") {
    auto p = passport_of_forms(xn_pair(3));
    CHECK(p.c0.parts == std::vector<int>{3});
    CHECK(p.c1.parts == std::vector<int>{1, 1, 1});
    CHECK(p.cinf.parts == std::vector<int>{3});

    auto p2 = passport_of_forms(dessin3());
    CHECK(p2.c0.parts == std::vector<int>{2, 1});
    CHECK(p2.c1.parts == std::vector<int>{2, 1});
    CHECK(p2.cinf.parts == std::vector<int>{3});

    auto p4 = passport_of_forms(cheb4());
    CHECK(p4.c0.parts == std::vector<int>{2, 2});
    CHECK(p4.c1.parts == std::vector<int>{2, 1, 1});
    CHECK(p4.cinf.parts == std::vector<int>{4});
}

TEST_CASE("triple and form passports agree on shared fixtures") {
    for (int n = 2; n <= 6; ++n) {
        std::vector<int> img(n);
        for (int i = 0; i < n; ++i) img[i] = (i + 1) % n + 1;
        Permutation cyc(img);
        auto pt = passport_of_triple(PermTriple::from_two(cyc, Permutation::identity(n)));
        auto pf = passport_of_forms(xn_pair(n));
        CHECK(pt.c0 == pf.c0);
        CHECK(pt.c1 == pf.c1);
        CHECK(pt.cinf == pf.cinf);
    }
    auto t = PermTriple::from_two(*parse_permutation("(1 2)", 3), *parse_permutation("(2 3)", 3));
    auto pt = passport_of_triple(t);
    auto pf = passport_of_forms(dessin3());
    CHECK(pt.c0 == pf.c0);
    CHECK(pt.c1 == pf.c1);
    CHECK(pt.cinf == pf.cinf);
}

TEST_CASE("ramification bookkeeping") {
    for (auto f : {xn_pair(4), dessin3(), cheb4()}) {
        auto p = passport_of_forms(f);
        int n = p.n;
        int total = (n - p.c0.count()) + (n - p.c1.count()) + (n - p.cinf.count());
        CHECK(total == 2 * n - 2);
        CHECK(jacobian_form(f).n == 2 * n - 2);
    }
}

TEST_CASE("partial resolutions expose the blowup steps") {
    // one step on the node: done, the exceptional meets both branches
    auto a1 = res::resolve_partial(res::ade_germ({'A', 1}), 1);
    CHECK(a1.finished);
    CHECK(a1.graph.blowups == 1);

    // one step on a smooth germ: transversal
    Poly2<Rat> sm = mk(1, 0) - mk(0, 2);
    auto a0 = res::resolve_partial(res::GermCurve(sm), 1);
    CHECK(a0.finished);

    // the cusp: after one step the transform is smooth but tangent to the
    // exceptional curve; after two the tangency is gone but three components
    // meet; after three it is normal crossings
    auto c1 = res::resolve_partial(res::ade_germ({'A', 2}), 1);
    REQUIRE(c1.pending.size() == 1);
    CHECK(c1.pending[0].on_curve);
    CHECK(c1.pending[0].smooth);
    CHECK_FALSE(c1.pending[0].transversal);
    CHECK(c1.pending[0].exceptionals == 1);

    auto c2 = res::resolve_partial(res::ade_germ({'A', 2}), 2);
    REQUIRE(c2.pending.size() == 1);
    CHECK(c2.pending[0].smooth);
    CHECK(c2.pending[0].exceptionals == 2);

    auto c3 = res::resolve_partial(res::ade_germ({'A', 2}), 3);
    CHECK(c3.finished);
}

TEST_CASE("the germ equations") {
    CHECK(res::ade_germ({'A', 1}).poly == mk(2, 0) - mk(0, 2));
    CHECK(res::ade_germ({'D', 4}).poly == mk(0, 1) * (mk(2, 0) - mk(0, 2)));
    CHECK(res::ade_germ({'E', 8}).poly == mk(3, 0) - mk(0, 5));
    CHECK_THROWS_AS(res::ade_germ({'D', 3}), std::domain_error);
    CHECK_THROWS_AS(res::ade_germ({'A', -1}), std::domain_error);
}
