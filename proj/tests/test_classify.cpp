#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "adecover/classify.hpp"

using namespace adecover;
using namespace adecover::cls;
using res::AdeLabel;

namespace {

using P = Poly2<Rat>;

P mono(int a, int b, long c = 1) { return P::monomial(a, b, Rat(c)); }

FormPair xn_pair(int n) {
    return FormPair(BinaryForm<Rat>(n, mono(n, 0)), BinaryForm<Rat>(n, mono(0, n)));
}

// degree-3 pair with passport {(2,1),(2,1),(3)}
FormPair dessin3() {
    P h1 = mono(2, 0) * (mono(0, 1, 3) - mono(1, 0, 2));  // x1^2 (3x2 - 2x1)
    P h2 = mono(0, 3);
    return FormPair(BinaryForm<Rat>::of(h1), BinaryForm<Rat>(3, h2));
}

Passport pass(std::vector<int> a, std::vector<int> b, std::vector<int> c) {
    Passport p;
    p.c0 = CycleType(std::move(a));
    p.c1 = CycleType(std::move(b));
    p.cinf = CycleType(std::move(c));
    p.n = p.c0.total();
    return p;
}

}  // namespace

TEST_CASE("type check fixtures") {
    // the squaring pair has type A3 via c1 = (2), k+1 = 2
    auto rep = type_check(pass({2}, {1, 1}, {2}), {'A', 3});
    CHECK(rep.typed);
    // every pair has the three-lines type
    CHECK(type_check(pass({2, 1}, {2, 1}, {3}), {'D', 4}).typed);
    CHECK(type_check(pass({3}, {1, 1, 1}, {3}), {'D', 4}).typed);
    // the degree-3 pair has type E7: c1 = (2,1) with r1 = 1, c2 = (3)
    auto e7 = type_check(pass({2, 1}, {2, 1}, {3}), {'E', 7});
    CHECK(e7.typed);
    bool found = false;
    for (auto& a : e7.assignments)
        if (a.ok && a.r1 == 1 && a.r2 == 0) found = true;
    CHECK(found);
    // x^2 passport carries the A2 type only through the all-ones slot
    CHECK(type_check(pass({2}, {1, 1}, {2}), {'A', 2}).typed);
    // but x^4 does not: (4) never fits parts of {3, 1} and (1,1,1,1) needs r1 = 4
    CHECK_FALSE(type_check(pass({4}, {1, 1, 1, 1}, {4}), {'A', 2}).typed);
}

TEST_CASE("contractibility counts") {
    auto d4 = res::resolve_minimal(res::ade_germ({'D', 4}));
    auto cc = contractibility_counts(d4, pass({2, 1}, {2, 1}, {3}), {0, 1, 2});
    CHECK(cc.ok);
    CHECK(cc.r == std::array<int, 3>{0, 0, 0});

    // A3 with the (2,2)-type over the exceptional trail: order 2 divides 2
    auto a3 = res::resolve_minimal(res::ade_germ({'A', 3}));
    Passport p4 = pass({2, 2}, {1, 1, 1, 1}, {4});
    int exc = -1;
    for (int i = 0; i < 3; ++i)
        if (a3.trails[i].exceptional) exc = i;
    std::array<int, 3> assign{};
    for (int i = 0, s = 1; i < 3; ++i)
        if (i == exc)
            assign[i] = 0;  // (2,2) over the exceptional trail
        else
            assign[i] = s++;
    auto cc2 = contractibility_counts(a3, p4, assign);
    CHECK(cc2.r[exc] == 0);
}

TEST_CASE("catalog fixtures") {
    CatalogParams p;
    p.n = 2;
    p.m1 = 1;
    p.m2 = 1;
    auto a1 = two_point_catalog({'A', 1}, p);
    CHECK(expand_expr<Rat>(a1.u, Rat(1)) == mono(2, 0));
    CHECK(expand_expr<Rat>(a1.v, Rat(1)) == mono(0, 2));
    CHECK(a1.degree == 4);

    CatalogParams pe;
    pe.m1 = 1;
    pe.m2 = 2;
    auto e7 = two_point_catalog({'E', 7}, pe);
    CHECK(expand_expr<Rat>(e7.u, Rat(1)) == mono(3, 0));
    CHECK(expand_expr<Rat>(e7.v, Rat(1)) == mono(2, 0) + mono(0, 2));

    CHECK_THROWS_AS(two_point_catalog({'A', 2}, p), NoTwoPointFamily);
    CHECK_THROWS_AS(two_point_catalog({'E', 6}, p), NoTwoPointFamily);
    CHECK_THROWS_AS(two_point_catalog({'E', 8}, p), NoTwoPointFamily);
}

TEST_CASE("forms construction") {
    // standard two-point pair fails the point condition for any m1
    CHECK_THROWS_AS(d4_construct(xn_pair(3), 2, 1), PointConditionError);
    CHECK_THROWS_AS(d4_construct(xn_pair(3), 2, 3), PointConditionError);
    // (1,1) on a two-point pair constructs, but the branch germ is a node
    auto t = d4_construct(xn_pair(3), 1, 1);
    CHECK_FALSE(t.in_rigid_class);

    auto f = dessin3();
    auto c1 = d4_construct(f, 1, 1);
    CHECK(c1.degree == 9);
    CHECK(c1.in_rigid_class);
    CHECK(c1.u == f.h1.p);

    auto c2 = d4_construct(f, 2, 3);
    CHECK(c2.degree == 54);
    // u = z^4 (3w^3 - 2z^2), v = w^9
    CHECK(c2.u == mono(4, 0) * (mono(0, 3, 3) - mono(2, 0, 2)));
    CHECK(c2.v == mono(0, 9));
}

TEST_CASE("beta of a cover") {
    auto f = beta_of_cover(mono(2, 0) * (mono(0, 1, 3) - mono(1, 0, 2)), mono(0, 3));
    CHECK(f.degree() == 3);
    // lowest parts pick out the forms
    P u = mono(2, 0) + mono(5, 0);  // z^2 + z^5
    P v = mono(0, 2) + mono(3, 1);  // w^2 + z^3 w
    auto g = beta_of_cover(u, v);
    CHECK(g.h1.p == mono(2, 0));
    CHECK(g.h2.p == mono(0, 2));
    CHECK_THROWS_AS(beta_of_cover(mono(2, 0), mono(3, 0)), NotOverCenter);
}

TEST_CASE("round trip: construct then beta") {
    for (int n = 2; n <= 6; ++n) {
        auto f = xn_pair(n);
        auto c = d4_construct(f, 1, 1);
        auto g = beta_of_cover(c.u, c.v);
        CHECK(g.h1.p == f.h1.p);
        CHECK(g.h2.p == f.h2.p);
    }
    auto f = dessin3();
    auto c = d4_construct(f, 1, 1);
    auto g = beta_of_cover(c.u, c.v);
    CHECK(g.h1.p == f.h1.p);
    CHECK(g.h2.p == f.h2.p);
}

TEST_CASE("normal form verification fixtures") {
    // u = (z^2 + w^3)^2, v = w: branch u(u - v^6), type A11
    CatalogParams p;
    p.n = 2;
    p.m1 = 2;
    p.m2 = 3;
    p.family = 1;
    auto c = two_point_catalog({'A', 11}, p);
    auto vr = verify_cover(c);
    REQUIRE(vr.ok);
    CHECK(*vr.label == AdeLabel{'A', 11});

    // u = z^2, v = w^2: branch uv, node
    CatalogParams q;
    q.n = 2;
    q.m1 = 1;
    q.m2 = 1;
    auto c2 = two_point_catalog({'A', 1}, q);
    auto vr2 = verify_cover(c2);
    REQUIRE(vr2.ok);
    CHECK(*vr2.label == AdeLabel{'A', 1});

    // E7 with (m1, m2) = (1, 2)
    CatalogParams pe;
    pe.m1 = 1;
    pe.m2 = 2;
    auto c3 = two_point_catalog({'E', 7}, pe);
    auto vr3 = verify_cover(c3);
    REQUIRE(vr3.ok);
    CHECK(*vr3.label == AdeLabel{'E', 7});
}

TEST_CASE("omega families verify in the cyclotomic fields") {
    // A2k+1.omega at n = 3: k = 2, A5
    CatalogParams p;
    p.n = 3;
    p.m1 = 2;
    p.m2 = 3;
    p.j = 1;
    p.family = 3;
    auto c = two_point_catalog({'A', 5}, p);
    CHECK(c.needs_omega());
    CHECK_FALSE(c.omega_rational());
    auto vr = verify_cover(c);
    REQUIRE(vr.ok);
    CHECK(*vr.label == AdeLabel{'A', 5});

    // D4.omega at n = 4, j = 1 (Gaussian), and j = 2 (rational)
    CatalogParams q;
    q.n = 4;
    q.m1 = 1;
    q.m2 = 2;
    q.j = 1;
    q.family = 2;
    auto c2 = two_point_catalog({'D', 4}, q);
    auto vr2 = verify_cover(c2);
    REQUIRE(vr2.ok);
    CHECK(*vr2.label == AdeLabel{'D', 4});
    q.j = 2;
    auto c3 = two_point_catalog({'D', 4}, q);
    CHECK(c3.omega_rational());
    auto vr3 = verify_cover(c3);
    REQUIRE(vr3.ok);
    CHECK(*vr3.label == AdeLabel{'D', 4});
}

TEST_CASE("catalog beta passports are two-point-branched") {
    // the pairs for which the lowest parts satisfy the center conditions
    CatalogParams p;
    p.n = 3;
    p.m1 = 1;
    p.m2 = 1;
    auto a1 = two_point_catalog({'A', 1}, p);
    auto b = catalog_beta(a1);
    REQUIRE(b.defined);
    CHECK(b.passport.two_point_branched());
    CHECK(b.passport.n == 3);

    // the power family never satisfies the center conditions: its lowest
    // parts are proportional, so the image must be read through the tower
    CatalogParams q;
    q.n = 3;
    q.m1 = 1;
    q.m2 = 2;
    q.family = 1;
    auto d4 = two_point_catalog({'D', 4}, q);
    auto b2 = catalog_beta(d4);
    CHECK_FALSE(b2.defined);
}

TEST_CASE("fiber descriptions") {
    // x^2 with the A3 label: nonempty
    auto f2 = xn_pair(2);
    auto d = fiber_describe(passport_of_forms(f2), f2, {'A', 3});
    CHECK(d.nonempty);
    CHECK(d.complete);
    CHECK(d.minimal_degree == 2 * d.m0);

    // the degree-3 pair with the three-lines label: m0 = 3, minimal degree 9
    auto f3 = dessin3();
    auto d2 = fiber_describe(passport_of_forms(f3), f3, {'D', 4});
    CHECK(d2.nonempty);
    CHECK(d2.m0 == 3);
    CHECK(d2.minimal_degree == 9);
    CHECK(d2.complete);
    CHECK_FALSE(d2.series.empty());

    // x^2 with the A2 label: empty with a witness
    auto d3 = fiber_describe(passport_of_forms(f2), f2, {'A', 2});
    CHECK_FALSE(d3.nonempty);
    CHECK(d3.complete);
    CHECK_FALSE(d3.witness.empty());

    // emptiness for all even-A, E6, E8 labels over x^n fixtures
    for (int n = 2; n <= 6; ++n) {
        auto f = xn_pair(n);
        auto pp = passport_of_forms(f);
        for (int k = 1; k <= 6; ++k) {
            auto dd = fiber_describe(pp, f, {'A', 2 * k});
            CHECK_FALSE(dd.nonempty);
            CHECK(dd.complete);
        }
        for (int e : {6, 8}) {
            auto dd = fiber_describe(pp, f, {'E', e});
            CHECK_FALSE(dd.nonempty);
            CHECK(dd.complete);
        }
    }
}

TEST_CASE("identify ade labels") {
    for (int n = 0; n <= 12; ++n) {
        auto r = res::resolve_minimal(res::ade_germ({'A', n}));
        auto l = identify_ade(r);
        REQUIRE(l);
        CHECK(*l == AdeLabel{'A', n});
    }
    for (int n = 4; n <= 12; ++n) {
        auto r = res::resolve_minimal(res::ade_germ({'D', n}));
        auto l = identify_ade(r);
        REQUIRE(l);
        CHECK(*l == AdeLabel{'D', n});
    }
    for (int n : {6, 7, 8}) {
        auto r = res::resolve_minimal(res::ade_germ({'E', n}));
        auto l = identify_ade(r);
        REQUIRE(l);
        CHECK(*l == AdeLabel{'E', n});
    }
}

TEST_CASE("series loop-class exponents are computed from the contracted chain") {
    auto mkpass = [](std::vector<int> a, std::vector<int> b, std::vector<int> c) {
        Passport p;
        p.c0 = CycleType(std::move(a));
        p.c1 = CycleType(std::move(b));
        p.cinf = CycleType(std::move(c));
        p.n = p.c0.total();
        return p;
    };
    auto x2 = mkpass({2}, {1, 1}, {2});
    auto x3 = mkpass({3}, {1, 1, 1}, {3});

    // first A-odd family over x^2 at A7: a = (k+1)/n = 2
    auto a7 = fiber_describe(x2, std::nullopt, {'A', 7});
    REQUIRE(a7.nonempty);
    bool saw = false;
    for (auto& s : a7.series)
        if (s.family == "A2k+1.zw") {
            CHECK(s.exponents == std::vector<long>{2});
            saw = true;
        }
    CHECK(saw);

    // odd D family over x^2: exponents (1, 2k+1)
    for (int k = 1; k <= 3; ++k) {
        auto d = fiber_describe(x2, std::nullopt, {'D', 2 * k + 3});
        REQUIRE(d.nonempty);
        bool found = false;
        for (auto& s : d.series)
            if (s.family == "D2k+3") {
                CHECK(s.exponents == std::vector<long>{1, 2 * k + 1});
                found = true;
            }
        CHECK(found);
    }

    // E7 over x^3: exponents (1, 2), and the viable branching pairs the
    // mixed trail with the completely exceptional one
    auto e7 = fiber_describe(x3, std::nullopt, {'E', 7});
    REQUIRE(e7.nonempty);
    bool found = false;
    for (auto& s : e7.series)
        if (s.family == "E7") {
            CHECK(s.exponents == std::vector<long>{1, 2});
            found = true;
        }
    CHECK(found);
    int successes = 0;
    for (auto& sc : e7.scenarios)
        if (sc.ok) ++successes;
    CHECK(successes == 1);

    // three-lines label over a three-point pair: all classes are 1
    Poly2<Rat> h1 = Poly2<Rat>::monomial(2, 0, Rat(3)) * Poly2<Rat>::monomial(0, 1, Rat(1)) -
                    Poly2<Rat>::monomial(3, 0, Rat(2));
    FormPair dess(BinaryForm<Rat>::of(h1), BinaryForm<Rat>(3, Poly2<Rat>::monomial(0, 3, Rat(1))));
    auto d4 = fiber_describe(passport_of_forms(dess), dess, {'D', 4});
    for (auto& s : d4.series)
        for (long a : s.exponents) CHECK(a == 1);
}
