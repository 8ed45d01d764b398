#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "adecover/monodromy.hpp"

using namespace adecover;
using namespace adecover::mono;

namespace {

using P = Poly2<Rat>;
P mono_(int a, int b, long c = 1) { return P::monomial(a, b, Rat(c)); }

FormPair xn_pair(int n) {
    return FormPair(BinaryForm<Rat>(n, mono_(n, 0)), BinaryForm<Rat>(n, mono_(0, n)));
}
FormPair dessin3() {
    return FormPair(BinaryForm<Rat>::of(mono_(2, 0) * (mono_(0, 1, 3) - mono_(1, 0, 2))),
                    BinaryForm<Rat>(3, mono_(0, 3)));
}
// degree-4 Chebyshev-style pair: h1 = (2x^2 - y^2)^2, h2 = y^4
FormPair cheb4() {
    P h1 = (mono_(2, 0, 2) - mono_(0, 2, 1)).pow(2);
    return FormPair(BinaryForm<Rat>::of(h1), BinaryForm<Rat>(4, mono_(0, 4)));
}

}  // namespace

TEST_CASE("fiber roots of the power pair") {
    FiberTracker tr(xn_pair(3), {});
    auto pts = tr.fiber_checked(C(8, 0));
    REQUIRE(pts.size() == 3);
    // roots are the three cube roots of 8, each at chordal distance 0 from
    // its expected projective position
    for (int k = 0; k < 3; ++k) {
        C root = 2.0 * std::exp(C(0, 1) * (2.0 * M_PI * k / 3.0));
        double best = 1e9;
        for (auto& p : pts) {
            PPoint q{root, false};
            best = std::min(best, PPoint::chordal(p, q));
        }
        CHECK(best < 1e-9);
    }
}

TEST_CASE("power family monodromy: full cycle over 0, identity over 1") {
    for (int n = 2; n <= 8; ++n) {
        auto r = monodromy_triple(xn_pair(n));
        CHECK(r.verified_cycle_types);
        CHECK(cycle_type(r.triple.s0).parts == std::vector<int>{n});
        CHECK(r.triple.s1.is_identity());
        CHECK((r.triple.s0 * r.triple.s1 * r.triple.sinf).is_identity());
    }
}

TEST_CASE("degree-3 pair monodromy matches the exact passport") {
    auto r = monodromy_triple(dessin3());
    CHECK(r.verified_cycle_types);
    CHECK(cycle_type(r.triple.s0).parts == std::vector<int>{2, 1});
    CHECK(cycle_type(r.triple.s1).parts == std::vector<int>{2, 1});
    CHECK(cycle_type(r.triple.sinf).parts == std::vector<int>{3});
}

TEST_CASE("degree-4 pair monodromy") {
    auto f = cheb4();
    auto p = passport_of_forms(f);
    CHECK(p.c0.parts == std::vector<int>{2, 2});
    CHECK(p.c1.parts == std::vector<int>{2, 1, 1});
    CHECK(p.cinf.parts == std::vector<int>{4});
    auto r = monodromy_triple(f);
    CHECK(r.verified_cycle_types);
}

TEST_CASE("determinism and radius robustness") {
    auto f = dessin3();
    auto r1 = monodromy_triple(f);
    auto r2 = monodromy_triple(f);
    auto r3 = monodromy_triple(f);
    CHECK(r1.triple.s0 == r2.triple.s0);
    CHECK(r1.triple.s1 == r2.triple.s1);
    CHECK(r2.triple.s0 == r3.triple.s0);
    CHECK(r2.triple.s1 == r3.triple.s1);

    TrackerConfig half;
    half.radius_fraction = 0.25;
    auto rh = monodromy_triple(f, half);
    CHECK(cycle_type(rh.triple.s0) == cycle_type(r1.triple.s0));
    CHECK(cycle_type(rh.triple.s1) == cycle_type(r1.triple.s1));
    CHECK(cycle_type(rh.triple.sinf) == cycle_type(r1.triple.sinf));
}

TEST_CASE("near-critical fibre is reported") {
    FiberTracker tr(xn_pair(4), {});
    CHECK_THROWS_AS(tr.fiber_checked(C(1e-30, 0)), NearCriticalValue);
}
