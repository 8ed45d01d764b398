#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "adecover/perm.hpp"

#include <random>

using namespace adecover;

TEST_CASE("cycle types") {
    CHECK(cycle_type(Permutation::identity(4)).parts == std::vector<int>{1, 1, 1, 1});
    auto p = parse_permutation("(1 2 3)", 3);
    REQUIRE(p);
    CHECK(cycle_type(*p).parts == std::vector<int>{3});
    auto q = parse_permutation("(1 2)", 3);
    REQUIRE(q);
    CHECK(cycle_type(*q).parts == std::vector<int>{2, 1});
}

TEST_CASE("cycle type is a class function") {
    std::mt19937 rng(3);
    for (int n = 3; n <= 6; ++n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = i + 1;
        for (int iter = 0; iter < 20; ++iter) {
            auto w = v;
            std::shuffle(w.begin(), w.end(), rng);
            Permutation p(w);
            auto u = v;
            std::shuffle(u.begin(), u.end(), rng);
            Permutation g(u);
            CHECK(cycle_type(g.inverse() * p * g) == cycle_type(p));
        }
    }
}

TEST_CASE("transitivity") {
    auto c3 = *parse_permutation("(1 2 3)", 3);
    CHECK(is_transitive({c3}, 3));
    auto t = *parse_permutation("(1 2)", 3);
    CHECK_FALSE(is_transitive({t}, 3));
    auto t2 = *parse_permutation("(2 3)", 3);
    CHECK(is_transitive({t, t2}, 3));
    CHECK_FALSE(is_transitive({}, 5));
    CHECK(is_transitive({}, 1));
}

TEST_CASE("group order by closure") {
    auto c3 = *parse_permutation("(1 2 3)", 3);
    CHECK(group_order({c3}) == 3);
    auto t = *parse_permutation("(1 2)", 3);
    auto t2 = *parse_permutation("(2 3)", 3);
    CHECK(group_order({t, t2}) == 6);
    CHECK(group_order({}) == 1);
    std::vector<int> big(13);
    for (int i = 0; i < 13; ++i) big[i] = i + 1;
    CHECK_THROWS_AS(group_order({Permutation(big)}), std::domain_error);
}

TEST_CASE("orbit-stabilizer sanity on generated groups") {
    std::mt19937 rng(17);
    for (int n = 2; n <= 6; ++n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = i + 1;
        for (int iter = 0; iter < 10; ++iter) {
            auto a = v, b = v;
            std::shuffle(a.begin(), a.end(), rng);
            std::shuffle(b.begin(), b.end(), rng);
            std::vector<Permutation> gens{Permutation(a), Permutation(b)};
            long ord = group_order(gens);
            long fact = 1;
            for (int i = 2; i <= n; ++i) fact *= i;
            CHECK(fact % ord == 0);
            if (is_transitive(gens, n)) CHECK(ord % n == 0);
        }
    }
}

TEST_CASE("cycle notation round trip") {
    auto p = parse_permutation("(1 2)(3 4 5)");
    REQUIRE(p);
    CHECK(p->degree() == 5);
    CHECK(p->cycle_str() == "(1 2)(3 4 5)");
    auto q = parse_permutation(p->cycle_str(), 7);
    REQUIRE(q);
    CHECK(q->degree() == 7);
    CHECK_FALSE(parse_permutation("(1 2"));
    CHECK_FALSE(parse_permutation("(1 1 2)"));
}
