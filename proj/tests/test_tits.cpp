#include "doctest.h"
#include "twistrep/tits.hpp"

#include <random>

using namespace twistrep;

TEST_CASE("sigma and simple squares") {
    RootDatum a2 = build_datum(fixtures::simply_connected_a(2, false));
    CHECK(sigma(a2, a2.identity()).torus == LatticeVec{0, 0});
    TitsElt s0 = sigma(a2, a2.from_word({0}));
    TitsElt sq = tits_mult(a2, s0, s0);
    CHECK(sq.torus == mod2(a2.simple_coroot(0)));
    CHECK(sq.weyl == a2.identity());
    CHECK(tits_mult(a2, sigma(a2, a2.identity()), s0) == s0);
}

TEST_CASE("braid relations: reduced words of w0 in B2 give the same element") {
    RootDatum b2 = build_datum(fixtures::simply_connected_b2());
    TitsElt x = tits_word(b2, {0, 1, 0, 1});
    TitsElt y = tits_word(b2, {1, 0, 1, 0});
    CHECK(x == y);
    CHECK(x.torus == LatticeVec{0, 0});
}

TEST_CASE("bicycle examples") {
    RootDatum b2 = build_datum(fixtures::simply_connected_b2());
    CHECK(bicycle(b2, b2.identity()) == LatticeVec{0, 0});
    CHECK(bicycle(b2, b2.from_word({0})) == mod2(b2.simple_coroot(0)));
    LatticeVec all(2, 0);
    for (const auto& c : b2.positive_coroots()) all = all + c;
    CHECK(bicycle(b2, weyl_longest(b2)) == mod2(all));
}

TEST_CASE("tits multiplication is associative on A3") {
    RootDatum a3 = build_datum(fixtures::simply_connected_a(3, false));
    auto ws = enumerate_weyl(a3);
    std::mt19937_64 rng(5);
    auto random_elt = [&]() {
        TitsElt e = sigma(a3, ws[rng() % ws.size()]);
        for (auto& x : e.torus) x = rng() % 2;
        return e;
    };
    for (int trial = 0; trial < 200; ++trial) {
        TitsElt a = random_elt(), b = random_elt(), c = random_elt();
        CHECK(tits_mult(a3, tits_mult(a3, a, b), c) == tits_mult(a3, a, tits_mult(a3, b, c)));
    }
}
