#include "doctest.h"
#include "twistrep/rootdatum.hpp"

#include <random>

using namespace twistrep;

TEST_CASE("build_datum accepts GL(2) and the flipped A2 datum") {
    RootDatum gl2 = build_datum(fixtures::general_linear(2));
    CHECK(gl2.semisimple_rank() == 1);
    CHECK(gl2.rank() == 2);
    RootDatum a2 = build_datum(fixtures::simply_connected_a(2, true));
    CHECK(a2.delta0_perm(0) == 1);
    CHECK(a2.delta0_perm(1) == 0);
}

TEST_CASE("build_datum rejections") {
    auto d = fixtures::simply_connected_a(2, false);
    d.delta0 = LatticeMap::from_rows({{0, -1}, {1, -1}});  // order three
    CHECK_THROWS_AS(build_datum(d), DatumError);

    auto bad_cartan = fixtures::simply_connected_a(2, false);
    bad_cartan.simple_roots[0] = {2, 1};
    CHECK_THROWS_AS(build_datum(bad_cartan), DatumError);

    auto not_simple = fixtures::general_linear(3);
    not_simple.delta0 = LatticeMap::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    CHECK_THROWS_AS(build_datum(not_simple), DatumError);

    auto noncommuting = fixtures::general_linear(2);
    noncommuting.xi0 = LatticeMap::from_rows({{0, 1}, {1, 0}});
    noncommuting.delta0 = -LatticeMap::identity(2);
    CHECK_THROWS_AS(build_datum(noncommuting), DatumError);
}

TEST_CASE("rho and rho_check") {
    RootDatum gl2 = build_datum(fixtures::general_linear(2));
    CHECK(rho(gl2) == RatVec({1, -1}, 2));
    RootDatum a2 = build_datum(fixtures::simply_connected_a(2, false));
    for (int i = 0; i < 2; ++i) CHECK(pair(rho(a2), a2.simple_coroot(i)) == Rational(1));
    RootDatum b2 = build_datum(fixtures::simply_connected_b2());
    CHECK(b2.num_positive_roots() == 4);
    CHECK(a2.num_positive_roots() == 3);
    RootDatum a3 = build_datum(fixtures::simply_connected_a(3, true));
    CHECK(a3.num_positive_roots() == 6);
}

TEST_CASE("longest element") {
    RootDatum a1 = build_datum(fixtures::simply_connected_a(1, false));
    CHECK(weyl_longest(a1).length() == 1);
    RootDatum a2 = build_datum(fixtures::simply_connected_a(2, false));
    CHECK(weyl_longest(a2).length() == 3);
    CHECK(enumerate_weyl(a2).size() == 6);
    RootDatum b2 = build_datum(fixtures::simply_connected_b2());
    WeylElt w0 = weyl_longest(b2);
    CHECK(w0.length() == 4);
    CHECK(w0.matrix == -LatticeMap::identity(2));
    CHECK(enumerate_weyl(b2).size() == 8);
    for (const RootDatum* d : {&a1, &a2, &b2}) {
        WeylElt w = weyl_longest(*d);
        CHECK((w.matrix * w.matrix).is_identity());
        for (int i = 0; i < d->semisimple_rank(); ++i) {
            auto k = d->find_coroot(w.matrix * d->simple_coroot(i));
            REQUIRE(k);
            CHECK(*k < 0);
            CHECK(-*k - 1 < d->semisimple_rank());
        }
    }
}

TEST_CASE("reflections preserve the pairing and words reproduce matrices") {
    std::mt19937_64 rng(3);
    RootDatum a3 = build_datum(fixtures::simply_connected_a(3, true));
    for (int trial = 0; trial < 50; ++trial) {
        LatticeVec lam(3), v(3);
        for (auto& x : lam) x = static_cast<Int>(rng() % 9) - 4;
        for (auto& x : v) x = static_cast<Int>(rng() % 9) - 4;
        for (int i = 0; i < 3; ++i) {
            const LatticeMap& s = a3.reflection(i);
            CHECK((s * s).is_identity());
            CHECK(pair(s.transpose() * lam, s * v) == pair(lam, v));
        }
    }
    for (const auto& w : enumerate_weyl(a3)) {
        LatticeMap m = LatticeMap::identity(3);
        for (int i : w.word) m = m * a3.reflection(i);
        CHECK(m == w.matrix);
        CHECK(a3.length_of(w.matrix) == w.length());
    }
    CHECK(enumerate_weyl(a3).size() == 24);
}

TEST_CASE("distinguished involutions fix rho_check") {
    for (auto d : {fixtures::simply_connected_a(2, true), fixtures::simply_connected_a(3, true, true),
                   fixtures::general_linear(3)}) {
        RootDatum r = build_datum(d);
        CHECK(r.delta0() * r.two_rho_check() == r.two_rho_check());
        CHECK(r.xi0() * r.two_rho_check() == r.two_rho_check());
        CHECK(r.xi0() * r.delta0() == r.delta0() * r.xi0());
    }
}

TEST_CASE("dual datum") {
    RootDatum gl2 = build_datum(fixtures::general_linear(2));
    RootDatum dgl2 = dual_datum(gl2);
    // -w0 transpose(id) with w0 the reflection in (1,-1)
    CHECK(dgl2.xi0() == LatticeMap::from_rows({{0, -1}, {-1, 0}}));
    for (auto d : {fixtures::simply_connected_a(2, true), fixtures::simply_connected_a(3, true, true),
                   fixtures::simply_connected_b2()}) {
        RootDatum r = build_datum(d);
        RootDatum dd = dual_datum(dual_datum(r));
        CHECK(dd.xi0() == r.xi0());
        CHECK(dd.delta0() == r.delta0());
        CHECK(dd.simple_roots() == r.simple_roots());
        CHECK(dual_datum(r).delta0() == r.delta0().transpose());
    }
}

TEST_CASE("kappa orbits") {
    RootDatum a3plain = build_datum(fixtures::simply_connected_a(3, false));
    auto k0 = kappa_orbits(a3plain);
    CHECK(k0.size() == 3);
    for (const auto& k : k0) CHECK(k.kind == KappaKind::type1);

    RootDatum a2 = build_datum(fixtures::simply_connected_a(2, true));
    auto k2 = kappa_orbits(a2);
    REQUIRE(k2.size() == 1);
    CHECK(k2[0].kind == KappaKind::type3);
    CHECK(k2[0].w_kappa.length() == 3);
    CHECK(k2[0].w_kappa == a2.from_word({0, 1, 0}));

    DatumDescription a1a1;
    a1a1.rank = 2;
    a1a1.simple_roots = {{2, 0}, {0, 2}};
    a1a1.simple_coroots = {{1, 0}, {0, 1}};
    a1a1.xi0 = LatticeMap::identity(2);
    a1a1.delta0 = LatticeMap::from_rows({{0, 1}, {1, 0}});
    auto kk = kappa_orbits(build_datum(a1a1));
    REQUIRE(kk.size() == 1);
    CHECK(kk[0].kind == KappaKind::type2);
    CHECK(kk[0].length == 2);

    auto k3 = kappa_orbits(build_datum(fixtures::simply_connected_a(3, true)));
    REQUIRE(k3.size() == 2);
    CHECK(k3[0].kind == KappaKind::type2);
    CHECK(k3[1].kind == KappaKind::type1);
}
