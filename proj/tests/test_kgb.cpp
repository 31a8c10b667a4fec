#include "doctest.h"
#include "support.hpp"

#include <random>
#include <set>

using namespace twistrep;
using twistrep::testing::block_at_rho;

TEST_CASE("GL(n) fundamental fiber has 2^n KGB classes") {
    for (int n = 1; n <= 4; ++n) {
        RootDatum gl = build_datum(fixtures::general_linear(n));
        auto xs = enumerate_kgb(gl, rho_check(gl), gl.identity());
        CHECK(xs.size() == (size_t{1} << n));
        std::set<LatticeVec> ells;
        for (const auto& x : xs) ells.insert(x.ell);
        CHECK(ells.size() == xs.size());
    }
    RootDatum gl3 = build_datum(fixtures::general_linear(3));
    CHECK(enumerate_kgb(gl3, RatVec(LatticeVec{1, 0, -1}, 1), gl3.identity()).size() == 8);
}

TEST_CASE("dual KGB mirrors the group side") {
    for (const auto& desc : {fixtures::simply_connected_a(1, false), fixtures::general_linear(2),
                             fixtures::simply_connected_a(2, false), fixtures::simply_connected_b2()}) {
        RootDatum a = build_datum(desc);
        RootDatum d = dual_datum(a);
        for (const auto& inv : enumerate_twisted_involutions(a)) {
            WeylElt mirrored = d.from_matrix((-inv.theta.transpose()) * d.xi0());
            CHECK(enumerate_dual_kgb(a, rho(a), inv.w).size() == enumerate_kgb(d, rho_check(d), mirrored).size());
        }
    }
    RootDatum a1 = build_datum(fixtures::simply_connected_a(1, false));
    CHECK(enumerate_dual_kgb(a1, rho(a1), weyl_longest(a1)).size() == 2);
}

TEST_CASE("KGB membership condition holds for every element") {
    RootDatum a3 = build_datum(fixtures::simply_connected_a(3, true));
    const RatVec zero(3);
    for (const auto& inv : enumerate_twisted_involutions(a3)) {
        const LatticeMap one_minus = LatticeMap::identity(3) - inv.theta;
        for (const auto& x : enumerate_kgb(a3, rho_check(a3), inv.w)) {
            CHECK(apply(one_minus, RatVec(x.ell)) == apply(one_minus, zero));
            CHECK(canonical_ell(inv, x.ell) == x.ell);
        }
    }
}

TEST_CASE("dominance is enforced") {
    RootDatum a1 = build_datum(fixtures::simply_connected_a(1, false));
    CHECK_THROWS_AS(enumerate_kgb(a1, RatVec(LatticeVec{0}, 1), a1.identity()), InfinitesimalError);
    CHECK_THROWS_AS(enumerate_kgb(a1, RatVec(LatticeVec{1}, 4), a1.identity()), InfinitesimalError);
}

TEST_CASE("SL(2) block at rho") {
    auto blk = block_at_rho(fixtures::simply_connected_a(1, false));
    CHECK(blk->block().size() == 4);
    std::set<std::tuple<int, LatticeVec, LatticeVec>> seen;
    for (const auto& p : blk->block().params()) seen.insert({p.inv_index, p.x.ell, p.y.lambda});
    CHECK(seen.size() == 4);
}

TEST_CASE("GL(2) block is the union over both involutions") {
    RootDatum gl2 = build_datum(fixtures::general_linear(2));
    auto params = block(gl2, rho_check(gl2), rho(gl2));
    size_t expected = 0;
    for (const auto& inv : enumerate_twisted_involutions(gl2)) {
        auto xs = enumerate_kgb(gl2, rho_check(gl2), inv.w);
        auto ys = enumerate_dual_kgb(gl2, rho(gl2), inv.w);
        expected += xs.size() * ys.size();
    }
    CHECK(params.size() == expected);
    CHECK(!params.empty());
}

TEST_CASE("fixed witnesses") {
    RootDatum gl2 = build_datum(fixtures::general_linear(2));
    for (const auto& p : block(gl2, rho_check(gl2), rho(gl2))) {
        auto w = fixed_witness(gl2, p);
        REQUIRE(w);
        CHECK(is_zero(w->t));
        CHECK(is_zero(w->tau));
    }

    auto blk = block_at_rho(fixtures::simply_connected_a(3, true));
    const RootDatum& d = blk->datum();
    const int n = d.rank();
    const LatticeMap one = LatticeMap::identity(n);
    int fixed = 0;
    for (const auto& p : blk->block().params()) {
        auto w = fixed_witness(d, p);
        if (!w) continue;
        ++fixed;
        const LatticeMap& th = p.x.inv.theta;
        CHECK((d.delta0() - one) * p.x.ell == (one + th) * w->t);
        CHECK((d.delta0().transpose() - one) * p.y.lambda == (one - th.transpose()) * w->tau);
    }
    CHECK(fixed == blk->size());
}

TEST_CASE("epsilon does not depend on the witness") {
    auto blk = block_at_rho(fixtures::simply_connected_a(3, true));
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<Int> coin(-3, 3);
    for (int i = 0; i < blk->size(); ++i) {
        const ExtendedParam& E = blk->param(i);
        const int n = E.datum->rank();
        auto kernel = kernel_basis(LatticeMap::identity(n) + E.theta());
        const int eps = epsilon_char(E);
        for (int trial = 0; trial < 50; ++trial) {
            LatticeVec t = E.t;
            for (const auto& v : kernel) t = t + coin(rng) * v;
            CHECK(epsilon_char(*E.datum, E.lambda, t) == eps);
        }
    }
}
