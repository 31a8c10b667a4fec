#include "doctest.h"
#include "support.hpp"

#include <algorithm>
#include <random>

using namespace twistrep;
using twistrep::testing::block_at_rho;

namespace {

int sign_of(Int e) { return mod_pos(e, 2) == 0 ? 1 : -1; }

std::vector<std::shared_ptr<const ExtBlock>> twisted_blocks() {
    return {block_at_rho(fixtures::simply_connected_a(2, true)), block_at_rho(fixtures::simply_connected_a(3, true)),
            block_at_rho(fixtures::simply_connected_a(3, true, true)), block_at_rho(fixtures::adjoint_a(3, true, true)),
            block_at_rho(fixtures::sl2_pair_swapped())};
}

}  // namespace

TEST_CASE("z on a hand-evaluated quadruple") {
    auto datum = std::make_shared<const RootDatum>(build_datum(fixtures::sl2_pair_swapped()));
    ExtendedParam E;
    E.datum = datum;
    E.inv.theta = LatticeMap::from_rows({{0, 1}, {1, 0}});
    E.tau = {1, 0};
    E.t = {1, 0};
    E.lambda = {0, 1};
    E.ell = {0, 0};
    CHECK(z_char(E) == FourthRoot(1));

    E.t = {0, 0};
    CHECK(z_char(E) == FourthRoot(0));
}

TEST_CASE("epsilon evaluation") {
    RootDatum swapped = build_datum(fixtures::sl2_pair_swapped());
    CHECK(epsilon_char(swapped, {3, 5}, {0, 0}) == 1);
    // <(1,0), (1+delta0)(1,0)> = <(1,0),(1,1)> = 1
    CHECK(epsilon_char(swapped, {1, 0}, {1, 0}) == -1);
}

TEST_CASE("canonical extensions are valid; perturbations are caught") {
    for (const auto& blk : twisted_blocks()) {
        for (int i = 0; i < blk->size(); ++i) {
            const ExtendedParam& E = blk->param(i);
            CHECK(violated_conditions(E).empty());
            const int n = E.datum->rank();
            int axis = 0;
            while (axis < n && is_zero((LatticeMap::identity(n) + E.theta()) * unit_vec(n, axis))) ++axis;
            if (axis == n) continue;
            ExtendedParam bad = E;
            bad.t = bad.t + unit_vec(n, axis);
            auto v = violated_conditions(bad);
            CHECK(std::find(v.begin(), v.end(), 4) != v.end());
            CHECK_THROWS_AS(validate(bad), ValidationError);
        }
    }
}

TEST_CASE("untwisted canonical extensions have zero witnesses") {
    auto blk = block_at_rho(fixtures::simply_connected_a(2, false));
    for (int i = 0; i < blk->size(); ++i) {
        CHECK(is_zero(blk->param(i).t));
        CHECK(is_zero(blk->param(i).tau));
        CHECK(zeta_char(blk->param(i)) == FourthRoot(0));
    }
}

TEST_CASE("z squared is epsilon and zeta differs from z by the stated sign") {
    std::mt19937_64 rng(3);
    for (const auto& blk : twisted_blocks()) {
        for (int i = 0; i < blk->size(); ++i) {
            for (int trial = 0; trial < 20; ++trial) {
                ExtendedParam E = random_extension(blk->param(i), rng, 3);
                REQUIRE(violated_conditions(E).empty());
                FourthRoot z = z_char(E);
                CHECK((z * z).exponent == (epsilon_char(E) == 1 ? 0 : 2));
                int correction = sign_of(pair(E.lambda, E.t) + pair(E.tau, E.ell));
                CHECK(zeta_char(E) == z * FourthRoot(correction == 1 ? 0 : 2));
                if (is_zero(E.tau)) CHECK(zeta_char(E) == FourthRoot(0));
            }
        }
    }
}

TEST_CASE("sgn: the two closed forms, the path oracle, symmetry and the cocycle identity") {
    std::mt19937_64 rng(17);
    for (const auto& blk : twisted_blocks()) {
        for (int i = 0; i < blk->size(); ++i) {
            const ExtendedParam& base = blk->param(i);
            CHECK(sgn(base, base) == 1);
            for (int trial = 0; trial < 10; ++trial) {
                ExtendedParam E = random_extension(base, rng, 3);
                ExtendedParam F = random_extension(base, rng, 3);
                ExtendedParam G = random_extension(base, rng, 3);
                int s = sgn(E, F);
                REQUIRE((s == 1 || s == -1));
                CHECK(sgn_first_form(E, F) == s);
                CHECK(sgn_oracle(E, F) == s);
                CHECK(sgn(F, E) == s);
                CHECK(sgn(E, F) * sgn(F, G) == sgn(E, G));
            }
        }
        if (blk->size() >= 2) CHECK(sgn(blk->param(0), blk->param(1)) == 0);
    }
}

TEST_CASE("a witness shift by a (-theta)-fixed vector agrees with the oracle") {
    auto blk = block_at_rho(fixtures::simply_connected_a(3, true));
    for (int i = 0; i < blk->size(); ++i) {
        const ExtendedParam& E = blk->param(i);
        for (const auto& v : kernel_basis(LatticeMap::identity(E.datum->rank()) + E.theta())) {
            ExtendedParam F = E;
            F.t = F.t + v;
            CHECK(sgn_oracle(E, F) == sgn(E, F));
        }
    }
}

TEST_CASE("block extensions are their own references") {
    std::mt19937_64 rng(41);
    for (const auto& blk : twisted_blocks()) {
        for (int i = 0; i < blk->size(); ++i) {
            const ExtendedParam& C = blk->param(i);
            CHECK(reference_extension(C).same_quadruple(C));
            ExtendedParam E = random_extension(C, rng, 3);
            CHECK(reference_extension(E).same_quadruple(C));
        }
    }
}

TEST_CASE("canonical extension is deterministic") {
    auto a = block_at_rho(fixtures::simply_connected_a(3, true));
    auto b = block_at_rho(fixtures::simply_connected_a(3, true));
    REQUIRE(a->size() == b->size());
    for (int i = 0; i < a->size(); ++i) CHECK(a->param(i).same_quadruple(b->param(i)));
}
