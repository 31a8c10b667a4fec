#include "doctest.h"
#include "twistrep/extparams.hpp"

using namespace twistrep;

TEST_CASE("theta_of on small data") {
    RootDatum gl2 = build_datum(fixtures::general_linear(2));
    CHECK(theta_of(gl2, gl2.identity()).theta.is_identity());

    RootDatum a1 = build_datum(fixtures::simply_connected_a(1, false));
    CHECK(theta_of(a1, weyl_longest(a1)).theta == -LatticeMap::identity(1));

    RootDatum a2 = build_datum(fixtures::simply_connected_a(2, false));
    TwistedInvolution inv = theta_of(a2, a2.from_word({0}));
    const LatticeMap thT = inv.theta_on_characters();
    CHECK(thT * a2.simple_root(0) == -a2.simple_root(0));
    LatticeVec moved = thT * a2.simple_root(1);
    CHECK(moved != a2.simple_root(1));
    CHECK(moved != -a2.simple_root(1));
}

TEST_CASE("twisted involution enumeration") {
    RootDatum a2 = build_datum(fixtures::simply_connected_a(2, false));
    // involutions of S3
    CHECK(enumerate_twisted_involutions(a2).size() == 4);
    RootDatum a2q = build_datum(fixtures::simply_connected_a(2, false, true));
    for (const auto& inv : enumerate_twisted_involutions(a2q)) {
        CHECK((inv.theta * inv.theta).is_identity());
    }
    // a word that is not a twisted involution is refused
    CHECK_THROWS(theta_of(a2, a2.from_word({0, 1})));
}

TEST_CASE("root status grading and parity") {
    RootDatum a1 = build_datum(fixtures::simply_connected_a(1, false));
    const RatVec g = rho_check(a1), gamma = rho(a1);
    TwistedInvolution fundamental = theta_of(a1, a1.identity());
    const LatticeVec alpha = a1.simple_root(0);
    // in SL(2) at g = rho_check both grades of the imaginary root are noncompact
    for (Int e : {0, 1})
        CHECK(root_status(a1, fundamental, alpha, {0}, {e}, gamma, g).status != RootStatusKind::imaginary_compact);

    RootDatum pgl2 = build_datum(fixtures::adjoint_a1());
    TwistedInvolution pgl2_fundamental = theta_of(pgl2, pgl2.identity());
    const LatticeVec beta = pgl2.simple_root(0);
    const RatVec pg = rho_check(pgl2), pgamma = rho(pgl2);
    CHECK(root_status(pgl2, pgl2_fundamental, beta, {0}, {1}, pgamma, pg).status ==
          RootStatusKind::imaginary_compact);
    CHECK(root_status(pgl2, pgl2_fundamental, beta, {0}, {0}, pgamma, pg).status !=
          RootStatusKind::imaginary_compact);

    TwistedInvolution split = theta_of(a1, weyl_longest(a1));
    // gamma_alpha = 1; lambda_alpha even -> parity, odd -> nonparity
    CHECK(root_status(a1, split, alpha, {0}, {0}, gamma, g).status != RootStatusKind::real_nonparity);
    CHECK(root_status(a1, split, alpha, {1}, {0}, gamma, g).status == RootStatusKind::real_nonparity);
}

TEST_CASE("GL(2) imaginary root is of type 1") {
    RootDatum gl2 = build_datum(fixtures::general_linear(2));
    TwistedInvolution fundamental = theta_of(gl2, gl2.identity());
    auto st = root_status(gl2, fundamental, gl2.simple_root(0), {0, 0}, {0, 0}, rho(gl2), rho_check(gl2));
    CHECK(st.status == RootStatusKind::imaginary_noncompact_type1);
}
