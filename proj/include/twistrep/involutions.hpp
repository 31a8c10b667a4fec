#pragma once

#include "twistrep/rootdatum.hpp"

#include <memory>
#include <string>

namespace twistrep {

enum class Side { group, dual };

struct TwistedInvolution {
    WeylElt w;
    LatticeMap theta;  // on the cocharacter lattice of the side's datum
    Side side = Side::group;

    // the involution on characters
    LatticeMap theta_on_characters() const { return theta.transpose(); }
    bool operator==(const TwistedInvolution& o) const { return theta == o.theta && side == o.side; }
};

// For Side::dual the word is read in the dual Weyl group and the inner class
// is -w0 composed with the transpose of xi0 of the given (group) datum.
TwistedInvolution theta_of(const RootDatum& datum, const WeylElt& w, Side side = Side::group);

// Twisted involutions reachable from the identity by twisted conjugation and
// by the length-changing moves; ordered by discovery (breadth first).
std::vector<TwistedInvolution> enumerate_twisted_involutions(const RootDatum& datum);

bool commutes_with_delta0(const RootDatum& datum, const TwistedInvolution& inv);

/* ------------------------------------------------------------------ */
/*  Root and orbit status                                              */
/* ------------------------------------------------------------------ */

class NonintegralError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class RootStatusKind {
    complex_ascent,
    complex_descent,
    imaginary_compact,
    imaginary_noncompact_type1,
    imaginary_noncompact_type2,
    real_parity_type1,
    real_parity_type2,
    real_nonparity,
};

struct RootStatus {
    LatticeVec root;
    RootStatusKind status;
};

std::string to_string(RootStatusKind k);

RootStatus root_status(const RootDatum& datum, const TwistedInvolution& inv, const LatticeVec& root,
                       const LatticeVec& lambda, const LatticeVec& ell, const RatVec& gamma, const RatVec& g);

enum class KappaLabel {
    c1_plus, c1_minus, i1_1, i1_2f, i1_2s, i1_c, r1_1f, r1_1s, r1_2, r1_n,
    c2_plus, c2_minus, c2_i, c2_r, i2_11, i2_12, i2_22, r2_22, r2_21, r2_11, r2_n, i2_c,
    c3_plus, c3_minus, c3_i, c3_r, i3, r3, r3_n, i3_c,
};

std::string to_string(KappaLabel k);
KappaLabel dual_label(KappaLabel k);

struct ExtendedParam;

struct KappaStatus {
    KappaOrbit orbit;
    KappaLabel label;
    // 2i12 with tau_alpha + tau_beta odd, or 2r21 with t_alpha + t_beta odd
    bool second_kind = false;
    std::string name() const;
};

KappaStatus kappa_status(const KappaOrbit& orbit, const ExtendedParam& E);

}  // namespace twistrep
