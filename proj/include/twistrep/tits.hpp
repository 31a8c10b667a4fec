#pragma once

#include "twistrep/rootdatum.hpp"

namespace twistrep {

// e(torus/2) * sigma_w, with the torus part read modulo 2
struct TitsElt {
    LatticeVec torus;
    WeylElt weyl;

    bool operator==(const TitsElt& o) const { return torus == o.torus && weyl == o.weyl; }
};

LatticeVec mod2(const LatticeVec& v);

TitsElt sigma(const RootDatum& datum, const WeylElt& w);
TitsElt tits_mult(const RootDatum& datum, const TitsElt& a, const TitsElt& b);
// product of the letters sigma_i along a word, not assumed reduced
TitsElt tits_word(const RootDatum& datum, const std::vector<int>& word);

// class of rho_check - w rho_check modulo 2
LatticeVec bicycle(const RootDatum& datum, const WeylElt& w);
// sum of the positive coroots made negative by w^{-1}, as an honest integer vector
LatticeVec inversion_coroot_sum(const RootDatum& datum, const WeylElt& w);

}  // namespace twistrep
