#pragma once

#include "twistrep/hecke.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace twistrep {

// The quadruple read over the dual datum, (lambda, tau, ell, t) -> (ell, t, lambda, tau),
// together with the sign comparing the zeta-normalized dual extension with the
// dual side's own z-normalized one.
struct DualExtension {
    ExtendedParam param;
    int normalization = 1;
};

DualExtension dual_param(const ExtendedParam& E, std::shared_ptr<const RootDatum> dual);

// the sign relating two dual extensions of the same dual parameter
int dual_sgn(const DualExtension& a, const DualExtension& b);

// Distance from the base involution in the graph of delta0-fixed twisted
// involutions, one step per kappa (w_kappa * theta, or conjugation by w_kappa).
class TwistedLength {
public:
    explicit TwistedLength(const RootDatum& datum);
    int operator()(const LatticeMap& theta) const;

private:
    std::map<LatticeMap, int> distance_;
};

std::shared_ptr<const ExtBlock> dual_ext_block(const ExtBlock& blk);

struct DualBlockMap {
    std::vector<int> forward;  // group ext index -> dual ext index
    std::vector<int> sign;     // [dual of E_i] = sign[i] * [dual basis element forward[i]]
    std::vector<int> length;   // twisted length of E_i
};

DualBlockMap dual_block_map(const ExtBlock& blk, const ExtBlock& dual);

struct TransposeReport {
    bool ok = true;
    int entries_checked = 0;
    std::string kappa;
    int E = -1, F = -1;
    LaurentPoly lhs, rhs;

    // "OK" or "MISMATCH kappa=.. E=.. F=.. lhs=.. rhs=.."
    std::string to_string() const;
};

// Compares, entry by entry, the coefficient of [E] in -T_kappa[F] + (q^l - 1) sgn(E,F)
// with (-1)^(length E - length F) times the coefficient of [dual F] in T[dual E].
TransposeReport check_transpose(const KappaOrbit& kappa, const ExtBlock& blk, const ExtBlock& dual,
                                const DualBlockMap& map);
TransposeReport check_transpose(const KappaOrbit& kappa, const ExtBlock& blk, const ExtBlock& dual);

// the orbit of the dual datum on the same simple-root indices
KappaOrbit dual_kappa(const RootDatum& dual, const KappaOrbit& kappa);

}  // namespace twistrep
