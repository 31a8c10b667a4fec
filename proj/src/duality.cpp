#include "twistrep/duality.hpp"

#include <deque>

namespace twistrep {

DualExtension dual_param(const ExtendedParam& E, std::shared_ptr<const RootDatum> dual) {
    DualExtension out;
    ExtendedParam& D = out.param;
    D.datum = std::move(dual);
    D.gamma = E.g;
    D.g = E.gamma;
    D.inv = involution_with_theta(*D.datum, -E.theta().transpose());
    D.lambda = E.ell;
    D.tau = E.t;
    D.ell = E.lambda;
    D.t = E.tau;
    FourthRoot ratio = zeta_char(E) * FourthRoot(-z_char(D).exponent);
    if (ratio.exponent % 2 != 0)
        throw InvariantError("dual_param: zeta and the dual z differ by an odd power of i for " + E.to_string());
    out.normalization = ratio.exponent == 0 ? 1 : -1;
    return out;
}

int dual_sgn(const DualExtension& a, const DualExtension& b) {
    return a.normalization * b.normalization * sgn(a.param, b.param);
}

TwistedLength::TwistedLength(const RootDatum& datum) {
    const auto orbits = kappa_orbits(datum);
    const LatticeMap& D = datum.delta0();
    std::deque<LatticeMap> queue{datum.xi0()};
    distance_[datum.xi0()] = 0;
    while (!queue.empty()) {
        LatticeMap theta = queue.front();
        queue.pop_front();
        const int next = distance_[theta] + 1;
        for (const auto& k : orbits) {
            const LatticeMap& W = k.w_kappa.matrix;
            const LatticeMap Winv = datum.inverse(k.w_kappa).matrix;
            LatticeMap conj = W * theta * Winv;
            LatticeMap step = conj == theta ? W * theta : conj;
            if (!(step * D == D * step) || distance_.count(step)) continue;
            distance_[step] = next;
            queue.push_back(step);
        }
    }
}

int TwistedLength::operator()(const LatticeMap& theta) const {
    auto it = distance_.find(theta);
    if (it == distance_.end()) throw InvariantError("twisted length: involution is not delta0-fixed and reachable");
    return it->second;
}

std::shared_ptr<const ExtBlock> dual_ext_block(const ExtBlock& blk) {
    auto dual = std::make_shared<const RootDatum>(dual_datum(blk.datum()));
    auto b = std::make_shared<const Block>(dual, blk.block().g(), blk.block().gamma());
    return std::make_shared<const ExtBlock>(b);
}

DualBlockMap dual_block_map(const ExtBlock& blk, const ExtBlock& dual) {
    if (blk.size() != dual.size())
        throw InvariantError("dual block map: " + std::to_string(blk.size()) + " parameters against " +
                             std::to_string(dual.size()) + " on the dual side");
    auto dual_datum_ptr = dual.block().datum_ptr();
    TwistedLength length(blk.datum());
    DualBlockMap map;
    std::vector<bool> hit(dual.size(), false);
    for (int i = 0; i < blk.size(); ++i) {
        DualExtension De = dual_param(blk.param(i), dual_datum_ptr);
        auto bad = violated_conditions(De.param);
        if (!bad.empty())
            throw InvariantError("dual block map: dual of parameter " + std::to_string(i) + " violates condition " +
                                 std::to_string(bad.front()));
        auto [j, s] = express(dual, De.param);
        if (hit[j]) throw InvariantError("dual block map: dual parameter " + std::to_string(j) + " hit twice");
        hit[j] = true;
        map.forward.push_back(j);
        map.sign.push_back(s * De.normalization);
        map.length.push_back(length(blk.param(i).theta()));
    }
    return map;
}

std::string TransposeReport::to_string() const {
    if (ok) return "OK";
    return "MISMATCH kappa=" + kappa + " E=" + std::to_string(E) + " F=" + std::to_string(F) +
           " lhs=" + lhs.to_string() + " rhs=" + rhs.to_string();
}

KappaOrbit dual_kappa(const RootDatum& dual, const KappaOrbit& kappa) {
    for (const auto& k : kappa_orbits(dual))
        if (k.roots == kappa.roots) return k;
    throw InvariantError("dual kappa: no dual orbit on roots " + kappa.roots_string());
}

TransposeReport check_transpose(const KappaOrbit& kappa, const ExtBlock& blk, const ExtBlock& dual,
                                const DualBlockMap& map) {
    const int n = blk.size();
    const LaurentMatrix A = matrix_of(blk, kappa);
    const LaurentMatrix B = matrix_of(dual, dual_kappa(dual.datum(), kappa));
    const LaurentPoly shift = LaurentPoly::q_power(kappa.length) - LaurentPoly(1);
    TransposeReport report;
    report.kappa = kappa.roots_string();
    for (int e = 0; e < n; ++e) {
        for (int f = 0; f < n; ++f) {
            ++report.entries_checked;
            LaurentPoly lhs = -A(e, f);
            if (e == f) lhs += shift;
            int sign = map.sign[e] * map.sign[f] * ((map.length[e] + map.length[f]) % 2 == 0 ? 1 : -1);
            LaurentPoly rhs = LaurentPoly(sign) * B(map.forward[f], map.forward[e]);
            if (lhs == rhs || !report.ok) continue;
            report.ok = false;
            report.E = e;
            report.F = f;
            report.lhs = lhs;
            report.rhs = rhs;
        }
    }
    return report;
}

TransposeReport check_transpose(const KappaOrbit& kappa, const ExtBlock& blk, const ExtBlock& dual) {
    return check_transpose(kappa, blk, dual, dual_block_map(blk, dual));
}

}  // namespace twistrep
