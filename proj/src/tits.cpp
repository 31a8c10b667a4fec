#include "twistrep/tits.hpp"

namespace twistrep {

LatticeVec mod2(const LatticeVec& v) {
    LatticeVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = mod_pos(v[i], 2);
    return r;
}

TitsElt sigma(const RootDatum& datum, const WeylElt& w) { return {LatticeVec(datum.rank(), 0), w}; }

namespace {

// sigma_v * sigma_i, torus part accumulated on the left
void fold_letter(const RootDatum& datum, LatticeVec& torus, LatticeMap& v, int i) {
    LatticeMap next = v * datum.reflection(i);
    bool ascent = datum.is_positive_coroot(v * datum.simple_coroot(i));
    if (!ascent) {
        // sigma_v = sigma_{v s_i} sigma_i, and sigma_i^2 = m_i
        torus = torus + next * datum.simple_coroot(i);
    }
    v = next;
}

}  // namespace

TitsElt tits_mult(const RootDatum& datum, const TitsElt& a, const TitsElt& b) {
    LatticeVec torus = a.torus + a.weyl.matrix * b.torus;
    LatticeMap v = a.weyl.matrix;
    for (int i : b.weyl.word) fold_letter(datum, torus, v, i);
    return {mod2(torus), datum.from_matrix(v)};
}

TitsElt tits_word(const RootDatum& datum, const std::vector<int>& word) {
    LatticeVec torus(datum.rank(), 0);
    LatticeMap v = LatticeMap::identity(datum.rank());
    for (int i : word) fold_letter(datum, torus, v, i);
    return {mod2(torus), datum.from_matrix(v)};
}

LatticeVec bicycle(const RootDatum& datum, const WeylElt& w) {
    LatticeVec two = datum.two_rho_check() - w.matrix * datum.two_rho_check();
    LatticeVec half(two.size());
    for (size_t i = 0; i < two.size(); ++i) half[i] = two[i] / 2;
    return mod2(half);
}

LatticeVec inversion_coroot_sum(const RootDatum& datum, const WeylElt& w) {
    LatticeMap inv = datum.inverse(w).matrix;
    LatticeVec sum(datum.rank(), 0);
    for (const auto& c : datum.positive_coroots())
        if (!datum.is_positive_coroot(inv * c)) sum = sum + c;
    return sum;
}

}  // namespace twistrep
