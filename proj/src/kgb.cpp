#include "twistrep/kgb.hpp"

#include <algorithm>

namespace twistrep {

void require_cocharacter_dominant(const RootDatum& datum, const RatVec& g) {
    if (g.rank() != datum.rank()) throw InfinitesimalError("g has wrong rank");
    for (int i = 0; i < datum.semisimple_rank(); ++i) {
        Rational p = pair(datum.simple_root(i), g);
        if (p.denominator() != 1 || p <= 0)
            throw InfinitesimalError("g violates <alpha,g> in Z_{>0} for simple root " + std::to_string(i));
    }
}

void require_character_dominant(const RootDatum& datum, const RatVec& gamma) {
    if (gamma.rank() != datum.rank()) throw InfinitesimalError("gamma has wrong rank");
    for (const auto& c : datum.positive_coroots()) {
        Rational p = pair(gamma, c);
        if (p.denominator() == 1 && p <= 0)
            throw InfinitesimalError("gamma is not integrally dominant regular on coroot " + to_string(c));
    }
}

void require_delta0_fixed(const RootDatum& datum, const RatVec& gamma, const RatVec& g) {
    if (!(apply(datum.delta0(), g) == g)) throw InfinitesimalError("delta0(g) != g");
    if (!(apply(datum.delta0().transpose(), gamma) == gamma)) throw InfinitesimalError("delta0 does not fix gamma");
}

namespace {

// canonical solutions of (1 - theta) v = (1 - theta) shift, modulo (1 + theta)
std::vector<LatticeVec> enumerate_cosets(const LatticeMap& theta, const RatVec& shift) {
    const int n = theta.rows();
    LatticeMap minus = LatticeMap::identity(n) - theta;
    RatVec target = apply(minus, shift);
    if (!target.is_integral()) return {};
    auto base = solve_shifted(theta, -1, target.to_integral());
    if (!base) return {};
    LatticeReducer reducer = LatticeReducer::image_of(LatticeMap::identity(n) + theta);
    std::vector<LatticeVec> out;
    for (const auto& r : coset_reps(theta, +1)) out.push_back(reducer.reduce(*base + r));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

LatticeMap dual_theta(const TwistedInvolution& inv) { return -inv.theta.transpose(); }

}  // namespace

LatticeVec canonical_ell(const TwistedInvolution& inv, const LatticeVec& ell) {
    return LatticeReducer::image_of(LatticeMap::identity(inv.theta.rows()) + inv.theta).reduce(ell);
}

LatticeVec canonical_lambda(const TwistedInvolution& inv, const LatticeVec& lambda) {
    return LatticeReducer::image_of(LatticeMap::identity(inv.theta.rows()) + dual_theta(inv)).reduce(lambda);
}

std::vector<KgbElement> enumerate_kgb(const RootDatum& datum, const RatVec& g, const WeylElt& w) {
    require_cocharacter_dominant(datum, g);
    TwistedInvolution inv = theta_of(datum, w);
    std::vector<KgbElement> out;
    for (auto& ell : enumerate_cosets(inv.theta, g - rho_check(datum))) out.push_back({inv, ell, g});
    return out;
}

std::vector<DualKgbElement> enumerate_dual_kgb(const RootDatum& datum, const RatVec& gamma, const WeylElt& w) {
    require_character_dominant(datum, gamma);
    TwistedInvolution inv = theta_of(datum, w);
    std::vector<DualKgbElement> out;
    for (auto& lambda : enumerate_cosets(dual_theta(inv), gamma - rho(datum))) out.push_back({inv, lambda, gamma});
    return out;
}

Block::Block(std::shared_ptr<const RootDatum> datum, RatVec gamma, RatVec g)
    : datum_(std::move(datum)), gamma_(std::move(gamma)), g_(std::move(g)) {
    require_cocharacter_dominant(*datum_, g_);
    require_character_dominant(*datum_, gamma_);
    invs_ = enumerate_twisted_involutions(*datum_);
    for (size_t k = 0; k < invs_.size(); ++k) {
        inv_index_[invs_[k].theta] = static_cast<int>(k);
        auto xs = enumerate_kgb(*datum_, g_, invs_[k].w);
        if (xs.empty()) continue;
        auto ys = enumerate_dual_kgb(*datum_, gamma_, invs_[k].w);
        for (size_t a = 0; a < xs.size(); ++a)
            for (size_t b = 0; b < ys.size(); ++b) {
                lookup_[{static_cast<int>(k), xs[a].ell, ys[b].lambda}] = static_cast<int>(params_.size());
                params_.push_back({xs[a], ys[b], static_cast<int>(k), static_cast<int>(a), static_cast<int>(b)});
            }
    }
}

std::optional<int> Block::involution_index(const LatticeMap& theta) const {
    auto it = inv_index_.find(theta);
    if (it == inv_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Block::find(const LatticeMap& theta, const LatticeVec& ell, const LatticeVec& lambda) const {
    auto k = involution_index(theta);
    if (!k) return std::nullopt;
    const TwistedInvolution& inv = invs_[*k];
    auto it = lookup_.find({*k, canonical_ell(inv, ell), canonical_lambda(inv, lambda)});
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

std::vector<AtlasParam> block(const RootDatum& datum, const RatVec& g, const RatVec& gamma) {
    return Block(std::make_shared<const RootDatum>(datum), gamma, g).params();
}

std::optional<FixedWitness> fixed_witness(const RootDatum& datum, const AtlasParam& p) {
    require_delta0_fixed(datum, p.y.gamma, p.x.g);
    const LatticeMap& theta = p.x.inv.theta;
    const LatticeMap& delta = datum.delta0();
    if (!(delta * theta == theta * delta)) return std::nullopt;
    const int n = datum.rank();
    auto t = solve_shifted(theta, +1, (delta - LatticeMap::identity(n)) * p.x.ell);
    if (!t) return std::nullopt;
    auto tau = solve_shifted(theta.transpose(), -1, (delta.transpose() - LatticeMap::identity(n)) * p.y.lambda);
    if (!tau) return std::nullopt;
    return FixedWitness{*t, *tau};
}

}  // namespace twistrep
