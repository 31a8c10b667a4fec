#pragma once

#include "twistrep/involutions.hpp"

#include <map>
#include <memory>
#include <optional>

namespace twistrep {

class InfinitesimalError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct KgbElement {
    TwistedInvolution inv;
    LatticeVec ell;
    RatVec g;
};

// inv is the group-side involution; the dual side uses its negative transpose
struct DualKgbElement {
    TwistedInvolution inv;
    LatticeVec lambda;
    RatVec gamma;
};

struct AtlasParam {
    KgbElement x;
    DualKgbElement y;
    int inv_index = 0;
    int x_index = 0;
    int y_index = 0;
};

struct FixedWitness {
    LatticeVec t;
    LatticeVec tau;
};

// <alpha, g> must be a positive integer for every simple root
void require_cocharacter_dominant(const RootDatum& datum, const RatVec& g);
// <gamma, alpha_check> must be positive whenever it is an integer (positive roots)
void require_character_dominant(const RootDatum& datum, const RatVec& gamma);
void require_delta0_fixed(const RootDatum& datum, const RatVec& gamma, const RatVec& g);

std::vector<KgbElement> enumerate_kgb(const RootDatum& datum, const RatVec& g, const WeylElt& w);
std::vector<DualKgbElement> enumerate_dual_kgb(const RootDatum& datum, const RatVec& gamma, const WeylElt& w);

// canonical representative of ell modulo (1+theta)X_*, and of lambda modulo (1-theta^T)X^*
LatticeVec canonical_ell(const TwistedInvolution& inv, const LatticeVec& ell);
LatticeVec canonical_lambda(const TwistedInvolution& inv, const LatticeVec& lambda);

class Block {
public:
    Block(std::shared_ptr<const RootDatum> datum, RatVec gamma, RatVec g);

    const RootDatum& datum() const { return *datum_; }
    std::shared_ptr<const RootDatum> datum_ptr() const { return datum_; }
    const RatVec& gamma() const { return gamma_; }
    const RatVec& g() const { return g_; }

    const std::vector<TwistedInvolution>& involutions() const { return invs_; }
    std::optional<int> involution_index(const LatticeMap& theta) const;
    const std::vector<AtlasParam>& params() const { return params_; }
    int size() const { return static_cast<int>(params_.size()); }

    // block index of the atlas parameter determined by (theta, ell mod, lambda mod)
    std::optional<int> find(const LatticeMap& theta, const LatticeVec& ell, const LatticeVec& lambda) const;

private:
    std::shared_ptr<const RootDatum> datum_;
    RatVec gamma_, g_;
    std::vector<TwistedInvolution> invs_;
    std::map<LatticeMap, int> inv_index_;
    std::vector<AtlasParam> params_;
    std::map<std::tuple<int, LatticeVec, LatticeVec>, int> lookup_;
};

std::vector<AtlasParam> block(const RootDatum& datum, const RatVec& g, const RatVec& gamma);

std::optional<FixedWitness> fixed_witness(const RootDatum& datum, const AtlasParam& p);

}  // namespace twistrep
