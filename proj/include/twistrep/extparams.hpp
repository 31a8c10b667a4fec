#pragma once

#include "twistrep/kgb.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace twistrep {

class ValidationError : public std::invalid_argument {
public:
    ValidationError(const std::string& what, std::vector<int> failed)
        : std::invalid_argument(what), failed_conditions(std::move(failed)) {}
    std::vector<int> failed_conditions;
};

struct ExtendedParam {
    std::shared_ptr<const RootDatum> datum;
    RatVec gamma;
    RatVec g;
    TwistedInvolution inv;
    LatticeVec lambda, tau, ell, t;

    const LatticeMap& theta() const { return inv.theta; }
    bool same_quadruple(const ExtendedParam& o) const {
        return inv == o.inv && gamma == o.gamma && lambda == o.lambda && tau == o.tau && ell == o.ell && t == o.t;
    }
    std::string to_string() const;
};

// i^exponent
struct FourthRoot {
    int exponent = 0;
    FourthRoot() = default;
    explicit FourthRoot(Int e) : exponent(static_cast<int>(mod_pos(e, 4))) {}
    FourthRoot operator*(const FourthRoot& o) const { return FourthRoot(exponent + o.exponent); }
    bool operator==(const FourthRoot& o) const = default;
    std::string to_string() const;
};

// indices of violated defining conditions (1)-(4); 0 means the involution itself is bad
std::vector<int> violated_conditions(const ExtendedParam& E);
const ExtendedParam& validate(const ExtendedParam& E);

FourthRoot z_char(const ExtendedParam& E);
FourthRoot zeta_char(const ExtendedParam& E);
int epsilon_char(const ExtendedParam& E);
int epsilon_char(const RootDatum& datum, const LatticeVec& lambda, const LatticeVec& t);

bool same_parameter(const ExtendedParam& E, const ExtendedParam& F);
// returns 0 when E and F are extensions of different parameters
int sgn(const ExtendedParam& E, const ExtendedParam& F);
// the first of the two equivalent closed expressions; used as a cross-check
int sgn_first_form(const ExtendedParam& E, const ExtendedParam& F);
// solves the change-of-representative equations and evaluates the path formula
int sgn_oracle(const ExtendedParam& E, const ExtendedParam& F);

ExtendedParam canonical_extension(const Block& blk, int param_index);
// the extension a block stores for the parameter of E
ExtendedParam reference_extension(const ExtendedParam& E);

// another extension of the same parameter, chosen at random
ExtendedParam random_extension(const ExtendedParam& E, std::mt19937_64& rng, int spread = 2);

/* ------------------------------------------------------------------ */
/*  Extended block: delta0-fixed parameters with canonical extensions  */
/* ------------------------------------------------------------------ */

class ExtBlock {
public:
    explicit ExtBlock(std::shared_ptr<const Block> blk);

    const Block& block() const { return *block_; }
    std::shared_ptr<const Block> block_ptr() const { return block_; }
    const RootDatum& datum() const { return block_->datum(); }
    int size() const { return static_cast<int>(params_.size()); }
    const ExtendedParam& param(int i) const { return params_.at(i); }
    int block_index(int i) const { return block_index_.at(i); }

    // index of the delta0-fixed parameter underlying E, if it is in this block
    std::optional<int> locate(const ExtendedParam& E) const;

private:
    std::shared_ptr<const Block> block_;
    std::vector<ExtendedParam> params_;
    std::vector<int> block_index_;
    std::vector<int> ext_index_;  // block index -> ext index or -1
};

std::shared_ptr<const ExtBlock> make_ext_block(const DatumDescription& d, const RatVec& gamma, const RatVec& g);

}  // namespace twistrep
