#include "twistrep/extparams.hpp"

#include <sstream>

namespace twistrep {

std::string ExtendedParam::to_string() const {
    std::ostringstream os;
    os << "w=" << inv.w.to_string() << " lambda=" << twistrep::to_string(lambda) << " tau=" << twistrep::to_string(tau)
       << " ell=" << twistrep::to_string(ell) << " t=" << twistrep::to_string(t);
    return os.str();
}

std::string FourthRoot::to_string() const {
    static const char* names[] = {"1", "i", "-1", "-i"};
    return names[exponent];
}

namespace {

LatticeMap id(int n) { return LatticeMap::identity(n); }

int parity_sign(Int e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

/* ------------------------------------------------------------------ */
/*  Validation                                                         */
/* ------------------------------------------------------------------ */

std::vector<int> violated_conditions(const ExtendedParam& E) {
    const RootDatum& d = *E.datum;
    const int n = d.rank();
    const LatticeMap& th = E.theta();
    const LatticeMap thT = th.transpose();
    const LatticeMap& D = d.delta0();
    std::vector<int> bad;
    for (const LatticeVec* v : {&E.lambda, &E.tau, &E.ell, &E.t})
        if (static_cast<int>(v->size()) != n) throw DimensionError("extended parameter has wrong rank");
    bool inv_ok = (th * th).is_identity() && th == E.inv.w.matrix * d.xi0() && D * th == th * D;
    if (!inv_ok) bad.push_back(0);
    if (!(apply(id(n) + thT, RatVec(E.lambda)) == apply(id(n) + thT, E.gamma - rho(d)))) bad.push_back(1);
    if (!(apply(id(n) - th, RatVec(E.ell)) == apply(id(n) - th, E.g - rho_check(d)))) bad.push_back(2);
    if ((D.transpose() - id(n)) * E.lambda != (id(n) - thT) * E.tau) bad.push_back(3);
    if ((D - id(n)) * E.ell != (id(n) + th) * E.t) bad.push_back(4);
    return bad;
}

const ExtendedParam& validate(const ExtendedParam& E) {
    auto bad = violated_conditions(E);
    if (!bad.empty()) {
        std::ostringstream os;
        os << "invalid extended parameter (" << E.to_string() << "): violated condition";
        for (int c : bad) os << ' ' << (c == 0 ? std::string("twisted-involution") : "(" + std::to_string(c) + ")");
        throw ValidationError(os.str(), bad);
    }
    return E;
}

/* ------------------------------------------------------------------ */
/*  Characters                                                         */
/* ------------------------------------------------------------------ */

FourthRoot z_char(const ExtendedParam& E) {
    const int n = E.datum->rank();
    return FourthRoot(pair(E.tau, (id(n) + E.theta()) * E.t) + 2 * pair(E.lambda, E.t));
}

FourthRoot zeta_char(const ExtendedParam& E) {
    const int n = E.datum->rank();
    return FourthRoot(pair(E.tau, (E.datum->delta0() - id(n)) * E.ell) + 2 * pair(E.tau, E.ell));
}

int epsilon_char(const RootDatum& datum, const LatticeVec& lambda, const LatticeVec& t) {
    return parity_sign(pair(lambda, (id(datum.rank()) + datum.delta0()) * t));
}

int epsilon_char(const ExtendedParam& E) { return epsilon_char(*E.datum, E.lambda, E.t); }

/* ------------------------------------------------------------------ */
/*  Equivalence signs                                                  */
/* ------------------------------------------------------------------ */

bool same_parameter(const ExtendedParam& E, const ExtendedParam& F) {
    if (!(E.inv == F.inv) || !(E.gamma == F.gamma)) return false;
    return canonical_ell(E.inv, E.ell) == canonical_ell(F.inv, F.ell) &&
           canonical_lambda(E.inv, E.lambda) == canonical_lambda(F.inv, F.lambda);
}

namespace {

Int halve_even(Int e, const char* where) {
    if (mod_pos(e, 2) != 0) throw InvariantError(std::string(where) + ": odd power of i in a sign");
    return e / 2;
}

}  // namespace

int sgn(const ExtendedParam& E, const ExtendedParam& F) {
    if (!same_parameter(E, F)) return 0;
    const int n = E.datum->rank();
    const LatticeMap Dm = E.datum->delta0() - id(n);
    Int i_exp = pair(F.tau, Dm * F.ell) - pair(E.tau, Dm * E.ell);
    Int e = halve_even(i_exp, "sgn") + pair(E.tau, F.ell - E.ell) + pair(F.lambda - E.lambda, F.t);
    return parity_sign(e);
}

int sgn_first_form(const ExtendedParam& E, const ExtendedParam& F) {
    if (!same_parameter(E, F)) return 0;
    const int n = E.datum->rank();
    const LatticeMap Dm = E.datum->delta0() - id(n);
    Int i_exp = pair(Dm.transpose() * E.lambda, F.t - E.t) + pair(F.tau - E.tau, Dm * F.ell);
    Int e = halve_even(i_exp, "sgn_first_form") + pair(E.tau, F.ell - E.ell) + pair(F.lambda - E.lambda, F.t) +
            pair(E.tau, F.t - E.t);
    return parity_sign(e);
}

int sgn_oracle(const ExtendedParam& E, const ExtendedParam& F) {
    if (!same_parameter(E, F)) throw InvariantError("sgn_oracle: different parameters");
    const int n = E.datum->rank();
    const LatticeMap& th = E.theta();
    const LatticeMap& D = E.datum->delta0();
    auto u = solve_shifted(th, +1, F.ell - E.ell);
    auto omega = solve_shifted(th.transpose(), -1, F.lambda - E.lambda);
    if (!u || !omega) throw InvariantError("sgn_oracle: change-of-representative equations unsolvable");
    LatticeVec i = F.t - E.t - (D - id(n)) * *u;
    LatticeVec iota = F.tau - E.tau - (D.transpose() - id(n)) * *omega;
    if (!is_zero((id(n) + th) * i) || !is_zero((id(n) - th.transpose()) * iota))
        throw InvariantError("sgn_oracle: correction terms are not in the expected eigenlattices");
    return parity_sign(pair((id(n) + D.transpose()) * E.tau, *u) + pair(iota, F.t));
}

/* ------------------------------------------------------------------ */
/*  Canonical and random extensions                                    */
/* ------------------------------------------------------------------ */

ExtendedParam canonical_extension(const Block& blk, int param_index) {
    const AtlasParam& p = blk.params().at(param_index);
    auto wit = fixed_witness(blk.datum(), p);
    if (!wit) throw InvariantError("canonical_extension: parameter is not delta0-fixed");
    return ExtendedParam{blk.datum_ptr(), blk.gamma(), blk.g(), p.x.inv, p.y.lambda, wit->tau, p.x.ell, wit->t};
}

ExtendedParam reference_extension(const ExtendedParam& E) {
    AtlasParam p;
    p.x = KgbElement{E.inv, canonical_ell(E.inv, E.ell), E.g};
    p.y = DualKgbElement{E.inv, canonical_lambda(E.inv, E.lambda), E.gamma};
    auto wit = fixed_witness(*E.datum, p);
    if (!wit) throw InvariantError("reference_extension: parameter is not delta0-fixed: " + E.to_string());
    ExtendedParam R = E;
    R.lambda = p.y.lambda;
    R.ell = p.x.ell;
    R.tau = wit->tau;
    R.t = wit->t;
    return R;
}

ExtendedParam random_extension(const ExtendedParam& E, std::mt19937_64& rng, int spread) {
    const int n = E.datum->rank();
    const LatticeMap& th = E.theta();
    const LatticeMap thT = th.transpose();
    const LatticeMap& D = E.datum->delta0();
    std::uniform_int_distribution<Int> coin(-spread, spread);
    auto random_vec = [&]() {
        LatticeVec v(n);
        for (auto& x : v) x = coin(rng);
        return v;
    };
    auto random_kernel = [&](const LatticeMap& m) {
        LatticeVec v(n, 0);
        for (const auto& k : kernel_basis(m)) v = v + coin(rng) * k;
        return v;
    };
    ExtendedParam F = E;
    LatticeVec u = random_vec();
    F.ell = E.ell + (id(n) + th) * u;
    F.t = E.t + (D - id(n)) * u + random_kernel(id(n) + th);
    LatticeVec mu = random_vec();
    F.lambda = E.lambda + (id(n) - thT) * mu;
    F.tau = E.tau + (D.transpose() - id(n)) * mu + random_kernel(id(n) - thT);
    return F;
}

/* ------------------------------------------------------------------ */
/*  ExtBlock                                                           */
/* ------------------------------------------------------------------ */

ExtBlock::ExtBlock(std::shared_ptr<const Block> blk) : block_(std::move(blk)) {
    require_delta0_fixed(block_->datum(), block_->gamma(), block_->g());
    ext_index_.assign(block_->size(), -1);
    for (int i = 0; i < block_->size(); ++i) {
        if (!fixed_witness(block_->datum(), block_->params()[i])) continue;
        ext_index_[i] = static_cast<int>(params_.size());
        params_.push_back(canonical_extension(*block_, i));
        block_index_.push_back(i);
    }
}

std::optional<int> ExtBlock::locate(const ExtendedParam& E) const {
    if (!(E.gamma == block_->gamma())) return std::nullopt;
    auto b = block_->find(E.theta(), E.ell, E.lambda);
    if (!b || ext_index_[*b] < 0) return std::nullopt;
    return ext_index_[*b];
}

std::shared_ptr<const ExtBlock> make_ext_block(const DatumDescription& d, const RatVec& gamma, const RatVec& g) {
    auto datum = std::make_shared<const RootDatum>(build_datum(d));
    auto blk = std::make_shared<const Block>(datum, gamma, g);
    return std::make_shared<const ExtBlock>(blk);
}

}  // namespace twistrep
