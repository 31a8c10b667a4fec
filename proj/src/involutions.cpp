#include "twistrep/involutions.hpp"

#include "twistrep/extparams.hpp"

#include <set>

namespace twistrep {

TwistedInvolution theta_of(const RootDatum& datum, const WeylElt& w, Side side) {
    LatticeMap theta;
    if (side == Side::group) {
        theta = w.matrix * datum.xi0();
    } else {
        LatticeMap dual_xi0 = -(datum.xi0() * weyl_longest(datum).matrix).transpose();
        theta = datum.weight_action(w) * dual_xi0;
    }
    if (!(theta * theta).is_identity())
        throw InvariantError("theta_of: " + w.to_string() + " is not a twisted involution");
    return {w, theta, side};
}

std::vector<TwistedInvolution> enumerate_twisted_involutions(const RootDatum& datum) {
    std::vector<TwistedInvolution> out{theta_of(datum, datum.identity())};
    std::set<LatticeMap> seen{out[0].w.matrix};
    for (size_t k = 0; k < out.size(); ++k) {
        for (int i = 0; i < datum.semisimple_rank(); ++i) {
            const LatticeMap& w = out[k].w.matrix;
            LatticeMap next = datum.reflection(i) * w * datum.reflection(datum.xi0_perm(i));
            if (next == w) next = datum.reflection(i) * w;
            if (seen.insert(next).second) out.push_back(theta_of(datum, datum.from_matrix(next)));
        }
    }
    return out;
}

bool commutes_with_delta0(const RootDatum& datum, const TwistedInvolution& inv) {
    return datum.delta0() * inv.theta == inv.theta * datum.delta0();
}

/* ------------------------------------------------------------------ */
/*  Names                                                              */
/* ------------------------------------------------------------------ */

std::string to_string(RootStatusKind k) {
    switch (k) {
        case RootStatusKind::complex_ascent: return "complex ascent";
        case RootStatusKind::complex_descent: return "complex descent";
        case RootStatusKind::imaginary_compact: return "imaginary compact";
        case RootStatusKind::imaginary_noncompact_type1: return "imaginary noncompact type 1";
        case RootStatusKind::imaginary_noncompact_type2: return "imaginary noncompact type 2";
        case RootStatusKind::real_parity_type1: return "real parity type 1";
        case RootStatusKind::real_parity_type2: return "real parity type 2";
        case RootStatusKind::real_nonparity: return "real nonparity";
    }
    return "?";
}

std::string to_string(KappaLabel k) {
    static const char* names[] = {"1C+", "1C-", "1i1",  "1i2f", "1i2s", "1ic",  "1r1f", "1r1s", "1r2", "1rn",
                                  "2C+", "2C-", "2Ci",  "2Cr",  "2i11", "2i12", "2i22", "2r22", "2r21", "2r11",
                                  "2rn", "2ic", "3C+",  "3C-",  "3Ci",  "3Cr",  "3i",   "3r",   "3rn",  "3ic"};
    return names[static_cast<int>(k)];
}

KappaLabel dual_label(KappaLabel k) {
    using L = KappaLabel;
    switch (k) {
        case L::c1_plus: return L::c1_minus;
        case L::c1_minus: return L::c1_plus;
        case L::i1_1: return L::r1_2;
        case L::r1_2: return L::i1_1;
        case L::i1_2f: return L::r1_1f;
        case L::r1_1f: return L::i1_2f;
        case L::i1_2s: return L::r1_1s;
        case L::r1_1s: return L::i1_2s;
        case L::i1_c: return L::r1_n;
        case L::r1_n: return L::i1_c;
        case L::c2_plus: return L::c2_minus;
        case L::c2_minus: return L::c2_plus;
        case L::c2_i: return L::c2_r;
        case L::c2_r: return L::c2_i;
        case L::i2_11: return L::r2_22;
        case L::r2_22: return L::i2_11;
        case L::i2_12: return L::r2_21;
        case L::r2_21: return L::i2_12;
        case L::i2_22: return L::r2_11;
        case L::r2_11: return L::i2_22;
        case L::i2_c: return L::r2_n;
        case L::r2_n: return L::i2_c;
        case L::c3_plus: return L::c3_minus;
        case L::c3_minus: return L::c3_plus;
        case L::c3_i: return L::c3_r;
        case L::c3_r: return L::c3_i;
        case L::i3: return L::r3;
        case L::r3: return L::i3;
        case L::i3_c: return L::r3_n;
        case L::r3_n: return L::i3_c;
    }
    return k;
}

std::string KappaStatus::name() const {
    std::string s = to_string(label);
    if (label == KappaLabel::i2_12 || label == KappaLabel::r2_21) s += second_kind ? "s" : "f";
    return s;
}

/* ------------------------------------------------------------------ */
/*  Status of a single root                                            */
/* ------------------------------------------------------------------ */

namespace {

enum class Kind { complex_up, complex_down, imaginary, real };

Kind classify(const RootDatum& datum, const LatticeMap& theta, const LatticeVec& root) {
    LatticeVec image = theta.transpose() * root;
    if (image == root) return Kind::imaginary;
    if (image == -root) return Kind::real;
    return datum.is_positive_root(image) ? Kind::complex_up : Kind::complex_down;
}

bool noncompact(const LatticeVec& root, const LatticeVec& ell, const RatVec& g) {
    Rational ga = pair(root, g);
    return mod_pos(ga.numerator() - pair(root, ell), 2) == 1;
}

Int integral_pairing(const RatVec& gamma, const LatticeVec& coroot) {
    Rational p = pair(gamma, coroot);
    if (p.denominator() != 1) throw NonintegralError("root is not integral for gamma: " + to_string(coroot));
    return p.numerator();
}

bool satisfies_parity(const LatticeVec& coroot, const LatticeVec& lambda, const RatVec& gamma) {
    return mod_pos(integral_pairing(gamma, coroot) - pair(lambda, coroot), 2) == 1;
}

bool imaginary_type2(const LatticeMap& theta, const LatticeVec& coroot) {
    return solve_shifted(theta, +1, coroot).has_value();
}

bool real_type1(const LatticeMap& theta, const LatticeVec& root) {
    return solve_shifted(theta.transpose(), -1, root).has_value();
}

}  // namespace

RootStatus root_status(const RootDatum& datum, const TwistedInvolution& inv, const LatticeVec& root,
                       const LatticeVec& lambda, const LatticeVec& ell, const RatVec& gamma, const RatVec& g) {
    using S = RootStatusKind;
    LatticeVec coroot = datum.coroot_of(root);
    switch (classify(datum, inv.theta, root)) {
        case Kind::complex_up: return {root, S::complex_ascent};
        case Kind::complex_down: return {root, S::complex_descent};
        case Kind::imaginary:
            if (!noncompact(root, ell, g)) return {root, S::imaginary_compact};
            return {root, imaginary_type2(inv.theta, coroot) ? S::imaginary_noncompact_type2
                                                             : S::imaginary_noncompact_type1};
        case Kind::real:
            if (!satisfies_parity(coroot, lambda, gamma)) return {root, S::real_nonparity};
            return {root, real_type1(inv.theta, root) ? S::real_parity_type1 : S::real_parity_type2};
    }
    throw InvariantError("root_status: unreachable");
}

/* ------------------------------------------------------------------ */
/*  Status of a kappa orbit                                            */
/* ------------------------------------------------------------------ */

KappaStatus kappa_status(const KappaOrbit& orbit, const ExtendedParam& E) {
    using L = KappaLabel;
    const RootDatum& d = *E.datum;
    const LatticeMap& th = E.theta();
    const LatticeVec& a = d.simple_root(orbit.first());
    const LatticeVec& b = d.simple_root(orbit.second());
    const LatticeVec& ac = d.simple_coroot(orbit.first());
    const LatticeVec& bc = d.simple_coroot(orbit.second());
    KappaStatus st{orbit, L::c1_plus, false};
    LatticeVec image = th.transpose() * a;
    Kind kind = classify(d, th, a);

    if (orbit.kind == KappaKind::type1) {
        switch (kind) {
            case Kind::complex_up: st.label = L::c1_plus; break;
            case Kind::complex_down: st.label = L::c1_minus; break;
            case Kind::imaginary:
                if (!noncompact(a, E.ell, E.g))
                    st.label = L::i1_c;
                else if (imaginary_type2(th, ac))
                    st.label = mod_pos(pair(E.tau, ac), 2) == 0 ? L::i1_2f : L::i1_2s;
                else
                    st.label = L::i1_1;
                break;
            case Kind::real:
                if (!satisfies_parity(ac, E.lambda, E.gamma))
                    st.label = L::r1_n;
                else if (real_type1(th, a))
                    st.label = mod_pos(pair(a, E.t), 2) == 0 ? L::r1_1f : L::r1_1s;
                else
                    st.label = L::r1_2;
                break;
        }
        return st;
    }

    if (orbit.kind == KappaKind::type2) {
        if (image == b) {
            st.label = L::c2_i;
        } else if (image == -b) {
            st.label = L::c2_r;
        } else if (kind == Kind::complex_up) {
            st.label = L::c2_plus;
        } else if (kind == Kind::complex_down) {
            st.label = L::c2_minus;
        } else if (kind == Kind::imaginary) {
            if (!noncompact(a, E.ell, E.g)) {
                st.label = L::i2_c;
            } else if (imaginary_type2(th, ac)) {
                st.label = L::i2_22;
            } else if (imaginary_type2(th, ac + bc)) {
                st.label = L::i2_12;
                st.second_kind = mod_pos(pair(E.tau, ac) + pair(E.tau, bc), 2) == 1;
            } else {
                st.label = L::i2_11;
            }
        } else {
            if (!satisfies_parity(ac, E.lambda, E.gamma)) {
                st.label = L::r2_n;
            } else if (real_type1(th, a)) {
                st.label = L::r2_11;
            } else if (real_type1(th, a + b)) {
                st.label = L::r2_21;
                st.second_kind = mod_pos(pair(a, E.t) + pair(b, E.t), 2) == 1;
            } else {
                st.label = L::r2_22;
            }
        }
        return st;
    }

    if (image == b) {
        st.label = L::c3_i;
    } else if (image == -b) {
        st.label = L::c3_r;
    } else if (kind == Kind::complex_up) {
        st.label = L::c3_plus;
    } else if (kind == Kind::complex_down) {
        st.label = L::c3_minus;
    } else if (kind == Kind::imaginary) {
        st.label = noncompact(a, E.ell, E.g) ? L::i3 : L::i3_c;
    } else {
        st.label = satisfies_parity(ac, E.lambda, E.gamma) ? L::r3 : L::r3_n;
    }
    return st;
}

}  // namespace twistrep
