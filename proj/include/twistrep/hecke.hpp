#pragma once

#include "twistrep/extparams.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace twistrep {

/* ------------------------------------------------------------------ */
/*  Laurent polynomials in q^(1/2)                                     */
/* ------------------------------------------------------------------ */

// Exponents are stored in halves: key 2 is q, key 1 is q^(1/2).
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(Int constant);

    static LaurentPoly q_power(int exponent) { return monomial(1, 2 * exponent); }
    static LaurentPoly monomial(Int coefficient, int half_exponent);
    static LaurentPoly parse(const std::string& text);

    const std::map<int, Int>& terms() const { return terms_; }
    Int coefficient(int half_exponent) const;
    bool is_zero() const { return terms_.empty(); }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    bool operator==(const LaurentPoly& o) const = default;

    // "c*q^(e)" terms, highest exponent first; half exponents print as "k/2"
    std::string to_string() const;

private:
    void add_term(int half_exponent, Int coefficient);
    std::map<int, Int> terms_;
};

LaurentPoly operator*(Int k, const LaurentPoly& p);

// coefficients of canonical basis elements of an ExtBlock
using HeckeVector = std::map<int, LaurentPoly>;

void add_to(HeckeVector& v, int index, const LaurentPoly& coefficient);
HeckeVector scaled(const HeckeVector& v, const LaurentPoly& k);
std::string to_string(const HeckeVector& v);

class LaurentMatrix {
public:
    LaurentMatrix() = default;
    explicit LaurentMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}
    static LaurentMatrix identity(int n);

    int size() const { return n_; }
    LaurentPoly& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const LaurentPoly& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    LaurentMatrix operator*(const LaurentMatrix& o) const;
    LaurentMatrix operator+(const LaurentMatrix& o) const;
    LaurentMatrix operator-(const LaurentMatrix& o) const;
    bool operator==(const LaurentMatrix& o) const = default;

    std::string to_string() const;

private:
    int n_ = 0;
    std::vector<LaurentPoly> a_;
};

LaurentMatrix operator*(const LaurentPoly& k, const LaurentMatrix& m);

/* ------------------------------------------------------------------ */
/*  Cross actions and Cayley transforms                                */
/* ------------------------------------------------------------------ */

class UnsupportedError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// values[i] enters with sign signs[i]; the quadruple alone cannot always carry it
struct CayleyResult {
    std::vector<ExtendedParam> values;
    std::vector<int> signs;
    std::vector<std::string> labels;
};

TwistedInvolution involution_with_theta(const RootDatum& datum, const LatticeMap& theta);

// the crx rows (and the cross actions fixed by the tables' T formulas)
ExtendedParam cross(const KappaOrbit& kappa, const ExtendedParam& E);
// the cr1x rows of 2i12 and 2r21
ExtendedParam cross1(const KappaOrbit& kappa, const ExtendedParam& E);
// an empty result with a "[none]" label marks the f/s rows without an extension
CayleyResult cayley(const KappaOrbit& kappa, const ExtendedParam& E);
// the table row applied to the quadruple exactly as given
CayleyResult cayley_row(const KappaOrbit& kappa, const ExtendedParam& E);

/* ------------------------------------------------------------------ */
/*  Hecke operators                                                    */
/* ------------------------------------------------------------------ */

// Drives the choices made in the 2i12 / 2r21 normal form. With no seed the
// choices are the deterministic ones; a seed re-randomizes the starting
// extension and the order of the two roots in kappa.
struct NormalFormChoice {
    std::optional<std::uint64_t> seed;
};

int kappa_length(const KappaOrbit& kappa);

HeckeVector t_apply(const ExtBlock& blk, const KappaOrbit& kappa, int basis_index,
                    const NormalFormChoice& choice = {});
LaurentMatrix matrix_of(const ExtBlock& blk, const KappaOrbit& kappa);

// (index, sign) with [X] = sign * [canonical basis element index]
std::pair<int, int> express(const ExtBlock& blk, const ExtendedParam& X);

/* ------------------------------------------------------------------ */
/*  Nonintegral infinitesimal character                                */
/* ------------------------------------------------------------------ */

struct IntegralSystem {
    std::vector<int> positive;  // indices into datum.positive_roots()
    std::vector<int> simple;
    std::vector<LatticeMap> weyl;  // W(gamma) acting on cocharacters
};

IntegralSystem integral_system(const RootDatum& datum, const RatVec& gamma);
bool is_integrally_dominant(const RootDatum& datum, const RatVec& gamma);
bool is_integral_root(const RootDatum& datum, const RatVec& gamma, const LatticeVec& root);

RatVec star_act(const RootDatum& datum, const WeylElt& w, const RatVec& gamma);

// table cross when kappa is integral and has a row, the explicit W-action otherwise
ExtendedParam cross_nonintegral(const KappaOrbit& kappa, const ExtendedParam& E);

// roots: one root or a delta0-orbit of two positive roots, integral-simple for E.gamma
CayleyResult cayley_nonintegral(const std::vector<LatticeVec>& roots, const ExtendedParam& E);

}  // namespace twistrep
