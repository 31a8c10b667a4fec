#include "twistrep/hecke.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

namespace twistrep {

/* ------------------------------------------------------------------ */
/*  LaurentPoly                                                        */
/* ------------------------------------------------------------------ */

LaurentPoly::LaurentPoly(Int constant) { add_term(0, constant); }

LaurentPoly LaurentPoly::monomial(Int coefficient, int half_exponent) {
    LaurentPoly p;
    p.add_term(half_exponent, coefficient);
    return p;
}

void LaurentPoly::add_term(int half_exponent, Int coefficient) {
    if (coefficient == 0) return;
    Int& c = terms_[half_exponent];
    c += coefficient;
    if (c == 0) terms_.erase(half_exponent);
}

Int LaurentPoly::coefficient(int half_exponent) const {
    auto it = terms_.find(half_exponent);
    return it == terms_.end() ? 0 : it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    return r += o;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (auto [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (auto [e1, c1] : terms_)
        for (auto [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly operator*(Int k, const LaurentPoly& p) { return LaurentPoly(k) * p; }

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [e, c] = *it;
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        os << (c < 0 ? -c : c) << "*q^(";
        if (e % 2 == 0)
            os << e / 2;
        else
            os << e << "/2";
        os << ')';
        first = false;
    }
    return os.str();
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s == "0") return {};
    LaurentPoly p;
    size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("LaurentPoly::parse: " + why + " at offset " + std::to_string(pos) + " in '" +
                                    text + "'");
    };
    auto read_int = [&]() -> Int {
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || !std::isdigit(static_cast<unsigned char>(s[pos - 1]))) fail("expected an integer");
        return std::stoll(s.substr(start, pos - start));
    };
    auto expect = [&](const std::string& lit) {
        if (s.compare(pos, lit.size(), lit) != 0) fail("expected '" + lit + "'");
        pos += lit.size();
    };
    if (s.empty()) fail("empty input");
    while (pos < s.size()) {
        Int c = read_int();
        expect("*q^(");
        Int e = read_int();
        int half = 0;
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            if (read_int() != 2) fail("exponent denominator must be 2");
            half = static_cast<int>(e);
        } else {
            half = static_cast<int>(2 * e);
        }
        expect(")");
        p.add_term(half, c);
        if (pos < s.size() && s[pos] != '+' && s[pos] != '-') fail("expected '+' or '-'");
    }
    return p;
}

void add_to(HeckeVector& v, int index, const LaurentPoly& coefficient) {
    LaurentPoly& c = v[index];
    c += coefficient;
    if (c.is_zero()) v.erase(index);
}

HeckeVector scaled(const HeckeVector& v, const LaurentPoly& k) {
    HeckeVector out;
    for (const auto& [i, c] : v) add_to(out, i, k * c);
    return out;
}

std::string to_string(const HeckeVector& v) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : v) {
        if (!first) os << " + ";
        os << '(' << c.to_string() << ")[" << i << ']';
        first = false;
    }
    return os.str();
}

LaurentMatrix LaurentMatrix::identity(int n) {
    LaurentMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
    if (n_ != o.n_) throw DimensionError("LaurentMatrix product size mismatch");
    LaurentMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const LaurentPoly& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < n_; ++j)
                if (!o(k, j).is_zero()) r(i, j) += a * o(k, j);
        }
    return r;
}

LaurentMatrix LaurentMatrix::operator+(const LaurentMatrix& o) const {
    if (n_ != o.n_) throw DimensionError("LaurentMatrix sum size mismatch");
    LaurentMatrix r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
    return r;
}

LaurentMatrix LaurentMatrix::operator-(const LaurentMatrix& o) const { return *this + LaurentPoly(-1) * o; }

LaurentMatrix operator*(const LaurentPoly& k, const LaurentMatrix& m) {
    LaurentMatrix r(m.size());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) r(i, j) = k * m(i, j);
    return r;
}

std::string LaurentMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) os << (j ? " " : "") << (*this)(i, j).to_string();
        os << '\n';
    }
    return os.str();
}

/* ------------------------------------------------------------------ */
/*  Shared helpers for the table rows                                  */
/* ------------------------------------------------------------------ */

namespace {

using L = KappaLabel;

LatticeMap id(int n) { return LatticeMap::identity(n); }

Int half(Int x, const std::string& where) {
    if (mod_pos(x, 2) != 0) throw InvariantError(where + ": expected an even integer, got " + std::to_string(x));
    return x / 2;
}

LatticeVec half_vec(const LatticeVec& v, const std::string& where) {
    LatticeVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = half(v[i], where);
    return out;
}

Int gamma_pair(const ExtendedParam& E, const LatticeVec& coroot) {
    Rational p = pair(E.gamma, coroot);
    if (p.denominator() != 1) throw NonintegralError("gamma is not integral on coroot " + to_string(coroot));
    return p.numerator();
}

Int g_pair(const ExtendedParam& E, const LatticeVec& root) {
    Rational p = pair(root, E.g);
    if (p.denominator() != 1) throw InvariantError("g is not integral on root " + to_string(root));
    return p.numerator();
}

int parity_sign(Int e) { return mod_pos(e, 2) == 0 ? 1 : -1; }

struct OrbitRoots {
    LatticeVec a, b, ac, bc;
    LatticeMap W;  // w_kappa on cocharacters
    LatticeVec kappa() const { return a + b; }
    LatticeVec kappa_check() const { return ac + bc; }
};

OrbitRoots orbit_roots(const RootDatum& d, const KappaOrbit& k) {
    return {d.simple_root(k.first()), d.simple_root(k.second()), d.simple_coroot(k.first()),
            d.simple_coroot(k.second()), k.w_kappa.matrix};
}

LatticeVec reflect_character(const LatticeVec& v, const LatticeVec& root, const LatticeVec& coroot) {
    return v - pair(v, coroot) * root;
}

LatticeVec reflect_cocharacter(const LatticeVec& v, const LatticeVec& root, const LatticeVec& coroot) {
    return v - pair(root, v) * coroot;
}

LatticeVec solve_row(const LatticeMap& theta, int sign, const LatticeVec& target, const std::string& row) {
    auto s = solve_shifted(theta, sign, target);
    if (!s) throw InvariantError(row + ": auxiliary equation for " + to_string(target) + " has no solution");
    return *s;
}

ExtendedParam at_involution(const ExtendedParam& E, const LatticeMap& theta) {
    ExtendedParam F = E;
    F.inv = involution_with_theta(*E.datum, theta);
    return F;
}

bool has_crx_row(L label) {
    switch (label) {
        case L::c1_plus: case L::c1_minus: case L::i1_1: case L::r1_2: case L::c2_plus: case L::c2_minus:
        case L::i2_11: case L::r2_22: case L::c3_plus: case L::c3_minus:
            return true;
        default:
            return false;
    }
}

bool has_cayley_row(L label) {
    switch (label) {
        case L::c1_plus: case L::c1_minus: case L::i1_c: case L::r1_n: case L::c2_plus: case L::c2_minus:
        case L::i2_c: case L::r2_n: case L::c3_plus: case L::c3_minus: case L::i3_c: case L::r3_n:
            return false;
        default:
            return true;
    }
}

}  // namespace

TwistedInvolution involution_with_theta(const RootDatum& datum, const LatticeMap& theta) {
    return theta_of(datum, datum.from_matrix(theta * datum.xi0()));
}

/* ------------------------------------------------------------------ */
/*  Cross actions                                                      */
/* ------------------------------------------------------------------ */

ExtendedParam cross(const KappaOrbit& kappa, const ExtendedParam& E) {
    const RootDatum& d = *E.datum;
    KappaStatus st = kappa_status(kappa, E);
    OrbitRoots o = orbit_roots(d, kappa);
    const LatticeMap WT = o.W.transpose();
    ExtendedParam F = E;
    switch (st.label) {
        case L::c1_plus:
        case L::c1_minus:
            F.lambda = reflect_character(E.lambda, o.a, o.ac) + (gamma_pair(E, o.ac) - 1) * o.a;
            F.tau = reflect_character(E.tau, o.a, o.ac);
            F.ell = reflect_cocharacter(E.ell, o.a, o.ac) + (g_pair(E, o.a) - 1) * o.ac;
            F.t = reflect_cocharacter(E.t, o.a, o.ac);
            return at_involution(F, o.W * E.theta() * o.W);
        case L::i1_1: F.ell = E.ell + o.ac; return F;
        case L::r1_2: F.lambda = E.lambda + o.a; return F;
        case L::c2_plus:
        case L::c2_minus:
            F.lambda = WT * E.lambda + (gamma_pair(E, o.ac) - 1) * o.kappa();
            F.tau = WT * E.tau;
            F.ell = o.W * E.ell + (g_pair(E, o.a) - 1) * o.kappa_check();
            F.t = o.W * E.t;
            return at_involution(F, o.W * E.theta() * o.W);
        case L::i2_11: F.ell = E.ell + o.kappa_check(); return F;
        case L::r2_22: F.lambda = E.lambda + o.kappa(); return F;
        case L::c3_plus:
        case L::c3_minus:
            F.lambda = WT * E.lambda + (gamma_pair(E, o.kappa_check()) - 2) * o.kappa();
            F.tau = WT * E.tau;
            F.ell = o.W * E.ell + (g_pair(E, o.kappa()) - 2) * o.kappa_check();
            F.t = o.W * E.t;
            return at_involution(F, o.W * E.theta() * o.W);
        default:
            throw UnsupportedError("cross: no crx row for status " + st.name());
    }
}

ExtendedParam cross1(const KappaOrbit& kappa, const ExtendedParam& E) {
    OrbitRoots o = orbit_roots(*E.datum, kappa);
    KappaStatus st = kappa_status(kappa, E);
    ExtendedParam F = E;
    if (st.label == L::i2_12) {
        LatticeVec s = solve_row(E.theta(), +1, o.ac - o.bc, "2i12 cr1x");
        F.ell = E.ell + o.ac;
        F.t = E.t - s;
    } else if (st.label == L::r2_21) {
        LatticeVec sigma = solve_row(E.theta().transpose(), -1, o.a - o.b, "2r21 cr1x");
        F.lambda = E.lambda + o.a;
        F.tau = E.tau - sigma;
    } else {
        throw UnsupportedError("cross1: no cr1x row for status " + st.name());
    }
    return F;
}

/* ------------------------------------------------------------------ */
/*  Cayley transforms                                                  */
/* ------------------------------------------------------------------ */

namespace {

// same parameter, witness shifted by a kernel vector so its pairing with `against` is even
std::optional<ExtendedParam> even_witness(const ExtendedParam& E, bool on_tau, const LatticeVec& against) {
    const int n = E.datum->rank();
    const LatticeMap m = on_tau ? LatticeMap::identity(n) - E.theta().transpose() : LatticeMap::identity(n) + E.theta();
    for (const auto& u : kernel_basis(m)) {
        if (mod_pos(pair(u, against), 2) == 0) continue;
        ExtendedParam F = E;
        (on_tau ? F.tau : F.t) = (on_tau ? F.tau : F.t) + u;
        return F;
    }
    return std::nullopt;
}

}  // namespace

CayleyResult cayley_row(const KappaOrbit& kappa, const ExtendedParam& E) {
    const RootDatum& d = *E.datum;
    KappaStatus st = kappa_status(kappa, E);
    if (!has_cayley_row(st.label)) throw UnsupportedError("cayley: no Cayley row for status " + st.name());
    OrbitRoots o = orbit_roots(d, kappa);
    const LatticeMap theta1 = o.W * E.theta();
    const LatticeMap theta1T = theta1.transpose();
    const std::string row = st.name() + " Cay";
    if (st.label == L::i3 || st.label == L::r3) {
        const bool on_tau = st.label == L::i3;
        const Int w = on_tau ? pair(E.tau, o.kappa_check()) : pair(o.kappa(), E.t);
        if (mod_pos(w, 2) != 0) {
            auto F = even_witness(E, on_tau, on_tau ? o.kappa_check() : o.kappa());
            if (!F) throw UnsupportedError(row + ": witness pairs oddly with kappa and cannot be shifted");
            CayleyResult res = cayley_row(kappa, *F);
            if (sgn(E, *F) == -1)
                for (auto& s : res.signs) s = -s;
            return res;
        }
    }
    ExtendedParam base = at_involution(E, theta1);
    CayleyResult out;
    auto emit = [&](ExtendedParam F) {
        out.values.push_back(std::move(F));
        out.signs.push_back(1);
        out.labels.push_back(row);
    };

    const Int la = pair(E.lambda, o.ac), lb = pair(E.lambda, o.bc);
    const Int ea = pair(o.a, E.ell), eb = pair(o.b, E.ell);
    const Int ta = pair(E.tau, o.ac), tb = pair(E.tau, o.bc);
    const Int sa = pair(o.a, E.t), sb = pair(o.b, E.t);
    auto ell_ascent = [&]() {
        LatticeVec ell = E.ell + half(g_pair(E, o.a) - ea - 1, row) * o.ac;
        if (kappa.kind == KappaKind::type2) ell = ell + half(g_pair(E, o.b) - eb - 1, row) * o.bc;
        return ell;
    };
    auto lambda_descent = [&]() {
        LatticeVec lambda = E.lambda + half(gamma_pair(E, o.ac) - la - 1, row) * o.a;
        if (kappa.kind == KappaKind::type2) lambda = lambda + half(gamma_pair(E, o.bc) - lb - 1, row) * o.b;
        return lambda;
    };

    switch (st.label) {
        case L::i1_1: {
            LatticeVec sigma = solve_row(theta1T, -1, o.a, row);
            base.tau = E.tau - ta * sigma;
            base.ell = ell_ascent();
            emit(base);
            break;
        }
        case L::i1_2f: {
            base.tau = E.tau - half(ta, row) * o.a;
            base.ell = ell_ascent();
            emit(base);
            base.lambda = E.lambda + o.a;
            emit(base);
            break;
        }
        case L::r1_1f: {
            base.lambda = lambda_descent();
            base.t = E.t - half(sa, row) * o.ac;
            emit(base);
            base.ell = E.ell + o.ac;
            emit(base);
            break;
        }
        case L::r1_2: {
            LatticeVec s = solve_row(theta1, +1, o.ac, row);
            base.lambda = lambda_descent();
            base.t = E.t - sa * s;
            emit(base);
            break;
        }
        case L::c2_i: {
            base.lambda = reflect_character(E.lambda, o.a, o.ac) + (gamma_pair(E, o.ac) - 1) * o.a;
            base.tau = E.tau - half(ta + tb, row) * o.a;
            base.ell = reflect_cocharacter(E.ell, o.a, o.ac) + (g_pair(E, o.a) - 1) * o.ac;
            base.t = reflect_cocharacter(E.t, o.a, o.ac) + (ea - g_pair(E, o.a) + 1) * o.ac;
            emit(base);
            break;
        }
        case L::c2_r: {
            base.lambda = reflect_character(E.lambda, o.a, o.ac) + (gamma_pair(E, o.ac) - 1) * o.a;
            base.tau = reflect_character(E.tau, o.a, o.ac) + (la - gamma_pair(E, o.ac) + 1) * o.a;
            base.ell = reflect_cocharacter(E.ell, o.a, o.ac) + (g_pair(E, o.a) - 1) * o.ac;
            base.t = E.t - half(sa + sb, row) * o.ac;
            emit(base);
            break;
        }
        case L::i2_11: {
            LatticeVec sigma_a = solve_row(theta1T, -1, o.a, row);
            LatticeVec sigma_b = solve_row(theta1T, -1, o.b, row);
            base.tau = E.tau - ta * sigma_a - tb * sigma_b;
            base.ell = ell_ascent();
            emit(base);
            break;
        }
        case L::i2_12: {
            if (st.second_kind) break;
            LatticeVec sigma = solve_row(theta1T, -1, o.a - o.b, row);
            base.tau = E.tau + tb * sigma - half(ta + tb, row) * o.a;
            base.ell = ell_ascent();
            emit(base);
            base.lambda = E.lambda + o.a;
            base.tau = base.tau - sigma;
            emit(base);
            break;
        }
        case L::i2_22: {
            base.ell = ell_ascent();
            if (mod_pos(ta, 2) == 0 && mod_pos(tb, 2) == 0) {
                base.tau = E.tau - half(ta, row) * o.a - half(tb, row) * o.b;
                emit(base);
                base.lambda = E.lambda + o.kappa();
                emit(base);
            } else {
                base.lambda = E.lambda + o.a;
                base.tau = E.tau - half(ta + 1, row) * o.a - half(tb - 1, row) * o.b;
                emit(base);
                base.lambda = E.lambda + o.b;
                base.tau = E.tau - half(ta - 1, row) * o.a - half(tb + 1, row) * o.b;
                emit(base);
            }
            break;
        }
        case L::r2_22: {
            LatticeVec s_a = solve_row(theta1, +1, o.ac, row);
            LatticeVec s_b = solve_row(theta1, +1, o.bc, row);
            base.lambda = lambda_descent();
            base.t = E.t - sa * s_a - sb * s_b;
            emit(base);
            break;
        }
        case L::r2_21: {
            if (st.second_kind) break;
            LatticeVec s = solve_row(theta1, +1, o.ac - o.bc, row);
            base.lambda = lambda_descent();
            base.t = E.t + sb * s - half(sa + sb, row) * o.ac;
            emit(base);
            base.ell = E.ell + o.ac;
            base.t = base.t - s;
            emit(base);
            break;
        }
        case L::r2_11: {
            base.lambda = lambda_descent();
            if (mod_pos(sa, 2) == 0 && mod_pos(sb, 2) == 0) {
                base.t = E.t - half(sa, row) * o.ac - half(sb, row) * o.bc;
                emit(base);
                base.ell = E.ell + o.kappa_check();
                emit(base);
            } else {
                base.ell = E.ell + o.ac;
                base.t = E.t - half(sa + 1, row) * o.ac - half(sb - 1, row) * o.bc;
                emit(base);
                base.ell = E.ell + o.bc;
                base.t = E.t - half(sa - 1, row) * o.ac - half(sb + 1, row) * o.bc;
                emit(base);
            }
            break;
        }
        case L::c3_i: {
            if (mod_pos(gamma_pair(E, o.ac) - 1 - la, 2) != 0) base.lambda = E.lambda + o.kappa();
            base.tau = E.tau - half(pair(E.tau, o.kappa_check()), row) * o.kappa();
            base.ell = E.ell + (g_pair(E, o.a) - 1 - ea) * o.kappa_check();
            emit(base);
            break;
        }
        case L::c3_r: {
            base.lambda = E.lambda + (gamma_pair(E, o.ac) - 1 - la) * o.kappa();
            if (mod_pos(g_pair(E, o.a) - 1 - ea, 2) != 0) base.ell = E.ell + o.kappa_check();
            base.t = E.t - half(pair(o.kappa(), E.t), row) * o.kappa_check();
            emit(base);
            break;
        }
        case L::i3: {
            base.tau = E.tau - half(pair(E.tau, o.kappa_check()), row) * o.kappa();
            base.ell = E.ell + (g_pair(E, o.a) - 1 - half(pair(o.kappa(), E.ell), row)) * o.kappa_check();
            emit(base);
            break;
        }
        case L::r3: {
            base.lambda = E.lambda + (gamma_pair(E, o.ac) - 1 - half(pair(E.lambda, o.kappa_check()), row)) * o.kappa();
            base.t = E.t - half(pair(o.kappa(), E.t), row) * o.kappa_check();
            emit(base);
            break;
        }
        default:  // 1i2s, 1r1s: no extension
            break;
    }
    if (out.values.empty()) out.labels = {"[none]"};
    return out;
}

// the rows are not sign-stable under every change of representative, so they
// are read on the block's representative and the sign is carried across
CayleyResult cayley(const KappaOrbit& kappa, const ExtendedParam& E) {
    const ExtendedParam R = reference_extension(E);
    CayleyResult res = cayley_row(kappa, R);
    const int s = sgn(E, R);
    for (auto& x : res.signs) x *= s;
    return res;
}

/* ------------------------------------------------------------------ */
/*  Hecke operators                                                    */
/* ------------------------------------------------------------------ */

int kappa_length(const KappaOrbit& kappa) { return kappa.length; }

std::pair<int, int> express(const ExtBlock& blk, const ExtendedParam& X) {
    auto i = blk.locate(X);
    if (!i) throw InvariantError("express: " + X.to_string() + " is not a delta0-fixed member of the block");
    int s = sgn(X, blk.param(*i));
    if (s == 0) throw InvariantError("express: sgn undefined for " + X.to_string());
    return {*i, s};
}

namespace {

struct NormalForm {
    ExtendedParam E0, E0p, F0, F0p;
    bool switched = false;  // the input was matched with E0' rather than E0
};

KappaOrbit with_roots_swapped(const RootDatum& d, const KappaOrbit& kappa) {
    KappaOrbit k = kappa;
    std::reverse(k.roots.begin(), k.roots.end());
    std::vector<int> word = kappa.w_kappa.word;
    for (int& i : word) i = (i == kappa.first()) ? kappa.second() : (i == kappa.second() ? kappa.first() : i);
    k.w_kappa = d.from_word(word);
    return k;
}

NormalForm normal_form_2i12(const KappaOrbit& kappa, ExtendedParam E) {
    const RootDatum& d = *E.datum;
    OrbitRoots o = orbit_roots(d, kappa);
    const std::string where = "2i12 normal form";
    const LatticeMap theta1 = o.W * E.theta();
    LatticeVec sigma = solve_row(theta1.transpose(), -1, o.a - o.b, where);

    Int ta = pair(E.tau, o.ac), tb = pair(E.tau, o.bc);
    E.tau = E.tau + tb * sigma - half(ta + tb, where) * o.a;

    auto offsets = [&](const ExtendedParam& X) {
        return std::pair{half(g_pair(X, o.a) - pair(o.a, X.ell) - 1, where),
                         half(g_pair(X, o.b) - pair(o.b, X.ell) - 1, where)};
    };
    NormalForm nf;
    auto [a, b] = offsets(E);
    if (mod_pos(a + b, 2) != 0) {
        E = cross1(kappa, E);
        nf.switched = true;
        std::tie(a, b) = offsets(E);
    }
    E.ell = E.ell + a * o.ac + b * o.bc;
    E.t = E.t + half(b - a, where) * (o.ac - o.bc);

    for (Int v : {pair(E.tau, o.ac), pair(E.tau, o.bc), pair(o.a, E.t), pair(o.b, E.t)})
        if (v != 0) throw InvariantError(where + ": failed to normalize " + E.to_string());
    nf.E0 = validate(E);
    nf.E0p = validate(cross1(kappa, nf.E0));
    nf.F0 = validate(at_involution(nf.E0, theta1));
    nf.F0p = validate(cross1(kappa, nf.F0));
    return nf;
}

}  // namespace

HeckeVector t_apply(const ExtBlock& blk, const KappaOrbit& kappa, int basis_index, const NormalFormChoice& choice) {
    const ExtendedParam& E = blk.param(basis_index);
    const RootDatum& d = blk.datum();
    KappaStatus st = kappa_status(kappa, E);
    const LaurentPoly q = LaurentPoly::q_power(1);
    const LaurentPoly Q = LaurentPoly::q_power(kappa_length(kappa));
    const LaurentPoly one(1);
    HeckeVector out;
    auto self = [&](const LaurentPoly& c) { add_to(out, basis_index, c); };
    auto put = [&](const ExtendedParam& X, const LaurentPoly& c) {
        auto [i, s] = express(blk, X);
        add_to(out, i, s * c);
    };
    auto cay = [&]() { return cayley(kappa, E); };
    auto put_cay = [&](const CayleyResult& c, size_t i, const LaurentPoly& coeff) {
        put(c.values.at(i), c.signs.at(i) * coeff);
    };

    switch (st.label) {
        case L::c1_plus:
        case L::c2_plus:
        case L::c3_plus:
            put(cross(kappa, E), one);
            break;
        case L::c1_minus:
        case L::c2_minus:
        case L::c3_minus:
            self(Q - one);
            put(cross(kappa, E), Q);
            break;
        case L::i1_1:
        case L::i2_11:
            put(cross(kappa, E), one);
            put_cay(cay(), 0, one);
            break;
        case L::r1_2:
            self(q - one);
            put(cross(kappa, E), -one);
            put_cay(cay(), 0, q - one);
            break;
        case L::r2_22:
            self(Q - one);
            put(cross(kappa, E), -one);
            put_cay(cay(), 0, Q - one);
            break;
        case L::i1_2f:
        case L::i2_22: {
            // the cross action of a 2i22 orbit fixes E itself
            auto c = cay();
            self(one);
            put_cay(c, 0, one);
            put_cay(c, 1, one);
            break;
        }
        case L::r1_1f:
        case L::r2_11: {
            auto c = cay();
            self(Q - LaurentPoly(2));
            put_cay(c, 0, Q - one);
            put_cay(c, 1, Q - one);
            break;
        }
        case L::i1_2s:
        case L::r1_n:
        case L::r2_n:
        case L::r3_n:
            self(-one);
            break;
        case L::r1_1s:
        case L::i1_c:
        case L::i2_c:
        case L::i3_c:
            self(Q);
            break;
        case L::c2_i: {
            OrbitRoots o = orbit_roots(d, kappa);
            Int e = half(pair(E.tau, o.ac) + pair(E.tau, o.bc), "2Ci sign") * (g_pair(E, o.a) - pair(o.a, E.ell) - 1);
            self(q);
            put_cay(cay(), 0, parity_sign(e) * (q + one));
            break;
        }
        case L::c2_r: {
            OrbitRoots o = orbit_roots(d, kappa);
            Int e = (gamma_pair(E, o.ac) - pair(E.lambda, o.ac) + pair(E.tau, o.ac) - 1) *
                    half(pair(o.b, E.t) - pair(o.a, E.t), "2Cr sign");
            self(q * q - q - one);
            put_cay(cay(), 0, parity_sign(e) * (q * q - q));
            break;
        }
        case L::c3_i:
        case L::i3:
            self(q);
            put_cay(cay(), 0, q + one);
            break;
        case L::c3_r:
        case L::r3:
            self(Q - q - one);
            put_cay(cay(), 0, Q - q);
            break;
        case L::i2_12:
        case L::r2_21: {
            if (st.second_kind)
                throw UnsupportedError("t_apply: no Hecke formula for status " + st.name());
            ExtendedParam start = E;
            KappaOrbit k = kappa;
            std::mt19937_64 rng(choice.seed.value_or(0));
            if (choice.seed) {
                start = random_extension(E, rng);
                if (rng() & 1) k = with_roots_swapped(d, kappa);
            }
            if (st.label == L::i2_12) {
                NormalForm nf = normal_form_2i12(k, start);
                const ExtendedParam& anchor = nf.switched ? nf.E0p : nf.E0;
                int s = sgn(E, anchor);
                if (s == 0) throw InvariantError("2i12: normal form changed the parameter");
                put(anchor, s * one);
                put(nf.F0, s * one);
                put(nf.F0p, (nf.switched ? -s : s) * one);
            } else {
                auto values = cayley(k, start).values;
                size_t pick = choice.seed ? static_cast<size_t>(rng() % values.size()) : 0;
                NormalForm nf = normal_form_2i12(k, values.at(pick));
                const LaurentPoly c1 = Q - one, c2 = Q - LaurentPoly(2);
                if (same_parameter(E, nf.F0)) {
                    int s = sgn(E, nf.F0);
                    put(nf.E0, s * c1);
                    put(nf.E0p, s * c1);
                    put(nf.F0, s * c2);
                } else if (same_parameter(E, nf.F0p)) {
                    int s = sgn(E, nf.F0p);
                    put(nf.E0, s * c1);
                    put(nf.E0p, -s * c1);
                    put(nf.F0p, s * c2);
                } else {
                    throw InvariantError("2r21: normal form does not contain the parameter " + E.to_string());
                }
            }
            break;
        }
    }
    return out;
}

LaurentMatrix matrix_of(const ExtBlock& blk, const KappaOrbit& kappa) {
    LaurentMatrix m(blk.size());
    for (int j = 0; j < blk.size(); ++j)
        for (const auto& [i, c] : t_apply(blk, kappa, j)) m(i, j) = c;
    return m;
}

/* ------------------------------------------------------------------ */
/*  Nonintegral infinitesimal character                                */
/* ------------------------------------------------------------------ */

bool is_integral_root(const RootDatum& datum, const RatVec& gamma, const LatticeVec& root) {
    return pair(gamma, datum.coroot_of(root)).denominator() == 1;
}

bool is_integrally_dominant(const RootDatum& datum, const RatVec& gamma) {
    for (const auto& c : datum.positive_coroots()) {
        Rational p = pair(gamma, c);
        if (p.denominator() == 1 && p < 0) return false;
    }
    return true;
}

IntegralSystem integral_system(const RootDatum& datum, const RatVec& gamma) {
    IntegralSystem sys;
    const auto& roots = datum.positive_roots();
    for (int k = 0; k < datum.num_positive_roots(); ++k)
        if (pair(gamma, datum.positive_coroots()[k]).denominator() == 1) sys.positive.push_back(k);
    std::set<LatticeVec> sums;
    for (int i : sys.positive)
        for (int j : sys.positive) sums.insert(roots[i] + roots[j]);
    for (int k : sys.positive)
        if (!sums.count(roots[k])) sys.simple.push_back(k);

    const int n = datum.rank();
    std::set<LatticeMap> seen{id(n)};
    sys.weyl.push_back(id(n));
    for (size_t k = 0; k < sys.weyl.size(); ++k)
        for (int s : sys.simple) {
            LatticeMap next = sys.weyl[k] * datum.root_reflection(s);
            if (seen.insert(next).second) sys.weyl.push_back(next);
        }
    return sys;
}

RatVec star_act(const RootDatum& datum, const WeylElt& w, const RatVec& gamma) {
    RatVec out = gamma;
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
        Rational p = pair(out, datum.simple_coroot(*it));
        if (p.denominator() != 1) out = out - scale(p, RatVec(datum.simple_root(*it)));
    }
    return out;
}

namespace {

// twice the half-sum of positive roots real for theta
LatticeVec two_rho_real(const RootDatum& d, const LatticeMap& theta) {
    LatticeVec sum(d.rank(), 0);
    const LatticeMap thT = theta.transpose();
    for (const auto& r : d.positive_roots())
        if (thT * r == -r) sum = sum + r;
    return sum;
}

// twice the half-sum of positive coroots imaginary for theta
LatticeVec two_rho_check_imaginary(const RootDatum& d, const LatticeMap& theta) {
    LatticeVec sum(d.rank(), 0);
    for (const auto& c : d.positive_coroots())
        if (theta * c == c) sum = sum + c;
    return sum;
}

ExtendedParam cross_by_weyl_action(const KappaOrbit& kappa, const ExtendedParam& E) {
    const RootDatum& d = *E.datum;
    const int n = d.rank();
    const std::string where = "nonintegral cross";
    const LatticeMap& W = kappa.w_kappa.matrix;
    const LatticeMap WT = W.transpose();
    const LatticeMap& D = d.delta0();
    const LatticeMap theta1 = W * E.theta() * W;

    LatticeVec corr_x = half_vec(WT * two_rho_real(d, E.theta()) - two_rho_real(d, theta1), where);
    LatticeVec corr_y =
        half_vec(W * two_rho_check_imaginary(d, E.theta()) - two_rho_check_imaginary(d, theta1), where);
    LatticeVec rho_shift = half_vec(WT * d.two_rho() - d.two_rho(), where);
    LatticeVec rho_check_shift = half_vec(W * d.two_rho_check() - d.two_rho_check(), where);

    ExtendedParam F = E;
    F.gamma = star_act(d, kappa.w_kappa, E.gamma);
    RatVec lambda = F.gamma - apply(WT, E.gamma - RatVec(E.lambda)) + RatVec(rho_shift - corr_x);
    if (!lambda.is_integral()) throw InvariantError(where + ": lambda left the character lattice");
    F.lambda = lambda.to_integral();
    F.tau = WT * E.tau - half_vec((D.transpose() - id(n)) * corr_x, where);
    RatVec ell = E.g - apply(W, E.g - RatVec(E.ell)) + RatVec(rho_check_shift - corr_y);
    if (!ell.is_integral()) throw InvariantError(where + ": ell left the cocharacter lattice");
    F.ell = ell.to_integral();
    F.t = W * E.t - half_vec((D - id(n)) * corr_y, where);
    return at_involution(F, theta1);
}

bool orbit_integral(const RootDatum& d, const KappaOrbit& kappa, const RatVec& gamma) {
    for (int i : kappa.roots)
        if (pair(gamma, d.simple_coroot(i)).denominator() != 1) return false;
    return true;
}

}  // namespace

ExtendedParam cross_nonintegral(const KappaOrbit& kappa, const ExtendedParam& E) {
    if (orbit_integral(*E.datum, kappa, E.gamma) && has_crx_row(kappa_status(kappa, E).label)) return cross(kappa, E);
    return cross_by_weyl_action(kappa, E);
}

CayleyResult cayley_nonintegral(const std::vector<LatticeVec>& roots, const ExtendedParam& E) {
    const RootDatum& d = *E.datum;
    if (roots.empty() || roots.size() > 2) throw std::invalid_argument("cayley_nonintegral: expected one or two roots");
    IntegralSystem sys = integral_system(d, E.gamma);
    for (const auto& r : roots) {
        auto k = d.find_root(r);
        if (!k || *k < 0 || std::find(sys.simple.begin(), sys.simple.end(), *k - 1) == sys.simple.end())
            throw std::invalid_argument("cayley_nonintegral: " + to_string(r) + " is not integral-simple");
    }
    std::set<LatticeVec> target(roots.begin(), roots.end());
    std::set<LatticeVec> moved_target;
    for (const auto& r : roots) moved_target.insert(d.delta0().transpose() * r);
    if (moved_target != target) throw std::invalid_argument("cayley_nonintegral: roots are not a delta0-orbit");

    // breadth-first over words in the orbit generators of W^delta0
    const auto orbits = kappa_orbits(d);
    struct Node {
        std::vector<LatticeVec> images;
        std::vector<int> word;
    };
    std::deque<Node> queue{{roots, {}}};
    std::set<std::set<LatticeVec>> seen{target};
    std::optional<Node> found;
    std::optional<KappaOrbit> simple_orbit;
    while (!queue.empty() && !found) {
        Node node = queue.front();
        queue.pop_front();
        std::set<LatticeVec> as_set(node.images.begin(), node.images.end());
        for (const auto& k : orbits) {
            std::set<LatticeVec> simple;
            for (int i : k.roots) simple.insert(d.simple_root(i));
            if (simple != as_set) continue;
            KappaOrbit oriented = k;
            if (d.simple_root(k.first()) != node.images.front()) oriented = with_roots_swapped(d, k);
            found = node;
            simple_orbit = oriented;
            break;
        }
        if (found) break;
        for (size_t g = 0; g < orbits.size(); ++g) {
            const LatticeMap WT = orbits[g].w_kappa.matrix.transpose();
            Node next{{}, node.word};
            for (const auto& r : node.images) next.images.push_back(WT * r);
            next.word.push_back(static_cast<int>(g));
            std::set<LatticeVec> key(next.images.begin(), next.images.end());
            if (seen.insert(key).second) queue.push_back(std::move(next));
        }
    }
    if (!found)
        throw UnsupportedError("cayley_nonintegral: no element of W^delta0 carries " + to_string(roots.front()) +
                               " to a simple orbit (type A_2n with a delta0-fixed root)");

    ExtendedParam moved = E;
    for (int g : found->word) moved = cross_nonintegral(orbits[g], moved);
    CayleyResult res = cayley(*simple_orbit, moved);
    for (auto& v : res.values)
        for (auto it = found->word.rbegin(); it != found->word.rend(); ++it) v = cross_nonintegral(orbits[*it], v);
    return res;
}

}  // namespace twistrep
