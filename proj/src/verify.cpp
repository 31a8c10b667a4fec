#include "twistrep/verify.hpp"

#include <sstream>

namespace twistrep {

std::string SuiteResult::to_string() const {
    std::ostringstream os;
    os << name << ' ' << (ok ? "OK" : "FAIL") << " checks=" << checks;
    if (!ok) os << ' ' << detail;
    return os.str();
}

int braid_length(const KappaOrbit& a, const KappaOrbit& b) {
    const LatticeMap step = a.w_kappa.matrix * b.w_kappa.matrix;
    LatticeMap power = step;
    for (int m = 1; m <= 12; ++m) {
        if (power.is_identity()) return m;
        power = power * step;
    }
    throw InvariantError("braid_length: w_kappa w_kappa' has no order up to 12");
}

SuiteResult quadratic_suite(const ExtBlock& blk) {
    SuiteResult r{"quadratic"};
    const LaurentMatrix id = LaurentMatrix::identity(blk.size());
    for (const auto& k : kappa_orbits(blk.datum())) {
        const LaurentMatrix T = matrix_of(blk, k);
        const LaurentPoly Q = LaurentPoly::q_power(k.length);
        ++r.checks;
        if (!(T * T == (Q - LaurentPoly(1)) * T + Q * id)) r.fail("kappa=" + k.roots_string());
    }
    return r;
}

namespace {

LaurentMatrix alternating(const LaurentMatrix& a, const LaurentMatrix& b, int factors) {
    LaurentMatrix out = LaurentMatrix::identity(a.size());
    for (int i = 0; i < factors; ++i) out = out * (i % 2 == 0 ? a : b);
    return out;
}

}  // namespace

SuiteResult braid_suite(const ExtBlock& blk) {
    SuiteResult r{"braid"};
    auto ks = kappa_orbits(blk.datum());
    std::vector<LaurentMatrix> T;
    for (const auto& k : ks) T.push_back(matrix_of(blk, k));
    for (size_t i = 0; i < ks.size(); ++i)
        for (size_t j = i + 1; j < ks.size(); ++j) {
            const int m = braid_length(ks[i], ks[j]);
            ++r.checks;
            if (!(alternating(T[i], T[j], m) == alternating(T[j], T[i], m)))
                r.fail("kappa=" + ks[i].roots_string() + " kappa'=" + ks[j].roots_string() + " m=" + std::to_string(m));
        }
    return r;
}

SuiteResult closure_suite(const ExtBlock& blk, std::mt19937_64& rng, int per_param) {
    SuiteResult r{"closure"};
    auto check = [&](const std::string& op, const ExtendedParam& F) {
        ++r.checks;
        auto bad = violated_conditions(F);
        if (!bad.empty()) r.fail(op + " violates condition " + std::to_string(bad.front()) + " at " + F.to_string());
    };
    for (const auto& k : kappa_orbits(blk.datum()))
        for (int i = 0; i < blk.size(); ++i)
            for (int trial = 0; trial < per_param; ++trial) {
                const ExtendedParam E = random_extension(blk.param(i), rng, 3);
                try { check("cross", cross(k, E)); } catch (const UnsupportedError&) {}
                try { check("cross1", cross1(k, E)); } catch (const UnsupportedError&) {}
                try { check("cross_nonintegral", cross_nonintegral(k, E)); } catch (const UnsupportedError&) {}
                try {
                    for (const auto& F : cayley(k, E).values) check("cayley", F);
                } catch (const UnsupportedError&) {}
            }
    return r;
}

SuiteResult sgn_suite(const ExtBlock& blk, std::mt19937_64& rng, int per_param) {
    SuiteResult r{"sgn"};
    for (int i = 0; i < blk.size(); ++i)
        for (int trial = 0; trial < per_param; ++trial) {
            const ExtendedParam& base = blk.param(i);
            ExtendedParam E = random_extension(base, rng, 3), F = random_extension(base, rng, 3),
                          G = random_extension(base, rng, 3);
            const int s = sgn(E, F);
            ++r.checks;
            if (s != 1 && s != -1) r.fail("sgn undefined at " + E.to_string());
            else if (sgn_oracle(E, F) != s) r.fail("oracle disagrees at " + E.to_string() + " / " + F.to_string());
            else if (sgn_first_form(E, F) != s) r.fail("first form disagrees at " + E.to_string());
            else if (sgn(F, E) != s) r.fail("not symmetric at " + E.to_string());
            else if (sgn(E, G) != s * sgn(F, G)) r.fail("cocycle fails at " + E.to_string());
        }
    return r;
}

SuiteResult z_epsilon_suite(const ExtBlock& blk, std::mt19937_64& rng, int per_param) {
    SuiteResult r{"z_squared_epsilon"};
    for (int i = 0; i < blk.size(); ++i)
        for (int trial = 0; trial < per_param; ++trial) {
            const ExtendedParam E = random_extension(blk.param(i), rng, 3);
            const FourthRoot z = z_char(E);
            ++r.checks;
            if ((z * z) != FourthRoot(epsilon_char(E) == 1 ? 0 : 2)) r.fail("at " + E.to_string());
        }
    return r;
}

SuiteResult round_trip_suite(const ExtBlock& blk) {
    SuiteResult r{"2Ci_round_trip"};
    for (const auto& k : kappa_orbits(blk.datum()))
        for (int i = 0; i < blk.size(); ++i) {
            const ExtendedParam& E = blk.param(i);
            if (kappa_status(k, E).label != KappaLabel::c2_i) continue;
            ++r.checks;
            auto up = cayley_row(k, E).values;
            if (up.size() != 1 || kappa_status(k, up[0]).label != KappaLabel::c2_r) {
                r.fail("2Ci output is not a single 2Cr parameter at " + E.to_string());
                continue;
            }
            auto down = cayley_row(k, up[0]).values;
            if (down.size() != 1 || !down[0].same_quadruple(E))
                r.fail("returned " + (down.empty() ? std::string("nothing") : down[0].to_string()) + " from " +
                       E.to_string());
        }
    return r;
}

SuiteResult normal_form_suite(const ExtBlock& blk, int seeds) {
    SuiteResult r{"2i12_choice"};
    for (const auto& k : kappa_orbits(blk.datum()))
        for (int i = 0; i < blk.size(); ++i) {
            KappaStatus st = kappa_status(k, blk.param(i));
            if ((st.label != KappaLabel::i2_12 && st.label != KappaLabel::r2_21) || st.second_kind) continue;
            const HeckeVector reference = t_apply(blk, k, i);
            for (int s = 1; s <= seeds; ++s) {
                ++r.checks;
                if (t_apply(blk, k, i, NormalFormChoice{static_cast<std::uint64_t>(s)}) != reference)
                    r.fail(st.name() + " parameter " + std::to_string(i) + " seed " + std::to_string(s));
            }
        }
    return r;
}

}  // namespace twistrep
