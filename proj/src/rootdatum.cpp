#include "twistrep/rootdatum.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace twistrep {

std::string WeylElt::to_string() const {
    if (word.empty()) return "e";
    std::ostringstream os;
    for (size_t i = 0; i < word.size(); ++i) os << (i ? "." : "") << 's' << word[i];
    return os.str();
}

std::string KappaOrbit::roots_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < roots.size(); ++i) os << (i ? "," : "") << roots[i];
    return os.str();
}

/* ------------------------------------------------------------------ */
/*  Construction and validation                                        */
/* ------------------------------------------------------------------ */

namespace {

constexpr int kMaxPositiveRoots = 4096;

std::vector<int> simple_permutation(const LatticeMap& m, const std::vector<LatticeVec>& coroots,
                                    const std::vector<LatticeVec>& roots, const char* name) {
    const int n = static_cast<int>(coroots.size());
    std::vector<int> perm(n, -1);
    LatticeMap mt = m.transpose();
    for (int i = 0; i < n; ++i) {
        LatticeVec image = m * coroots[i];
        for (int j = 0; j < n; ++j)
            if (image == coroots[j]) perm[i] = j;
        if (perm[i] < 0)
            throw DatumError(std::string(name) + " does not permute the simple coroots (coroot " +
                             std::to_string(i) + ")");
    }
    for (int i = 0; i < n; ++i) {
        // the transpose moves roots in the opposite direction; for involutions the two agree
        if (mt * roots[perm[i]] != roots[i])
            throw DatumError(std::string(name) + " transpose does not permute the simple roots compatibly");
    }
    return perm;
}

}  // namespace

RootDatum build_datum(const DatumDescription& d) {
    if (d.rank <= 0) throw DatumError("rank must be positive");
    const int n = static_cast<int>(d.simple_roots.size());
    if (d.simple_coroots.size() != d.simple_roots.size())
        throw DatumError("different numbers of simple roots and simple coroots");
    for (const auto& v : d.simple_roots)
        if (static_cast<int>(v.size()) != d.rank) throw DatumError("simple root of wrong length");
    for (const auto& v : d.simple_coroots)
        if (static_cast<int>(v.size()) != d.rank) throw DatumError("simple coroot of wrong length");
    for (const LatticeMap* m : {&d.xi0, &d.delta0})
        if (m->rows() != d.rank || m->cols() != d.rank) throw DatumError("automorphism matrix has wrong shape");

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int a = pair(d.simple_roots[i], d.simple_coroots[j]);
            Int b = pair(d.simple_roots[j], d.simple_coroots[i]);
            if (i == j && a != 2) throw DatumError("Cartan violation: diagonal entry is not 2");
            if (i != j && (a > 0 || (a == 0) != (b == 0)))
                throw DatumError("Cartan violation at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    if (!(d.xi0 * d.xi0).is_identity()) throw DatumError("xi0 is not an involution");
    if (!(d.delta0 * d.delta0).is_identity()) throw DatumError("delta0 is not an involution");
    if (!(d.xi0 * d.delta0 == d.delta0 * d.xi0)) throw DatumError("xi0 and delta0 do not commute");

    RootDatum r;
    r.desc_ = d;
    r.rank_ = d.rank;
    r.simple_roots_ = d.simple_roots;
    r.simple_coroots_ = d.simple_coroots;
    r.xi0_ = d.xi0;
    r.delta0_ = d.delta0;
    r.xi0_perm_ = simple_permutation(d.xi0, d.simple_coroots, d.simple_roots, "xi0");
    r.delta0_perm_ = simple_permutation(d.delta0, d.simple_coroots, d.simple_roots, "delta0");

    for (int i = 0; i < n; ++i) {
        LatticeMap s = LatticeMap::identity(d.rank);
        for (int a = 0; a < d.rank; ++a)
            for (int b = 0; b < d.rank; ++b) s(a, b) -= d.simple_coroots[i][a] * d.simple_roots[i][b];
        r.reflections_.push_back(s);
    }

    // close the simple system under simple reflections, tracking simple-root coordinates
    struct Entry {
        LatticeVec root, coroot, coeffs;
    };
    std::vector<Entry> found;
    std::set<LatticeVec> seen;
    for (int i = 0; i < n; ++i) {
        found.push_back({d.simple_roots[i], d.simple_coroots[i], unit_vec(n, i)});
        if (!seen.insert(d.simple_roots[i]).second) throw DatumError("repeated simple root");
    }
    for (size_t k = 0; k < found.size(); ++k) {
        for (int i = 0; i < n; ++i) {
            const Entry& e = found[k];
            Int c = pair(e.root, d.simple_coroots[i]);
            if (c == 0) continue;
            LatticeVec coeffs = e.coeffs - c * unit_vec(n, i);
            if (std::any_of(coeffs.begin(), coeffs.end(), [](Int x) { return x < 0; })) continue;
            LatticeVec root = e.root - c * d.simple_roots[i];
            if (seen.count(root)) continue;
            LatticeVec coroot = e.coroot - pair(d.simple_roots[i], e.coroot) * d.simple_coroots[i];
            seen.insert(root);
            found.push_back({root, coroot, coeffs});
            if (static_cast<int>(found.size()) > kMaxPositiveRoots)
                throw DatumError("root system is not of finite type");
        }
    }
    r.two_rho_.assign(d.rank, 0);
    r.two_rho_check_.assign(d.rank, 0);
    for (size_t k = 0; k < found.size(); ++k) {
        r.pos_roots_.push_back(found[k].root);
        r.pos_coroots_.push_back(found[k].coroot);
        r.root_index_[found[k].root] = static_cast<int>(k) + 1;
        r.root_index_[-found[k].root] = -static_cast<int>(k) - 1;
        r.coroot_index_[found[k].coroot] = static_cast<int>(k) + 1;
        r.coroot_index_[-found[k].coroot] = -static_cast<int>(k) - 1;
        r.two_rho_ = r.two_rho_ + found[k].root;
        r.two_rho_check_ = r.two_rho_check_ + found[k].coroot;
    }
    for (size_t k = 0; k < found.size(); ++k) {
        if (pair(found[k].root, r.two_rho_check_) <= 0 || pair(r.two_rho_, found[k].coroot) <= 0)
            throw DatumError("Cartan violation: positive system is not consistent");
    }
    return r;
}

/* ------------------------------------------------------------------ */
/*  Root lookup and Weyl group                                         */
/* ------------------------------------------------------------------ */

std::optional<int> RootDatum::find_root(const LatticeVec& v) const {
    auto it = root_index_.find(v);
    if (it == root_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> RootDatum::find_coroot(const LatticeVec& v) const {
    auto it = coroot_index_.find(v);
    if (it == coroot_index_.end()) return std::nullopt;
    return it->second;
}

LatticeVec RootDatum::coroot_of(const LatticeVec& root) const {
    auto k = find_root(root);
    if (!k) throw InvariantError("coroot_of: " + twistrep::to_string(root) + " is not a root");
    return *k > 0 ? pos_coroots_[*k - 1] : -pos_coroots_[-*k - 1];
}

LatticeMap RootDatum::root_reflection(int k) const {
    LatticeMap s = LatticeMap::identity(rank_);
    for (int a = 0; a < rank_; ++a)
        for (int b = 0; b < rank_; ++b) s(a, b) -= pos_coroots_[k][a] * pos_roots_[k][b];
    return s;
}

WeylElt RootDatum::identity() const { return {{}, LatticeMap::identity(rank_)}; }

WeylElt RootDatum::from_word(const std::vector<int>& word) const {
    LatticeMap m = LatticeMap::identity(rank_);
    for (int i : word) m = m * reflection(i);
    return from_matrix(m);
}

WeylElt RootDatum::from_matrix(const LatticeMap& m) const {
    std::vector<int> reversed;
    LatticeMap cur = m;
    const int limit = num_positive_roots();
    while (!cur.is_identity()) {
        int descent = -1;
        for (int i = 0; i < semisimple_rank(); ++i)
            if (!is_positive_coroot(cur * simple_coroots_[i])) {
                descent = i;
                break;
            }
        if (descent < 0 || static_cast<int>(reversed.size()) > limit)
            throw InvariantError("from_matrix: matrix is not a Weyl group element");
        reversed.push_back(descent);
        cur = cur * reflection(descent);
    }
    return {std::vector<int>(reversed.rbegin(), reversed.rend()), m};
}

WeylElt RootDatum::multiply(const WeylElt& a, const WeylElt& b) const { return from_matrix(a.matrix * b.matrix); }

WeylElt RootDatum::inverse(const WeylElt& w) const {
    return from_word(std::vector<int>(w.word.rbegin(), w.word.rend()));
}

LatticeMap RootDatum::weight_action(const WeylElt& w) const { return inverse(w).matrix.transpose(); }

int RootDatum::length_of(const LatticeMap& m) const {
    int len = 0;
    for (const auto& c : pos_coroots_)
        if (!is_positive_coroot(m * c)) ++len;
    return len;
}

std::vector<WeylElt> enumerate_weyl(const RootDatum& datum) {
    std::vector<WeylElt> out{datum.identity()};
    std::set<LatticeMap> seen{out[0].matrix};
    for (size_t k = 0; k < out.size(); ++k)
        for (int i = 0; i < datum.semisimple_rank(); ++i) {
            LatticeMap m = out[k].matrix * datum.reflection(i);
            if (seen.insert(m).second) out.push_back(datum.from_matrix(m));
        }
    return out;
}

/* ------------------------------------------------------------------ */
/*  rho, w0, dual datum, kappa orbits                                  */
/* ------------------------------------------------------------------ */

RatVec rho(const RootDatum& datum) { return RatVec(datum.two_rho(), 2); }
RatVec rho_check(const RootDatum& datum) { return RatVec(datum.two_rho_check(), 2); }

WeylElt weyl_longest(const RootDatum& datum) {
    LatticeMap m = LatticeMap::identity(datum.rank());
    for (bool grew = true; grew;) {
        grew = false;
        for (int i = 0; i < datum.semisimple_rank(); ++i)
            if (datum.is_positive_coroot(m * datum.simple_coroot(i))) {
                m = m * datum.reflection(i);
                grew = true;
                break;
            }
    }
    return datum.from_matrix(m);
}

RootDatum dual_datum(const RootDatum& datum) {
    DatumDescription d;
    d.rank = datum.rank();
    d.simple_roots = datum.simple_coroots();
    d.simple_coroots = datum.simple_roots();
    d.delta0 = datum.delta0().transpose();
    LatticeMap w0 = weyl_longest(datum).matrix;
    d.xi0 = -(datum.xi0() * w0).transpose();
    return build_datum(d);
}

WeylElt dual_weyl(const RootDatum& dual, const WeylElt& w) { return dual.from_word(w.word); }

std::vector<KappaOrbit> kappa_orbits(const RootDatum& datum) {
    std::vector<KappaOrbit> out;
    for (int i = 0; i < datum.semisimple_rank(); ++i) {
        int j = datum.delta0_perm(i);
        if (j < i) continue;
        KappaOrbit k;
        if (j == i) {
            k.roots = {i};
            k.kind = KappaKind::type1;
            k.length = 1;
            k.w_kappa = datum.from_word({i});
        } else {
            k.roots = {i, j};
            Int c = datum.cartan(i, j);
            if (c == 0) {
                k.kind = KappaKind::type2;
                k.length = 2;
                k.w_kappa = datum.from_word({i, j});
            } else if (c == -1 && datum.cartan(j, i) == -1) {
                k.kind = KappaKind::type3;
                k.length = 3;
                k.w_kappa = datum.from_word({i, j, i});
            } else {
                throw DatumError("delta0 orbit of simple roots with unsupported pairing");
            }
        }
        out.push_back(k);
    }
    return out;
}

/* ------------------------------------------------------------------ */
/*  Fixtures                                                           */
/* ------------------------------------------------------------------ */

namespace fixtures {

DatumDescription general_linear(int n) {
    DatumDescription d;
    d.rank = n;
    for (int i = 0; i + 1 < n; ++i) {
        LatticeVec a = unit_vec(n, i) - unit_vec(n, i + 1);
        d.simple_roots.push_back(a);
        d.simple_coroots.push_back(a);
    }
    d.xi0 = LatticeMap::identity(n);
    d.delta0 = LatticeMap::identity(n);
    return d;
}

DatumDescription simply_connected_a(int n, bool flip_delta0, bool flip_xi0) {
    DatumDescription d;
    d.rank = n;
    for (int i = 0; i < n; ++i) {
        LatticeVec a(n, 0);
        a[i] = 2;
        if (i > 0) a[i - 1] = -1;
        if (i + 1 < n) a[i + 1] = -1;
        d.simple_roots.push_back(a);
        d.simple_coroots.push_back(unit_vec(n, i));
    }
    LatticeMap flip(n, n);
    for (int i = 0; i < n; ++i) flip(n - 1 - i, i) = 1;
    d.delta0 = flip_delta0 ? flip : LatticeMap::identity(n);
    d.xi0 = flip_xi0 ? flip : LatticeMap::identity(n);
    return d;
}

DatumDescription adjoint_a(int n, bool flip_delta0, bool flip_xi0) {
    DatumDescription d = simply_connected_a(n, flip_delta0, flip_xi0);
    std::swap(d.simple_roots, d.simple_coroots);
    return d;
}

DatumDescription sl2_pair_swapped(bool swap_xi0) {
    DatumDescription d;
    d.rank = 2;
    d.simple_roots = {{2, 0}, {0, 2}};
    d.simple_coroots = {{1, 0}, {0, 1}};
    LatticeMap swap(2, 2);
    swap(0, 1) = swap(1, 0) = 1;
    d.delta0 = swap;
    d.xi0 = swap_xi0 ? swap : LatticeMap::identity(2);
    return d;
}

DatumDescription adjoint_a1() {
    DatumDescription d;
    d.rank = 1;
    d.simple_roots = {{1}};
    d.simple_coroots = {{2}};
    d.xi0 = LatticeMap::identity(1);
    d.delta0 = LatticeMap::identity(1);
    return d;
}

DatumDescription simply_connected_b2() {
    DatumDescription d;
    d.rank = 2;
    d.simple_roots = {{2, -2}, {-1, 2}};
    d.simple_coroots = {{1, 0}, {0, 1}};
    d.xi0 = LatticeMap::identity(2);
    d.delta0 = LatticeMap::identity(2);
    return d;
}

}  // namespace fixtures

}  // namespace twistrep
