#pragma once

#include "twistrep/lattice.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace twistrep {

class DatumError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct DatumDescription {
    int rank = 0;
    std::vector<LatticeVec> simple_roots;
    std::vector<LatticeVec> simple_coroots;
    LatticeMap xi0;
    LatticeMap delta0;
};

struct WeylElt {
    std::vector<int> word;
    LatticeMap matrix;  // action on the cocharacter lattice

    int length() const { return static_cast<int>(word.size()); }
    bool operator==(const WeylElt& o) const { return matrix == o.matrix; }
    bool operator<(const WeylElt& o) const { return matrix < o.matrix; }
    std::string to_string() const;
};

enum class KappaKind { type1 = 1, type2 = 2, type3 = 3 };

struct KappaOrbit {
    std::vector<int> roots;  // one or two simple-root indices, smallest first
    KappaKind kind = KappaKind::type1;
    int length = 1;
    WeylElt w_kappa;

    int first() const { return roots.front(); }
    int second() const { return roots.back(); }
    std::string roots_string() const;
};

class RootDatum {
public:
    int rank() const { return rank_; }
    int semisimple_rank() const { return static_cast<int>(simple_roots_.size()); }

    const std::vector<LatticeVec>& simple_roots() const { return simple_roots_; }
    const std::vector<LatticeVec>& simple_coroots() const { return simple_coroots_; }
    const LatticeVec& simple_root(int i) const { return simple_roots_.at(i); }
    const LatticeVec& simple_coroot(int i) const { return simple_coroots_.at(i); }
    const LatticeMap& xi0() const { return xi0_; }
    const LatticeMap& delta0() const { return delta0_; }

    // positive roots and their coroots, index-aligned, simple ones first
    const std::vector<LatticeVec>& positive_roots() const { return pos_roots_; }
    const std::vector<LatticeVec>& positive_coroots() const { return pos_coroots_; }
    int num_positive_roots() const { return static_cast<int>(pos_roots_.size()); }

    // signed index: +k+1 for positive root k, -(k+1) for its negative
    std::optional<int> find_root(const LatticeVec& v) const;
    std::optional<int> find_coroot(const LatticeVec& v) const;
    LatticeVec coroot_of(const LatticeVec& root) const;
    bool is_positive_root(const LatticeVec& root) const { return pair(root, two_rho_check_) > 0; }
    bool is_positive_coroot(const LatticeVec& coroot) const { return pair(two_rho_, coroot) > 0; }

    const LatticeVec& two_rho() const { return two_rho_; }
    const LatticeVec& two_rho_check() const { return two_rho_check_; }
    Int cartan(int i, int j) const { return pair(simple_roots_[i], simple_coroots_[j]); }

    // delta0 / xi0 as permutations of simple-root indices
    int delta0_perm(int i) const { return delta0_perm_.at(i); }
    int xi0_perm(int i) const { return xi0_perm_.at(i); }

    const LatticeMap& reflection(int i) const { return reflections_.at(i); }
    LatticeMap root_reflection(int positive_root_index) const;

    WeylElt identity() const;
    WeylElt from_word(const std::vector<int>& word) const;
    WeylElt from_matrix(const LatticeMap& m) const;
    WeylElt multiply(const WeylElt& a, const WeylElt& b) const;
    WeylElt inverse(const WeylElt& w) const;
    // action on the character lattice: transpose of the inverse
    LatticeMap weight_action(const WeylElt& w) const;
    int length_of(const LatticeMap& m) const;

    const DatumDescription& description() const { return desc_; }

    friend RootDatum build_datum(const DatumDescription& d);

private:
    DatumDescription desc_;
    int rank_ = 0;
    std::vector<LatticeVec> simple_roots_, simple_coroots_;
    LatticeMap xi0_, delta0_;
    std::vector<LatticeVec> pos_roots_, pos_coroots_;
    std::map<LatticeVec, int> root_index_, coroot_index_;
    LatticeVec two_rho_, two_rho_check_;
    std::vector<int> delta0_perm_, xi0_perm_;
    std::vector<LatticeMap> reflections_;
};

RootDatum build_datum(const DatumDescription& d);

RatVec rho(const RootDatum& datum);
RatVec rho_check(const RootDatum& datum);
WeylElt weyl_longest(const RootDatum& datum);
RootDatum dual_datum(const RootDatum& datum);
std::vector<KappaOrbit> kappa_orbits(const RootDatum& datum);

// exhaustive enumeration, only sensible for small Weyl groups
std::vector<WeylElt> enumerate_weyl(const RootDatum& datum);

// element of the dual Weyl group with the same word
WeylElt dual_weyl(const RootDatum& dual, const WeylElt& w);

/* ------------------------------------------------------------------ */
/*  Standard data used by tests, the acceptance run and the CLI        */
/* ------------------------------------------------------------------ */

namespace fixtures {

DatumDescription general_linear(int n);
// simply connected type A_n in the coroot basis, optional diagram flip as delta0
DatumDescription simply_connected_a(int n, bool flip_delta0, bool flip_xi0 = false);
// adjoint type A_n in the root basis, flips as above
DatumDescription adjoint_a(int n, bool flip_delta0, bool flip_xi0 = false);
// SL(2) x SL(2) with delta0 exchanging the factors
DatumDescription sl2_pair_swapped(bool swap_xi0 = false);
DatumDescription adjoint_a1();
DatumDescription simply_connected_b2();

}  // namespace fixtures

}  // namespace twistrep
