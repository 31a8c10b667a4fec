#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistrep {

using Int = long long;
using Rational = boost::rational<Int>;
using LatticeVec = std::vector<Int>;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when an internal consistency check fails (a bug or a broken input
// contract several layers up), as opposed to a user-facing validation error.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/* ------------------------------------------------------------------ */
/*  Integer vectors                                                    */
/* ------------------------------------------------------------------ */

Int pair(const LatticeVec& character, const LatticeVec& cocharacter);

LatticeVec operator+(const LatticeVec& a, const LatticeVec& b);
LatticeVec operator-(const LatticeVec& a, const LatticeVec& b);
LatticeVec operator-(const LatticeVec& a);
LatticeVec operator*(Int k, const LatticeVec& a);
LatticeVec unit_vec(int rank, int i);
bool is_zero(const LatticeVec& v);
std::string to_string(const LatticeVec& v);

Int floor_div(Int a, Int b);
Int mod_pos(Int a, Int m);

/* ------------------------------------------------------------------ */
/*  Square integer matrices (LatticeMap) and rectangular helpers       */
/* ------------------------------------------------------------------ */

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<LatticeVec>& rows);
    static IntMatrix from_columns(const std::vector<LatticeVec>& cols, int rank);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    Int operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    LatticeVec row(int i) const;
    LatticeVec column(int j) const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& other) const;
    LatticeVec operator*(const LatticeVec& v) const;
    IntMatrix operator+(const IntMatrix& other) const;
    IntMatrix operator-(const IntMatrix& other) const;
    IntMatrix operator-() const;
    bool operator==(const IntMatrix& other) const = default;
    bool operator<(const IntMatrix& other) const;

    bool is_identity() const;
    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> a_;
};

using LatticeMap = IntMatrix;

/* ------------------------------------------------------------------ */
/*  Rational vectors                                                   */
/* ------------------------------------------------------------------ */

class RatVec {
public:
    RatVec() = default;
    explicit RatVec(int rank) : num_(rank, 0), den_(1) {}
    RatVec(LatticeVec numerators, Int denominator);
    explicit RatVec(const LatticeVec& integral) : RatVec(integral, 1) {}

    int rank() const { return static_cast<int>(num_.size()); }
    const LatticeVec& numerators() const { return num_; }
    Int denominator() const { return den_; }
    Rational operator[](int i) const { return Rational(num_[i], den_); }

    bool is_integral() const { return den_ == 1; }
    LatticeVec to_integral() const;

    RatVec operator+(const RatVec& o) const;
    RatVec operator-(const RatVec& o) const;
    RatVec operator-() const { return RatVec(-1 * num_, den_); }
    bool operator==(const RatVec& o) const = default;
    bool operator<(const RatVec& o) const;

    std::string to_string() const;

private:
    LatticeVec num_;
    Int den_ = 1;
};

Rational pair(const RatVec& character, const LatticeVec& cocharacter);
Rational pair(const LatticeVec& character, const RatVec& cocharacter);
RatVec apply(const IntMatrix& m, const RatVec& v);
RatVec scale(Rational k, const RatVec& v);

/* ------------------------------------------------------------------ */
/*  Smith normal form and the shifted-involution systems               */
/* ------------------------------------------------------------------ */

// left * A * right = diag, with left/right unimodular; inverses are tracked
// alongside so callers never invert integer matrices themselves.
struct SmithForm {
    IntMatrix left, left_inv, right, right_inv, diag;
    int rank = 0;
    Int divisor(int i) const { return diag(i, i); }
};

SmithForm smith_normal_form(const IntMatrix& a);

// Solve a*s = b. Free coordinates of the Smith-transformed unknown are zero.
std::optional<LatticeVec> solve_integer(const IntMatrix& a, const LatticeVec& b);

// Basis (as columns) of the saturated kernel of a.
std::vector<LatticeVec> kernel_basis(const IntMatrix& a);

std::optional<LatticeVec> solve_shifted(const LatticeMap& theta, int sign, const LatticeVec& target);
std::vector<LatticeVec> coset_reps(const LatticeMap& theta, int sign);

// Canonical representatives modulo a sublattice spanned by generators.
class LatticeReducer {
public:
    LatticeReducer() = default;
    LatticeReducer(const std::vector<LatticeVec>& generators, int rank);
    static LatticeReducer image_of(const IntMatrix& m);

    LatticeVec reduce(const LatticeVec& v) const;
    bool contains(const LatticeVec& v) const { return is_zero(reduce(v)); }
    const std::vector<LatticeVec>& basis() const { return echelon_; }

private:
    int rank_ = 0;
    std::vector<LatticeVec> echelon_;
    std::vector<int> pivots_;
};

}  // namespace twistrep
