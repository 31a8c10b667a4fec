#include "twistrep/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

namespace twistrep {

/* ------------------------------------------------------------------ */
/*  Integer vectors                                                    */
/* ------------------------------------------------------------------ */

namespace {

void check_same_rank(size_t a, size_t b, const char* what) {
    if (a != b) {
        throw DimensionError(std::string(what) + ": rank mismatch (" + std::to_string(a) + " vs " +
                             std::to_string(b) + ")");
    }
}

}  // namespace

Int pair(const LatticeVec& character, const LatticeVec& cocharacter) {
    check_same_rank(character.size(), cocharacter.size(), "pair");
    Int s = 0;
    for (size_t i = 0; i < character.size(); ++i) s += character[i] * cocharacter[i];
    return s;
}

LatticeVec operator+(const LatticeVec& a, const LatticeVec& b) {
    check_same_rank(a.size(), b.size(), "vector sum");
    LatticeVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

LatticeVec operator-(const LatticeVec& a, const LatticeVec& b) {
    check_same_rank(a.size(), b.size(), "vector difference");
    LatticeVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

LatticeVec operator-(const LatticeVec& a) {
    LatticeVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

LatticeVec operator*(Int k, const LatticeVec& a) {
    LatticeVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
    return r;
}

LatticeVec unit_vec(int rank, int i) {
    LatticeVec v(rank, 0);
    v.at(i) = 1;
    return v;
}

bool is_zero(const LatticeVec& v) {
    return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

std::string to_string(const LatticeVec& v) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    os << ']';
    return os.str();
}

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int mod_pos(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + (m < 0 ? -m : m) : r;
}

/* ------------------------------------------------------------------ */
/*  IntMatrix                                                          */
/* ------------------------------------------------------------------ */

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<LatticeVec>& rows) {
    if (rows.empty()) return IntMatrix(0, 0);
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        check_same_rank(rows[i].size(), static_cast<size_t>(m.cols()), "matrix rows");
        for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<LatticeVec>& cols, int rank) {
    IntMatrix m(rank, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j) {
        check_same_rank(cols[j].size(), static_cast<size_t>(rank), "matrix columns");
        for (int i = 0; i < rank; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

LatticeVec IntMatrix::row(int i) const {
    LatticeVec r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

LatticeVec IntMatrix::column(int j) const {
    LatticeVec c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product: inner dimension mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            Int a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
        }
    return r;
}

LatticeVec IntMatrix::operator*(const LatticeVec& v) const {
    check_same_rank(static_cast<size_t>(cols_), v.size(), "matrix-vector product");
    LatticeVec r(rows_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum: shape mismatch");
    IntMatrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const { return *this + (-o); }

IntMatrix IntMatrix::operator-() const {
    IntMatrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
}

bool IntMatrix::operator<(const IntMatrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    return a_ < o.a_;
}

bool IntMatrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) os << twistrep::to_string(row(i)) << (i + 1 < rows_ ? "\n" : "");
    return os.str();
}

/* ------------------------------------------------------------------ */
/*  RatVec                                                             */
/* ------------------------------------------------------------------ */

RatVec::RatVec(LatticeVec numerators, Int denominator) : num_(std::move(numerators)), den_(denominator) {
    if (den_ == 0) throw std::invalid_argument("RatVec: zero denominator");
    if (den_ < 0) {
        den_ = -den_;
        for (auto& x : num_) x = -x;
    }
    Int g = den_;
    for (Int x : num_) g = std::gcd(g, x);
    if (g > 1) {
        den_ /= g;
        for (auto& x : num_) x /= g;
    }
}

LatticeVec RatVec::to_integral() const {
    if (!is_integral()) throw InvariantError("RatVec " + to_string() + " is not integral");
    return num_;
}

RatVec RatVec::operator+(const RatVec& o) const {
    check_same_rank(num_.size(), o.num_.size(), "RatVec sum");
    Int l = std::lcm(den_, o.den_);
    return RatVec((l / den_) * num_ + (l / o.den_) * o.num_, l);
}

RatVec RatVec::operator-(const RatVec& o) const { return *this + (-o); }

bool RatVec::operator<(const RatVec& o) const {
    if (den_ != o.den_) return den_ < o.den_;
    return num_ < o.num_;
}

std::string RatVec::to_string() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < num_.size(); ++i) {
        Rational r(num_[i], den_);
        os << (i ? " " : "") << r.numerator();
        if (r.denominator() != 1) os << '/' << r.denominator();
    }
    os << ']';
    return os.str();
}

Rational pair(const RatVec& character, const LatticeVec& cocharacter) {
    return Rational(pair(character.numerators(), cocharacter), character.denominator());
}

Rational pair(const LatticeVec& character, const RatVec& cocharacter) {
    return Rational(pair(character, cocharacter.numerators()), cocharacter.denominator());
}

RatVec apply(const IntMatrix& m, const RatVec& v) { return RatVec(m * v.numerators(), v.denominator()); }

RatVec scale(Rational k, const RatVec& v) {
    return RatVec(k.numerator() * v.numerators(), k.denominator() * v.denominator());
}

/* ------------------------------------------------------------------ */
/*  Smith normal form                                                  */
/* ------------------------------------------------------------------ */

namespace {

struct SmithWork {
    IntMatrix a, left, left_inv, right, right_inv;

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
        for (int c = 0; c < left.cols(); ++c) std::swap(left(i, c), left(j, c));
        for (int r = 0; r < left_inv.rows(); ++r) std::swap(left_inv(r, i), left_inv(r, j));
    }
    // row i += k * row j
    void add_row(int i, int j, Int k) {
        if (k == 0) return;
        for (int c = 0; c < a.cols(); ++c) a(i, c) += k * a(j, c);
        for (int c = 0; c < left.cols(); ++c) left(i, c) += k * left(j, c);
        for (int r = 0; r < left_inv.rows(); ++r) left_inv(r, j) -= k * left_inv(r, i);
    }
    void negate_row(int i) {
        for (int c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
        for (int c = 0; c < left.cols(); ++c) left(i, c) = -left(i, c);
        for (int r = 0; r < left_inv.rows(); ++r) left_inv(r, i) = -left_inv(r, i);
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
        for (int r = 0; r < right.rows(); ++r) std::swap(right(r, i), right(r, j));
        for (int c = 0; c < right_inv.cols(); ++c) std::swap(right_inv(i, c), right_inv(j, c));
    }
    // col i += k * col j
    void add_col(int i, int j, Int k) {
        if (k == 0) return;
        for (int r = 0; r < a.rows(); ++r) a(r, i) += k * a(r, j);
        for (int r = 0; r < right.rows(); ++r) right(r, i) += k * right(r, j);
        for (int c = 0; c < right_inv.cols(); ++c) right_inv(j, c) -= k * right_inv(i, c);
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
    const int m = input.rows(), n = input.cols();
    SmithWork w{input, IntMatrix::identity(m), IntMatrix::identity(m), IntMatrix::identity(n),
                IntMatrix::identity(n)};
    int t = 0;
    for (; t < std::min(m, n); ++t) {
        // bring the smallest nonzero entry of the trailing block to (t,t)
        auto move_min = [&]() -> bool {
            int bi = -1, bj = -1;
            Int best = 0;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j) {
                    Int v = std::llabs(w.a(i, j));
                    if (v != 0 && (bi < 0 || v < best)) best = v, bi = i, bj = j;
                }
            if (bi < 0) return false;
            w.swap_rows(t, bi);
            w.swap_cols(t, bj);
            return true;
        };
        if (!move_min()) break;
        for (;;) {
            bool dirty = false;
            for (int i = t + 1; i < m; ++i) {
                Int q = w.a(i, t) / w.a(t, t);
                w.add_row(i, t, -q);
                if (w.a(i, t) != 0) dirty = true;
            }
            for (int j = t + 1; j < n; ++j) {
                Int q = w.a(t, j) / w.a(t, t);
                w.add_col(j, t, -q);
                if (w.a(t, j) != 0) dirty = true;
            }
            if (dirty) {
                // a smaller remainder now sits in row t or column t
                int bi = t, bj = t;
                Int best = std::llabs(w.a(t, t));
                for (int i = t + 1; i < m; ++i)
                    if (w.a(i, t) != 0 && std::llabs(w.a(i, t)) < best) best = std::llabs(w.a(i, t)), bi = i, bj = t;
                for (int j = t + 1; j < n; ++j)
                    if (w.a(t, j) != 0 && std::llabs(w.a(t, j)) < best) best = std::llabs(w.a(t, j)), bi = t, bj = j;
                w.swap_rows(t, bi);
                w.swap_cols(t, bj);
                continue;
            }
            int bad = -1;
            for (int i = t + 1; i < m && bad < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (w.a(i, j) % w.a(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            w.add_row(t, bad, 1);
        }
        if (w.a(t, t) < 0) w.negate_row(t);
    }
    SmithForm f{w.left, w.left_inv, w.right, w.right_inv, w.a, t};
    return f;
}

std::optional<LatticeVec> solve_integer(const IntMatrix& a, const LatticeVec& b) {
    if (static_cast<size_t>(a.rows()) != b.size()) throw DimensionError("solve_integer: rank mismatch");
    SmithForm f = smith_normal_form(a);
    LatticeVec c = f.left * b;
    LatticeVec y(a.cols(), 0);
    for (int i = 0; i < a.rows(); ++i) {
        if (i < f.rank) {
            if (c[i] % f.divisor(i) != 0) return std::nullopt;
            y[i] = c[i] / f.divisor(i);
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return f.right * y;
}

std::vector<LatticeVec> kernel_basis(const IntMatrix& a) {
    SmithForm f = smith_normal_form(a);
    std::vector<LatticeVec> basis;
    for (int j = f.rank; j < a.cols(); ++j) basis.push_back(f.right.column(j));
    return basis;
}

namespace {

IntMatrix shifted(const LatticeMap& theta, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("shifted system: sign must be +1 or -1");
    IntMatrix one = IntMatrix::identity(theta.rows());
    return sign > 0 ? one + theta : one - theta;
}

}  // namespace

std::optional<LatticeVec> solve_shifted(const LatticeMap& theta, int sign, const LatticeVec& target) {
    return solve_integer(shifted(theta, sign), target);
}

std::vector<LatticeVec> coset_reps(const LatticeMap& theta, int sign) {
    const int n = theta.rows();
    IntMatrix fixer = shifted(theta, -sign);
    IntMatrix image = shifted(theta, sign);
    SmithForm kf = smith_normal_form(fixer);
    const int k = n - kf.rank;
    LatticeReducer reducer = LatticeReducer::image_of(image);
    if (k == 0) return {LatticeVec(n, 0)};

    // image generators written in kernel coordinates
    IntMatrix coords_all = kf.right_inv * image;
    IntMatrix coords(k, n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) coords(i, j) = coords_all(kf.rank + i, j);
    SmithForm qf = smith_normal_form(coords);
    if (qf.rank < k) throw InvariantError("coset_reps: quotient is infinite; theta is not an involution?");

    std::vector<LatticeVec> gens;
    std::vector<Int> orders;
    for (int i = 0; i < k; ++i) {
        if (qf.divisor(i) == 1) continue;
        LatticeVec in_kernel(k, 0);
        for (int r = 0; r < k; ++r) in_kernel[r] = qf.left_inv(r, i);
        LatticeVec v(n, 0);
        for (int r = 0; r < k; ++r) v = v + in_kernel[r] * kf.right.column(kf.rank + r);
        gens.push_back(v);
        orders.push_back(qf.divisor(i));
    }

    std::set<LatticeVec> reps;
    std::vector<Int> digit(gens.size(), 0);
    for (;;) {
        LatticeVec v(n, 0);
        for (size_t g = 0; g < gens.size(); ++g) v = v + digit[g] * gens[g];
        reps.insert(reducer.reduce(v));
        size_t g = 0;
        while (g < gens.size() && ++digit[g] == orders[g]) digit[g++] = 0;
        if (g == gens.size()) break;
    }
    return {reps.begin(), reps.end()};
}

/* ------------------------------------------------------------------ */
/*  LatticeReducer                                                     */
/* ------------------------------------------------------------------ */

LatticeReducer::LatticeReducer(const std::vector<LatticeVec>& generators, int rank) : rank_(rank) {
    std::vector<LatticeVec> rows;
    for (const auto& g : generators) {
        check_same_rank(g.size(), static_cast<size_t>(rank), "LatticeReducer");
        if (!is_zero(g)) rows.push_back(g);
    }
    size_t top = 0;
    for (int c = 0; c < rank && top < rows.size(); ++c) {
        for (;;) {
            size_t best = rows.size();
            int nonzero = 0;
            for (size_t r = top; r < rows.size(); ++r) {
                if (rows[r][c] == 0) continue;
                ++nonzero;
                if (best == rows.size() || std::llabs(rows[r][c]) < std::llabs(rows[best][c])) best = r;
            }
            if (nonzero == 0) break;
            std::swap(rows[top], rows[best]);
            if (nonzero == 1) {
                if (rows[top][c] < 0) rows[top] = -rows[top];
                echelon_.push_back(rows[top]);
                pivots_.push_back(c);
                ++top;
                break;
            }
            for (size_t r = top + 1; r < rows.size(); ++r) {
                Int q = rows[r][c] / rows[top][c];
                if (q != 0) rows[r] = rows[r] - q * rows[top];
            }
        }
    }
}

LatticeReducer LatticeReducer::image_of(const IntMatrix& m) {
    std::vector<LatticeVec> cols;
    for (int j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
    return LatticeReducer(cols, m.rows());
}

LatticeVec LatticeReducer::reduce(const LatticeVec& v) const {
    check_same_rank(v.size(), static_cast<size_t>(rank_), "LatticeReducer::reduce");
    LatticeVec r = v;
    for (size_t i = 0; i < echelon_.size(); ++i) {
        Int q = floor_div(r[pivots_[i]], echelon_[i][pivots_[i]]);
        if (q != 0) r = r - q * echelon_[i];
    }
    return r;
}

}  // namespace twistrep
