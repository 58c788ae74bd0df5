#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mirrorlat {

using Int = mpz_class;
using Rat = mpq_class;

// Domain failure (bad input, inconsistent data, violated invariant).
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an enumeration or search exceeds its configured budget.
// Distinct from `error`: the question is left undecided, not answered.
class budget_error : public error {
public:
    explicit budget_error(const std::string& what) : error(what) {}
};

// Dense matrix over an exact coefficient type. Sizes here are tiny
// (rank <= ~30), so everything is row-major std::vector storage.
template <class T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * size_t(cols)) {
        if (rows < 0 || cols < 0) throw error("matrix dimensions must be nonnegative");
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return a_[check(i, j)]; }
    const T& operator()(int i, int j) const { return a_[check(i, j)]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw error("matrix product shape mismatch");
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& x = (*this)(i, k);
                if (x == 0) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }

    void swap_rows(int i, int j) {
        for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }
    void swap_cols(int i, int j) {
        for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
    }
    // row i -= q * row j
    void row_sub(int i, int j, const T& q) {
        for (int c = 0; c < cols_; ++c) (*this)(i, c) -= q * (*this)(j, c);
    }
    // col i -= q * col j
    void col_sub(int i, int j, const T& q) {
        for (int r = 0; r < rows_; ++r) (*this)(r, i) -= q * (*this)(r, j);
    }
    void negate_row(int i) {
        for (int c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
    }
    void negate_col(int j) {
        for (int r = 0; r < rows_; ++r) (*this)(r, j) = -(*this)(r, j);
    }

private:
    size_t check(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw error("matrix index out of bounds");
        return size_t(i) * size_t(cols_) + size_t(j);
    }

    int rows_, cols_;
    std::vector<T> a_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

RatMat to_rat(const IntMat& m);
IntMat to_int(const RatMat& m);  // throws if any entry has denominator != 1
bool is_integral(const RatMat& m);

std::string to_string(const IntMat& m);
std::string to_string(const RatMat& m);

IntMat block_diag(const IntMat& a, const IntMat& b);
IntMat scale(const IntMat& m, const Int& n);

// Exact Gaussian elimination over the rationals.
Rat det(const RatMat& m);
Int det(const IntMat& m);
int rank(const RatMat& m);
int rank(const IntMat& m);
RatMat inverse(const RatMat& m);  // throws on singular input

// Solve x * a = b for x (rows of b expressed over rows of a).
// Returns false if any row of b is outside the row span of a.
bool solve_left(const RatMat& a, const RatMat& b, RatMat& x);

struct Signature {
    int plus = 0;
    int minus = 0;
    int zero = 0;
};

// Signature of a symmetric matrix by exact symmetric reduction
// (congruence transforms, hyperbolic-pair handling for zero diagonals).
Signature signature(const RatMat& sym);

struct SmithDecomposition {
    IntMat s;  // diagonal, nonnegative, d1 | d2 | ... | dk then zeros
    IntMat a;  // unimodular row transform
    IntMat b;  // unimodular column transform; a * m * b = s

    std::vector<Int> diagonal() const;
    std::vector<Int> nonunit_divisors() const;  // entries not in {0, 1}
};

// Smith normal form with transforms. Pivot selection takes the entry of
// minimal nonzero absolute value, ties broken row-major, so the output is
// reproducible across runs.
SmithDecomposition smith_normal_form(const IntMat& m);

// Row-style Hermite basis of the row lattice: nonzero rows, positive
// pivots, entries above each pivot reduced into [0, pivot).
IntMat hermite_row_basis(const IntMat& m);

// Basis of the primitive closure (saturation) of the row span inside Z^n.
// Empty input gives the empty basis.
IntMat saturate(const IntMat& generators, int ambient_rank);

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// Legendre symbol (a/p) for odd prime p.
inline int legendre(const Int& a, const Int& p) {
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

// x mod m reduced into [0, m) for m > 0.
inline Int mod_floor(const Int& x, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Rational residue of x modulo the integer m > 0, reduced into [0, m).
Rat mod_rat(const Rat& x, const Int& m);

}  // namespace mirrorlat
