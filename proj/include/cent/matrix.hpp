// Dense exact matrices and the linear-algebra kernels shared by all
// higher layers: reduced echelon form, nullspace, linear solve,
// characteristic polynomial with rational root search.
//
// Everything is exact; there is no floating point anywhere.  Pivoting
// is "first nonzero" since comparisons are exact, and all outputs are
// deterministic (row-major, ascending index order).

#pragma once

#include "cent/ring.hpp"

#include <optional>
#include <ostream>
#include <vector>

namespace cent {

class Matrix {
public:
    Matrix() : ring_(RingSpec::rationals()), rows_(0), cols_(0) {}
    Matrix(RingSpec ring, int rows, int cols)
        : ring_(ring), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Scalar::zero(ring)) {
        if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
    }

    static Matrix identity(RingSpec ring, int n);
    /// Matrix unit e_{ij}, 1-based indices.
    static Matrix unit(RingSpec ring, int rows, int cols, int i1, int j1);

    const RingSpec& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    /// 1-based access; construction code follows the usual 1-based
    /// matrix-unit formulas and converts here, nowhere else.
    Scalar& at1(int i, int j) { return at(i - 1, j - 1); }
    const Scalar& at1(int i, int j) const { return at(i - 1, j - 1); }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;  // exact product, dimension/ring checked
    Matrix operator*(const Scalar& s) const;
    Matrix operator-() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const;
    Matrix pow(int k) const;
    Scalar trace() const;
    bool is_zero() const;
    bool is_identity() const;

    Matrix to_ring(RingSpec target) const;  // entrywise Scalar::to_ring

    /// Row-major flattening as a 1 x (rows*cols) row vector.
    Matrix vec_row() const;

    std::string str() const;

private:
    void require_same_shape(const Matrix& o) const;

    RingSpec ring_;
    int rows_, cols_;
    std::vector<Scalar> a_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

struct Echelon {
    Matrix rref;              // reduced row echelon form
    std::vector<int> pivots;  // pivot column of each nonzero row, ascending
    int rank = 0;
};

/// Gauss-Jordan over a field.  Throws on non-field rings.
Echelon echelon_form(const Matrix& a);

int rank_of(const Matrix& a);

/// Basis of {v : a v = 0} as column vectors.  The basis is canonical:
/// assembled as rows it is itself in reduced echelon form.
std::vector<Matrix> nullspace(const Matrix& a);

/// One solution of a x = rhs (free variables set to zero), or nullopt
/// when the system is inconsistent.  rhs may have several columns.
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& rhs);

/// Characteristic polynomial of a square matrix over Z or Q via the
/// Faddeev-LeVerrier recursion.  Coefficients ascending, monic:
/// p(x) = c[0] + c[1] x + ... + x^n.  Rejects GF(p) input (eigenvalue
/// search over GF(p) is exhaustive over residues instead).
std::vector<Scalar> charpoly(const Matrix& a);

/// Rational roots with multiplicities of a polynomial over Q
/// (coefficients ascending), found by root search on the primitive
/// integer polynomial and repeated deflation.  Sorted ascending.
std::vector<std::pair<Scalar, int>> rational_roots(const std::vector<Scalar>& coeffs);

std::vector<std::pair<Scalar, int>> charpoly_rational_roots(const Matrix& a);

}  // namespace cent
