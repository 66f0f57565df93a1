// The structured basis of a centralizer algebra and everything built
// on its closed-form structure constants: products, the rank count,
// the radical in the basic case, Cartan data, the Gabriel quiver and
// the decomposition across eigenvalue groups.
//
// A basis element F^p(i,j) of one eigenvalue group is the 0/1 matrix
//   sum_{u=1..p} e[end(i)-lambda(i)+p-u+1, end(j)-u+1]
// (1-based within the group, shifted by the group offset).  Products
// never use these matrices: two elements multiply to another element
// or to zero by the level rule p+q-lambda(middle), and materialized
// multiplication is demoted to a test oracle.

#pragma once

#include "cent/jordan.hpp"

#include <map>
#include <optional>

namespace cent {

struct BasisElement {
    int group = 0;  // eigenvalue group
    int i = 0;      // row block, 0-based within the group
    int j = 0;      // column block, 0-based within the group
    int p = 1;      // level, 1 <= p <= theta(i,j)

    // (group, i, j, p) lexicographic order is part of the public
    // contract: coefficient layouts and reports depend on it.
    auto operator<=>(const BasisElement&) const = default;
    std::string str() const;
};

/// All basis elements in contract order.
std::vector<BasisElement> structured_basis(const JordanType& jt);

/// sum over groups of sum_c (m_c^2 - m_{c-1}^2) * lambda_c; equals the
/// length of structured_basis.
long rank_formula(const JordanType& jt);

Matrix materialize(const JordanType& jt, const BlockIndex& idx, const BasisElement& e);

/// The semicirculant intertwiner basis G^1..G^min(m,n) of M_{m x n},
/// G^p = sum_{u=1..p} e_{p-u+1, n-u+1}.
std::vector<Matrix> semicirculant_basis(RingSpec ring, int m, int n);

/// Closed-form product of two basis elements: zero (nullopt) when the
/// groups differ, the inner blocks differ, or the level drops below 1;
/// otherwise another basis element with coefficient one.
std::optional<BasisElement> multiply_basis(const BlockIndex& idx, const BasisElement& x,
                                           const BasisElement& y);

/// An element of the algebra as a finitely supported coefficient
/// vector over the structured basis.
class AlgebraElement {
public:
    explicit AlgebraElement(RingSpec ring) : ring_(ring) {}

    static AlgebraElement basis(const RingSpec& ring, const BasisElement& e) {
        AlgebraElement a(ring);
        a.add(e, Scalar::one(ring));
        return a;
    }

    const RingSpec& ring() const { return ring_; }
    const std::map<BasisElement, Scalar>& coeffs() const { return c_; }
    void add(const BasisElement& e, const Scalar& s);
    Scalar coeff(const BasisElement& e) const;
    bool is_zero() const { return c_.empty(); }

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const Scalar& s) const;

private:
    RingSpec ring_;
    std::map<BasisElement, Scalar> c_;  // zero coefficients are dropped
};

/// Bilinear extension of multiply_basis.
AlgebraElement multiply_elements(const BlockIndex& idx, const AlgebraElement& a,
                                 const AlgebraElement& b);

Matrix materialize(const JordanType& jt, const BlockIndex& idx, const AlgebraElement& a);

/// Coordinates of a matrix over the structured basis, or nullopt when
/// the matrix lies outside the span.  Each coefficient sits at a
/// position no other basis element touches, so coordinates are read
/// off directly and the reconstruction is compared against the input;
/// over Z this decides span membership without leaving the ring.
std::optional<AlgebraElement> decompose(const JordanType& jt, const BlockIndex& idx,
                                        const Matrix& m);
/// Same, with the basis enumeration supplied by the caller.
std::optional<AlgebraElement> decompose(const JordanType& jt, const BlockIndex& idx,
                                        const std::vector<BasisElement>& basis, const Matrix& m);

/// Radical basis in the basic case (field, one eigenvalue group, all
/// multiplicities one): every basis element except the diagonal tops
/// F^{lambda_i}(i,i).  Refuses other inputs ("use oracle radical").
std::vector<BasisElement> radical_basis_basic(const JordanType& jt);

/// theta table over global blocks; zero across groups.
std::vector<std::vector<int>> cartan_dims(const JordanType& jt);

struct QuiverReport {
    int vertices = 0;
    std::vector<std::vector<int>> arrows;     // arrows[u][v] = dim f_u (rad/rad^2) f_v
    std::vector<std::string> relations;       // relations verified as exact matrix identities
    bool relations_verified = true;
};

/// Gabriel quiver in the basic case.  Arrow counts come from exact
/// span arithmetic over the structured basis (rad^2 is spanned by the
/// nonzero pairwise products of radical basis elements).  For two
/// vertices the report verifies (beta alpha)^k = 0 at the minimal k;
/// for staircase types (s, s-1, ..., 1) it verifies
/// beta_{s-1} alpha_{s-1} = 0 and alpha_i beta_i = beta_{i-1} alpha_{i-1}.
QuiverReport gabriel_quiver(const JordanType& jt);

/// Per-group restriction: (eigenvalue, single-group type) in order.
std::vector<std::pair<Scalar, JordanType>> product_decomposition(const JordanType& jt);

}  // namespace cent
