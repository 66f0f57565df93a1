// Cell structure of a centralizer algebra: the poset of levels, the
// index sets M(p), the cell basis C^p(i,j) (the structured basis
// re-indexed), and an involution swapping i and j.  The checker runs
// the three cellularity axioms as executable verification; failures
// are report content, never exceptions.
//
// The involution is stored as an index permutation; it is not matrix
// transposition.

#pragma once

#include "cent/basis.hpp"

namespace cent {

struct CellDatum {
    JordanType jt;
    BlockIndex idx;
    std::vector<BasisElement> basis;  // contract order
    std::vector<int> iota;            // involution as indices into basis

    explicit CellDatum(const JordanType& t);
    int find(const BasisElement& e) const;  // -1 if absent
};

/// Builds the datum and verifies internally that the cell index set
/// {(p, i, j) : i, j in M(p)} enumerates exactly the structured basis.
CellDatum build_cell_datum(const JordanType& jt);

AlgebraElement involution_apply(const CellDatum& d, const AlgebraElement& a);

/// Product C^q(u,v) * C^p(i,j) by the cell rule: zero unless v = i and
/// p+q-lambda(v) >= 1, else C^{p+q-lambda(v)}(u,j).  Throws when an
/// index lies outside M(q)/M(p).
std::optional<BasisElement> product_star(const CellDatum& d, int group, int q, int u, int v,
                                         int p, int i, int j);

struct CellReport {
    bool c1 = false, c2 = false, c3 = false;
    std::string counterexample;  // first failure, empty when all pass
    bool pass() const { return c1 && c2 && c3; }
};

/// (C1) basis count and linear independence (materialized rank over
/// the fraction field), (C2) involution closure, order two and the
/// anti-automorphism law on all basis pairs, (C3) for each basis
/// element a and each level p: the level-p part of a * C^p(i,j) has
/// j-independent coefficients and the remainder sits strictly below p.
/// (C3) multiplies materialized matrices and re-expands over the
/// basis, so it does not assume the closed-form product.
CellReport check_cellularity(const CellDatum& d);

struct CellChain {
    std::vector<std::vector<int>> surviving;  // per group, ascending levels with C_p^2 not inside C_{p-1}
    int count = 0;                            // total over groups
};

/// Surviving levels computed two ways -- exhaustive products of the
/// chain modulo the lower layer, and the combinatorial rule
/// p = lambda_{l(p)} -- with agreement asserted.
CellChain cell_chain_simples(const CellDatum& d);

struct QuasiHeredity {
    bool value = false;
    int failing_group = -1;  // witness when value is false
};

/// True exactly when lambda_{i1} = s_i in every group; cross-checked
/// against "all levels survive" from the cell chain.
QuasiHeredity is_quasi_hereditary(const JordanType& jt);

}  // namespace cent
