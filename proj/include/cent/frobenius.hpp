// Frobenius systems for centralizer extensions: the conjugation trace
// of a finite matrix group at a free point, and the block trace of a
// Jordan type assembled from the per-block maps E_ij, together with
// dual bases, separability elements and split/semisimple predicates.
//
// A system stores the trace as its action on all n^2 matrix units, so
// the bimodule and dual-basis identities reduce to exact table
// arithmetic over any coefficient ring.

#pragma once

#include "cent/basis.hpp"

#include <functional>

namespace cent {

class GroupSpec {
public:
    /// Explicit element list; must contain the identity and be closed
    /// under products and inverses (verified, not completed).
    static GroupSpec from_matrices(std::vector<Matrix> elements);
    /// Permutations as generators (images, 0-based); the generated
    /// subgroup of permutation matrices is enumerated by closure.
    static GroupSpec from_permutations(RingSpec ring, int n,
                                       const std::vector<std::vector<int>>& generators);

    int n() const { return n_; }
    const RingSpec& ring() const { return ring_; }
    long order() const { return static_cast<long>(elements_.size()); }
    const std::vector<Matrix>& elements() const { return elements_; }
    bool is_permutation_group() const { return !perms_.empty(); }
    const std::vector<std::vector<int>>& permutations() const { return perms_; }

    /// Basis of the centralizer of the group: orbit-sum matrices for a
    /// permutation group (any ring); otherwise the intersection of the
    /// per-element commutant nullspaces (field rings only).
    std::vector<Matrix> subalgebra_basis() const;

private:
    GroupSpec() = default;
    RingSpec ring_;
    int n_ = 0;
    std::vector<Matrix> elements_;
    std::vector<std::vector<int>> perms_;  // parallel to elements_ when permutation-built
};

/// Smallest i in [n] (1-based) whose diagonal entry vanishes in every
/// non-identity element, if any.
std::optional<int> find_free_point(const GroupSpec& g);

/// A cycle type admits a free point iff some part is divisible by
/// every part, i.e. the lcm of the parts is itself a part.
bool perm_free_point_criterion(const std::vector<int>& cycle_type);

struct FrobeniusSystem {
    RingSpec ring;
    int n = 0;
    std::vector<Matrix> trace_table;  // E(e_{ab}) at (a-1)*n + (b-1)
    std::vector<Matrix> x, y;         // dual families
    std::vector<Matrix> subalgebra;   // basis of B used by the checker
    std::function<bool(const Matrix&)> in_subalgebra;
    std::string origin;

    const Matrix& trace_of_unit(int a1, int b1) const;
    Matrix apply(const Matrix& a) const;  // linear extension of the table
};

/// Conjugation trace a -> sum_g g a g^{-1} with duals x_j = e_{j,point},
/// y_j = e_{point,j}.  With require_free the point is checked first;
/// unchecked systems exist so that verification can demonstrate
/// failure at non-free points.
FrobeniusSystem group_trace_system(const GroupSpec& g, int point_1based, bool require_free = true);

/// The per-block-pair trace component: zero when rho(i,j) <= 0, else
/// a -> sum_{p=1..rho} sum_{u=1..rho-p+1} a[lambda_i-u+1, rho-p+2-u] G^p(i,j).
Matrix eij_apply(const BlockIndex& idx, int bi, int bj, const Matrix& a);

/// The Jordan trace: group-diagonal blocks pass through their group's
/// block trace, cross-group blocks are discarded; duals
/// x_i = sum_q e_{i, tau_q+1}, y_i = sum_q e_{tau_q + lambda_max(q), i}.
FrobeniusSystem jordan_trace_system(const JordanType& jt);

struct FrobeniusReport {
    bool image = false;       // E lands in span(B)
    bool bimodule = false;    // E(b a) = b E(a), E(a b) = E(a) b
    bool dual_left = false;   // sum_i x_i E(y_i a) = a
    bool dual_right = false;  // sum_i E(a x_i) y_i = a
    std::string counterexample;
    bool pass() const { return image && bimodule && dual_left && dual_right; }
};

/// Exhaustive verification over all matrix units (and all subalgebra
/// basis elements for the bimodule law).  Failures are report content.
FrobeniusReport check_frobenius_system(const FrobeniusSystem& sys);

/// d = psi_0(diag over the first group's blocks of the all-ones
/// semicirculant); commutes with the whole centralizer and satisfies
/// sum_w x_w d y_w = I_n.
Matrix separability_element(const JordanType& jt);

struct SplitResult {
    std::optional<Matrix> witness;  // z with z central in the algebra and E(z) = I
    bool predicate = false;         // every eigenvalue group is a single size-1 class
};

/// Solves the exact linear system for a split witness and checks the
/// outcome against the closed predicate (they must agree).
SplitResult split_solver(const JordanType& jt);

/// True iff every eigenvalue group consists of size-1 blocks only.
bool semisimple_predicate(const JordanType& jt);

}  // namespace cent
