// Brute-force ground truth, deliberately independent of the structured
// constructions: it consumes raw matrices only.  Centralizers come
// from the nullspace of the commutation operator, radicals from the
// trace form of the regular representation, and simple-module counts
// from the center of the semisimple quotient.

#pragma once

#include "cent/matrix.hpp"

#include <vector>

namespace cent {

struct SpanBasis {
    RingSpec ring;
    int n = 0;                 // ambient matrices are n x n
    std::vector<Matrix> mats;  // echelonized basis of the subspace

    int dim() const { return static_cast<int>(mats.size()); }
};

/// Echelonizes a list of n x n matrices into a canonical SpanBasis.
SpanBasis make_span(RingSpec ring, int n, const std::vector<Matrix>& mats);

/// Basis of {a : c a = a c} via the n^2 x n^2 commutation operator.
SpanBasis centralizer_nullspace(const Matrix& c);

/// Basis of the joint centralizer of several matrices.
SpanBasis centralizer_nullspace_set(const std::vector<Matrix>& cs);

/// Mutual membership, each vector solved against the other span.
bool span_equal(const SpanBasis& a, const SpanBasis& b);
bool span_contains(const SpanBasis& a, const Matrix& m);

/// Radical of the algebra spanned by the basis: the kernel of the
/// trace form (x, y) -> trace(L_x L_y) of the regular representation,
/// verified nilpotent before returning.  Valid in characteristic 0 or
/// GF(p) with p > n; refuses smaller characteristics.
SpanBasis radical_oracle(const SpanBasis& basis);

/// Number of simple modules: the dimension of the center of
/// basis/radical, computed on the quotient's structure constants.
/// Same characteristic restrictions as radical_oracle.
int simple_count_oracle(const SpanBasis& basis);

}  // namespace cent
