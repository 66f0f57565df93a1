// Jordan block types and their index combinatorics.
//
// A JordanType lists eigenvalue groups; each group holds strictly
// decreasing block sizes with multiplicities.  BlockIndex precomputes
// every derived quantity the basis constructions need.
//
// Index conventions used throughout the code base:
//   * eigenvalue groups, size classes and blocks are 0-based;
//   * levels p and matrix positions are 1-based, matching the usual
//     matrix-unit formulas (Matrix::at1 does the conversion).
// "Blocks" are counted globally across groups, in group-major order;
// a block's size class within its group is its class index.

#pragma once

#include "cent/matrix.hpp"

#include <vector>

namespace cent {

struct BlockClass {
    int size = 0;  // lambda
    int mult = 0;  // b
    bool operator==(const BlockClass&) const = default;
};

struct EigenGroup {
    Scalar eigenvalue;
    std::vector<BlockClass> blocks;
};

class JordanType {
public:
    /// Normalizes each group: equal sizes are merged into multiplicities
    /// and classes sorted by decreasing size.  Eigenvalues must be
    /// pairwise distinct and all sizes/multiplicities positive.
    JordanType(RingSpec ring, std::vector<EigenGroup> groups);

    const RingSpec& ring() const { return ring_; }
    const std::vector<EigenGroup>& groups() const { return groups_; }
    int total_size() const { return n_; }

    JordanType to_ring(RingSpec target) const;
    /// Block type as nested size lists, e.g. {{3,2},{1}}.
    std::vector<std::vector<int>> size_lists() const;

private:
    RingSpec ring_;
    std::vector<EigenGroup> groups_;
    int n_ = 0;
};

struct GroupIndex {
    std::vector<int> sizes;   // distinct sizes, decreasing
    std::vector<int> mults;
    std::vector<int> m;       // m[0]=0, m[c+1] = m[c] + mults[c]
    std::vector<int> l_of;    // l_of[p-1]: largest class with size >= p, p in [1..sizes[0]]
    int first_block = 0;      // global index of the group's first block
    int num_blocks = 0;
    int n = 0;                // sum of size*mult over the group
};

class BlockIndex {
public:
    explicit BlockIndex(const JordanType& jt);

    int n() const { return n_; }
    int num_groups() const { return static_cast<int>(group_.size()); }
    int num_blocks() const { return num_blocks_; }
    const GroupIndex& group(int g) const { return group_.at(g); }
    int tau(int g) const { return tau_.at(g); }  // row offset of group g; tau(t) = n

    int block_group(int b) const { return block_group_.at(b); }
    int block_class(int b) const { return block_class_.at(b); }     // 0-based class in its group
    int block_size(int b) const { return block_size_.at(b); }       // lambda of the block
    int block_end(int b) const { return block_end_.at(b); }         // 1-based right edge within the group
    int block_start(int b) const { return block_end(b) - block_size(b); }  // rows before the block

    int theta(int b1, int b2) const { return std::min(block_size(b1), block_size(b2)); }
    /// rho for two blocks of one group: lambda_i + lambda_j - lambda_max.
    int rho(int b1, int b2) const;

    /// Largest block size of a group.
    int lambda_max(int g) const { return group_.at(g).sizes.front(); }
    /// Membership of a block in M(p) of its group: block size >= p.
    bool in_M(int b, int p) const { return block_size(b) >= p; }
    /// |M(p)| for a group (the member blocks are its first m_{l(p)} ones).
    int M_size(int g, int p) const;

private:
    int n_ = 0;
    int num_blocks_ = 0;
    std::vector<GroupIndex> group_;
    std::vector<int> tau_;
    std::vector<int> block_group_, block_class_, block_size_, block_end_;
};

/// The block-diagonal Jordan matrix of the type: groups in order, each
/// size class repeated by its multiplicity, decreasing sizes.
Matrix assemble_matrix(const JordanType& jt);

/// Identity of the b-th Jordan block (global block index, 0-based).
Matrix idempotent_f(const JordanType& jt, int b);

/// Identity of the g-th eigenvalue group; these are central.
Matrix idempotent_eps(const JordanType& jt, int g);

/// Places a lambda_{bi} x lambda_{bj} matrix at block position
/// (bi, bj) of the global block grid, zeros elsewhere.
Matrix embed_phi(const JordanType& jt, const BlockIndex& idx, int bi, int bj, const Matrix& b);

/// Places an n_g x n_g matrix at the g-th group-diagonal position.
Matrix embed_psi(const JordanType& jt, const BlockIndex& idx, int g, const Matrix& x);

/// Recovers the block type of a matrix whose characteristic polynomial
/// splits over its ring (Q via rational root search, GF(p) via
/// exhaustive residue search).  For each eigenvalue r the block sizes
/// come from the rank sequence of (c - r I)^k: the number of blocks of
/// size >= k is rank^(k-1) - rank^(k).  Groups ordered by eigenvalue.
/// Throws if the polynomial does not split over the ring.
JordanType jordan_type_of_rational(const Matrix& c);

}  // namespace cent
