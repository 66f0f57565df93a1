#include "cent/jordan.hpp"

#include <algorithm>
#include <map>

namespace cent {

JordanType::JordanType(RingSpec ring, std::vector<EigenGroup> groups)
    : ring_(ring), groups_(std::move(groups)) {
    if (groups_.empty()) throw Error("block type needs at least one eigenvalue group");
    for (auto& g : groups_) {
        if (!(g.eigenvalue.ring() == ring_)) throw Error("eigenvalue ring mismatch");
        if (g.blocks.empty()) throw Error("eigenvalue group without blocks");
        std::map<int, int, std::greater<>> merged;
        for (const auto& bc : g.blocks) {
            if (bc.size < 1 || bc.mult < 1) throw Error("block sizes and multiplicities must be positive");
            merged[bc.size] += bc.mult;
        }
        g.blocks.clear();
        for (const auto& [size, mult] : merged) g.blocks.push_back({size, mult});
    }
    for (size_t i = 0; i < groups_.size(); ++i)
        for (size_t j = i + 1; j < groups_.size(); ++j)
            if (groups_[i].eigenvalue == groups_[j].eigenvalue)
                throw Error("eigenvalues of distinct groups must differ");
    n_ = 0;
    for (const auto& g : groups_)
        for (const auto& bc : g.blocks) n_ += bc.size * bc.mult;
}

JordanType JordanType::to_ring(RingSpec target) const {
    std::vector<EigenGroup> gs;
    for (const auto& g : groups_) {
        EigenGroup ng{g.eigenvalue.to_ring(target), g.blocks};
        gs.push_back(std::move(ng));
    }
    return JordanType(target, std::move(gs));
}

std::vector<std::vector<int>> JordanType::size_lists() const {
    std::vector<std::vector<int>> out;
    for (const auto& g : groups_) {
        std::vector<int> sizes;
        for (const auto& bc : g.blocks) sizes.push_back(bc.size);
        out.push_back(std::move(sizes));
    }
    return out;
}

BlockIndex::BlockIndex(const JordanType& jt) {
    tau_.push_back(0);
    for (const auto& eg : jt.groups()) {
        GroupIndex g;
        g.first_block = num_blocks_;
        g.m.push_back(0);
        for (const auto& bc : eg.blocks) {
            g.sizes.push_back(bc.size);
            g.mults.push_back(bc.mult);
            g.m.push_back(g.m.back() + bc.mult);
            g.n += bc.size * bc.mult;
        }
        g.num_blocks = g.m.back();
        int lambda1 = g.sizes.front();
        for (int p = 1; p <= lambda1; ++p) {
            int l = 0;
            for (size_t c = 0; c < g.sizes.size(); ++c)
                if (g.sizes[c] >= p) l = static_cast<int>(c);
            g.l_of.push_back(l);
        }
        int end = 0;
        for (size_t c = 0; c < g.sizes.size(); ++c)
            for (int rep = 0; rep < g.mults[c]; ++rep) {
                end += g.sizes[c];
                block_group_.push_back(static_cast<int>(group_.size()));
                block_class_.push_back(static_cast<int>(c));
                block_size_.push_back(g.sizes[c]);
                block_end_.push_back(end);
                ++num_blocks_;
            }
        n_ += g.n;
        tau_.push_back(n_);
        group_.push_back(std::move(g));
    }
}

int BlockIndex::rho(int b1, int b2) const {
    if (block_group(b1) != block_group(b2)) throw Error("rho needs blocks of one group");
    return block_size(b1) + block_size(b2) - lambda_max(block_group(b1));
}

int BlockIndex::M_size(int g, int p) const {
    const GroupIndex& gi = group_.at(g);
    if (p < 1 || p > gi.sizes.front()) throw Error("level out of range");
    return gi.m[gi.l_of[p - 1] + 1];
}

Matrix assemble_matrix(const JordanType& jt) {
    const RingSpec& ring = jt.ring();
    Matrix c(ring, jt.total_size(), jt.total_size());
    int off = 0;
    for (const auto& g : jt.groups())
        for (const auto& bc : g.blocks)
            for (int rep = 0; rep < bc.mult; ++rep) {
                for (int i = 0; i < bc.size; ++i) {
                    c.at(off + i, off + i) = g.eigenvalue;
                    if (i + 1 < bc.size) c.at(off + i, off + i + 1) = Scalar::one(ring);
                }
                off += bc.size;
            }
    return c;
}

Matrix idempotent_f(const JordanType& jt, int b) {
    BlockIndex idx(jt);
    if (b < 0 || b >= idx.num_blocks()) throw Error("block index out of range");
    Matrix f(jt.ring(), idx.n(), idx.n());
    int base = idx.tau(idx.block_group(b)) + idx.block_start(b);
    for (int q = 1; q <= idx.block_size(b); ++q) f.at1(base + q, base + q) = Scalar::one(jt.ring());
    return f;
}

Matrix idempotent_eps(const JordanType& jt, int g) {
    BlockIndex idx(jt);
    if (g < 0 || g >= idx.num_groups()) throw Error("group index out of range");
    Matrix eps(jt.ring(), idx.n(), idx.n());
    for (int q = idx.tau(g) + 1; q <= idx.tau(g + 1); ++q) eps.at1(q, q) = Scalar::one(jt.ring());
    return eps;
}

Matrix embed_phi(const JordanType& jt, const BlockIndex& idx, int bi, int bj, const Matrix& b) {
    if (b.rows() != idx.block_size(bi) || b.cols() != idx.block_size(bj))
        throw Error("embed: block shape mismatch");
    Matrix out(jt.ring(), idx.n(), idx.n());
    int r0 = idx.tau(idx.block_group(bi)) + idx.block_start(bi);
    int c0 = idx.tau(idx.block_group(bj)) + idx.block_start(bj);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            if (!b.at(i, j).is_zero()) out.at(r0 + i, c0 + j) = b.at(i, j);
    return out;
}

Matrix embed_psi(const JordanType& jt, const BlockIndex& idx, int g, const Matrix& x) {
    if (x.rows() != idx.group(g).n || x.cols() != idx.group(g).n)
        throw Error("embed: group shape mismatch");
    Matrix out(jt.ring(), idx.n(), idx.n());
    int o = idx.tau(g);
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j)
            if (!x.at(i, j).is_zero()) out.at(o + i, o + j) = x.at(i, j);
    return out;
}

namespace {

// Block sizes of one eigenvalue from the rank sequence of (c - r I)^k.
std::vector<BlockClass> blocks_from_ranks(const Matrix& c, const Scalar& r) {
    int n = c.rows();
    Matrix shifted = c - Matrix::identity(c.ring(), n) * r;
    std::vector<int> ranks{n};
    Matrix power = Matrix::identity(c.ring(), n);
    for (int k = 1; k <= n; ++k) {
        power = power * shifted;
        ranks.push_back(rank_of(power));
        if (ranks[k] == ranks[k - 1]) break;  // stabilized
    }
    std::vector<BlockClass> blocks;
    int kmax = static_cast<int>(ranks.size()) - 1;
    for (int k = kmax; k >= 1; --k) {
        int at_least_k = ranks[k - 1] - ranks[k];
        int at_least_k1 = (k + 1 <= kmax) ? ranks[k] - ranks[k + 1] : 0;
        int exactly = at_least_k - at_least_k1;
        if (exactly > 0) blocks.push_back({k, exactly});
    }
    return blocks;
}

}  // namespace

JordanType jordan_type_of_rational(const Matrix& c) {
    if (c.rows() != c.cols()) throw Error("block-type recovery needs a square matrix");
    RingSpec ring = c.ring();
    Matrix cf = ring.kind == RingKind::Integers ? c.to_ring(RingSpec::rationals()) : c;
    RingSpec f = cf.ring();
    int n = c.rows();

    std::vector<Scalar> eigenvalues;
    if (f.kind == RingKind::Rationals) {
        for (const auto& [root, mult] : charpoly_rational_roots(cf)) eigenvalues.push_back(root);
    } else {
        for (unsigned long r = 0; r < f.p; ++r) {
            Scalar s = Scalar::of_int(f, static_cast<long>(r));
            if (rank_of(cf - Matrix::identity(f, n) * s) < n) eigenvalues.push_back(s);
        }
    }

    std::vector<EigenGroup> groups;
    int covered = 0;
    for (const auto& ev : eigenvalues) {
        EigenGroup g{ev, blocks_from_ranks(cf, ev)};
        for (const auto& bc : g.blocks) covered += bc.size * bc.mult;
        groups.push_back(std::move(g));
    }
    if (covered != n)
        throw Error("not Jordan-similar over this ring; supply the block type explicitly");
    JordanType jt(f, std::move(groups));
    return ring.kind == RingKind::Integers ? jt.to_ring(ring) : jt;
}

}  // namespace cent
