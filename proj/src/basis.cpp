#include "cent/basis.hpp"

#include <set>
#include <sstream>

namespace cent {

std::string BasisElement::str() const {
    std::ostringstream os;
    os << "F[" << group << "](" << i + 1 << "," << j + 1 << ")^" << p;
    return os.str();
}

std::vector<BasisElement> structured_basis(const JordanType& jt) {
    BlockIndex idx(jt);
    std::vector<BasisElement> out;
    for (int g = 0; g < idx.num_groups(); ++g) {
        int nb = idx.group(g).num_blocks;
        int fb = idx.group(g).first_block;
        for (int i = 0; i < nb; ++i)
            for (int j = 0; j < nb; ++j) {
                int theta = idx.theta(fb + i, fb + j);
                for (int p = 1; p <= theta; ++p) out.push_back({g, i, j, p});
            }
    }
    return out;
}

long rank_formula(const JordanType& jt) {
    long total = 0;
    for (const auto& g : jt.groups()) {
        long m_prev = 0, m = 0;
        for (const auto& bc : g.blocks) {
            m += bc.mult;
            total += (m * m - m_prev * m_prev) * bc.size;
            m_prev = m;
        }
    }
    return total;
}

Matrix materialize(const JordanType& jt, const BlockIndex& idx, const BasisElement& e) {
    int fb = idx.group(e.group).first_block;
    int bi = fb + e.i, bj = fb + e.j;
    if (e.p < 1 || e.p > idx.theta(bi, bj)) throw Error("level out of range for " + e.str());
    Matrix m(jt.ring(), idx.n(), idx.n());
    int tau = idx.tau(e.group);
    int ri = idx.block_end(bi) - idx.block_size(bi);  // rows before block i
    int cj = idx.block_end(bj);                       // right edge of block j
    for (int u = 1; u <= e.p; ++u)
        m.at1(tau + ri + e.p - u + 1, tau + cj - u + 1) = Scalar::one(jt.ring());
    return m;
}

std::vector<Matrix> semicirculant_basis(RingSpec ring, int m, int n) {
    if (m < 1 || n < 1) throw Error("semicirculant basis needs positive dimensions");
    std::vector<Matrix> out;
    for (int p = 1; p <= std::min(m, n); ++p) {
        Matrix g(ring, m, n);
        for (int u = 1; u <= p; ++u) g.at1(p - u + 1, n - u + 1) = Scalar::one(ring);
        out.push_back(std::move(g));
    }
    return out;
}

std::optional<BasisElement> multiply_basis(const BlockIndex& idx, const BasisElement& x,
                                           const BasisElement& y) {
    if (x.group != y.group || x.j != y.i) return std::nullopt;
    int fb = idx.group(x.group).first_block;
    int level = x.p + y.p - idx.block_size(fb + x.j);
    if (level < 1) return std::nullopt;
    return BasisElement{x.group, x.i, y.j, level};
}

void AlgebraElement::add(const BasisElement& e, const Scalar& s) {
    if (!(s.ring() == ring_)) throw Error("coefficient ring mismatch");
    auto it = c_.find(e);
    if (it == c_.end()) {
        if (!s.is_zero()) c_.emplace(e, s);
        return;
    }
    it->second = it->second + s;
    if (it->second.is_zero()) c_.erase(it);
}

Scalar AlgebraElement::coeff(const BasisElement& e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Scalar::zero(ring_) : it->second;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    for (const auto& [e, s] : o.c_) r.add(e, s);
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    for (const auto& [e, s] : o.c_) r.add(e, -s);
    return r;
}

AlgebraElement AlgebraElement::operator*(const Scalar& s) const {
    AlgebraElement r(ring_);
    for (const auto& [e, c] : c_) r.add(e, c * s);
    return r;
}

AlgebraElement multiply_elements(const BlockIndex& idx, const AlgebraElement& a,
                                 const AlgebraElement& b) {
    if (!(a.ring() == b.ring())) throw Error("ring mismatch in product");
    AlgebraElement r(a.ring());
    for (const auto& [ea, ca] : a.coeffs())
        for (const auto& [eb, cb] : b.coeffs())
            if (auto prod = multiply_basis(idx, ea, eb)) r.add(*prod, ca * cb);
    return r;
}

Matrix materialize(const JordanType& jt, const BlockIndex& idx, const AlgebraElement& a) {
    Matrix m(jt.ring(), idx.n(), idx.n());
    for (const auto& [e, c] : a.coeffs()) m = m + materialize(jt, idx, e) * c;
    return m;
}

std::optional<AlgebraElement> decompose(const JordanType& jt, const BlockIndex& idx,
                                        const Matrix& m) {
    return decompose(jt, idx, structured_basis(jt), m);
}

std::optional<AlgebraElement> decompose(const JordanType& jt, const BlockIndex& idx,
                                        const std::vector<BasisElement>& basis, const Matrix& m) {
    if (m.rows() != idx.n() || m.cols() != idx.n() || !(m.ring() == jt.ring())) return std::nullopt;
    AlgebraElement a(jt.ring());
    for (const auto& e : basis) {
        // The u = 1 term of F^p(i,j) is hit by no other basis element.
        int fb = idx.group(e.group).first_block;
        int tau = idx.tau(e.group);
        int row = tau + idx.block_start(fb + e.i) + e.p;
        int col = tau + idx.block_end(fb + e.j);
        a.add(e, m.at1(row, col));
    }
    if (!(materialize(jt, idx, a) == m)) return std::nullopt;
    return a;
}

std::vector<BasisElement> radical_basis_basic(const JordanType& jt) {
    if (!jt.ring().is_field() || jt.groups().size() != 1)
        throw Error("radical formula needs a field and one eigenvalue group; use oracle radical");
    for (const auto& bc : jt.groups()[0].blocks)
        if (bc.mult != 1) throw Error("radical formula needs all multiplicities one; use oracle radical");
    std::vector<BasisElement> out;
    BlockIndex idx(jt);
    for (const auto& e : structured_basis(jt))
        if (!(e.i == e.j && e.p == idx.block_size(e.i))) out.push_back(e);
    return out;
}

std::vector<std::vector<int>> cartan_dims(const JordanType& jt) {
    BlockIndex idx(jt);
    int nb = idx.num_blocks();
    std::vector<std::vector<int>> table(nb, std::vector<int>(nb, 0));
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j)
            if (idx.block_group(i) == idx.block_group(j)) table[i][j] = idx.theta(i, j);
    return table;
}

QuiverReport gabriel_quiver(const JordanType& jt) {
    if (!jt.ring().is_field()) throw Error("quiver extraction needs a field");
    if (jt.groups().size() != 1) throw Error("quiver extraction handles one eigenvalue group");
    for (const auto& bc : jt.groups()[0].blocks)
        if (bc.mult != 1) throw Error("quiver extraction needs all multiplicities one");

    BlockIndex idx(jt);
    const auto& sizes = idx.group(0).sizes;
    int s = static_cast<int>(sizes.size());
    std::vector<BasisElement> rad = radical_basis_basic(jt);

    // rad^2 is spanned by the nonzero pairwise products, each again a
    // basis element.
    std::set<BasisElement> rad_set(rad.begin(), rad.end());
    std::set<BasisElement> rad2;
    for (const auto& x : rad)
        for (const auto& y : rad)
            if (auto prod = multiply_basis(idx, x, y)) rad2.insert(*prod);

    QuiverReport rep;
    rep.vertices = s;
    rep.arrows.assign(s, std::vector<int>(s, 0));
    for (const auto& e : rad)
        if (!rad2.count(e)) ++rep.arrows[e.i][e.j];

    auto F = [&](int i, int j, int p) { return materialize(jt, idx, BasisElement{0, i, j, p}); };

    if (s == 2 && rep.arrows[0][1] == 1 && rep.arrows[1][0] == 1) {
        // alpha = F^{lambda_2}(1,2), beta = F^{lambda_2}(2,1);
        // (beta alpha)^k vanishes at a minimal k <= lambda_1.
        Matrix ba = F(1, 0, sizes[1]) * F(0, 1, sizes[1]);
        int k = 1;
        Matrix acc = ba;
        while (!acc.is_zero() && k <= sizes[0]) {
            acc = acc * ba;
            ++k;
        }
        rep.relations_verified = rep.relations_verified && acc.is_zero();
        rep.relations.push_back("(beta alpha)^" + std::to_string(k) + " = 0");
    }

    bool staircase = true;
    for (int c = 0; c < s; ++c) staircase = staircase && sizes[c] == s - c;
    if (staircase && s >= 2) {
        // alpha_i = F^{lambda_{i+1}}(i, i+1), beta_i = F^{lambda_{i+1}}(i+1, i).
        auto alpha = [&](int i) { return F(i - 1, i, sizes[i]); };
        auto beta = [&](int i) { return F(i, i - 1, sizes[i]); };
        bool ok = (beta(s - 1) * alpha(s - 1)).is_zero();
        rep.relations.push_back("beta_" + std::to_string(s - 1) + " alpha_" + std::to_string(s - 1) +
                                " = 0");
        for (int i = 2; i < s; ++i) {
            ok = ok && alpha(i) * beta(i) == beta(i - 1) * alpha(i - 1);
            rep.relations.push_back("alpha_" + std::to_string(i) + " beta_" + std::to_string(i) +
                                    " = beta_" + std::to_string(i - 1) + " alpha_" +
                                    std::to_string(i - 1));
        }
        rep.relations_verified = rep.relations_verified && ok;
    }
    return rep;
}

std::vector<std::pair<Scalar, JordanType>> product_decomposition(const JordanType& jt) {
    std::vector<std::pair<Scalar, JordanType>> out;
    for (const auto& g : jt.groups())
        out.emplace_back(g.eigenvalue, JordanType(jt.ring(), {g}));
    return out;
}

}  // namespace cent
