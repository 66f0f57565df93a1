#include "cent/frobenius.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <set>

namespace cent {

namespace {

constexpr size_t kGroupCap = 100000;  // closure enumeration guard

Matrix perm_matrix(RingSpec ring, const std::vector<int>& images) {
    int n = static_cast<int>(images.size());
    Matrix m(ring, n, n);
    for (int i = 0; i < n; ++i) m.at(i, images[i]) = Scalar::one(ring);
    return m;
}

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
    return c;
}

}  // namespace

GroupSpec GroupSpec::from_matrices(std::vector<Matrix> elements) {
    if (elements.empty()) throw Error("group needs at least the identity");
    GroupSpec g;
    g.ring_ = elements.front().ring();
    g.n_ = elements.front().rows();
    for (const auto& e : elements)
        if (e.rows() != g.n_ || e.cols() != g.n_ || !(e.ring() == g.ring_))
            throw Error("group elements must share a square shape and ring");
    for (size_t a = 0; a < elements.size(); ++a)
        for (size_t b = a + 1; b < elements.size(); ++b)
            if (elements[a] == elements[b]) throw Error("duplicate group element");

    bool has_identity = false;
    for (const auto& e : elements) has_identity = has_identity || e.is_identity();
    if (!has_identity) throw Error("group element list lacks the identity");

    auto contains = [&](const Matrix& m) {
        return std::any_of(elements.begin(), elements.end(), [&](const Matrix& e) { return e == m; });
    };
    for (const auto& a : elements) {
        bool has_inverse = false;
        for (const auto& b : elements) {
            Matrix ab = a * b;
            if (!contains(ab)) throw Error("group element list is not closed under products");
            has_inverse = has_inverse || ab.is_identity();
        }
        if (!has_inverse) throw Error("group element list is not closed under inverses");
    }

    // Recognize a group of permutation matrices so the orbit-sum
    // centralizer basis (valid over any ring) applies to it.
    std::vector<std::vector<int>> perms;
    for (const auto& e : elements) {
        std::vector<int> images(g.n_, -1);
        bool is_perm = true;
        for (int i = 0; i < g.n_ && is_perm; ++i)
            for (int j = 0; j < g.n_ && is_perm; ++j) {
                if (e.at(i, j).is_zero()) continue;
                if (!e.at(i, j).is_one() || images[i] >= 0) is_perm = false;
                images[i] = j;
            }
        for (int i = 0; i < g.n_; ++i) is_perm = is_perm && images[i] >= 0;
        if (!is_perm) { perms.clear(); break; }
        perms.push_back(std::move(images));
    }
    g.perms_ = std::move(perms);
    g.elements_ = std::move(elements);
    return g;
}

GroupSpec GroupSpec::from_permutations(RingSpec ring, int n,
                                       const std::vector<std::vector<int>>& generators) {
    if (n < 1) throw Error("permutation degree must be positive");
    for (const auto& p : generators) {
        if (static_cast<int>(p.size()) != n) throw Error("permutation degree mismatch");
        std::vector<int> seen(n, 0);
        for (int v : p) {
            if (v < 0 || v >= n || seen[v]++) throw Error("not a permutation");
        }
    }
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<int>> closed{id};
    std::vector<std::vector<int>> queue{id};
    while (!queue.empty()) {
        std::vector<int> cur = std::move(queue.back());
        queue.pop_back();
        for (const auto& gen : generators) {
            std::vector<int> next = compose(cur, gen);
            if (closed.insert(next).second) {
                if (closed.size() > kGroupCap) throw Error("generated permutation group too large");
                queue.push_back(std::move(next));
            }
        }
    }
    GroupSpec g;
    g.ring_ = ring;
    g.n_ = n;
    for (const auto& p : closed) {
        g.perms_.push_back(p);
        g.elements_.push_back(perm_matrix(ring, p));
    }
    return g;
}

std::vector<Matrix> GroupSpec::subalgebra_basis() const {
    if (is_permutation_group()) {
        // Orbit sums of the action on index pairs; a basis over any ring.
        std::vector<std::vector<int>> orbit_of(n_, std::vector<int>(n_, -1));
        std::vector<Matrix> basis;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                if (orbit_of[i][j] >= 0) continue;
                int id = static_cast<int>(basis.size());
                Matrix orbital(ring_, n_, n_);
                std::vector<std::pair<int, int>> stack{{i, j}};
                orbit_of[i][j] = id;
                while (!stack.empty()) {
                    auto [a, b] = stack.back();
                    stack.pop_back();
                    orbital.at(a, b) = Scalar::one(ring_);
                    for (const auto& p : perms_)
                        if (orbit_of[p[a]][p[b]] < 0) {
                            orbit_of[p[a]][p[b]] = id;
                            stack.emplace_back(p[a], p[b]);
                        }
                }
                basis.push_back(std::move(orbital));
            }
        return basis;
    }
    if (!ring_.is_field())
        throw Error("matrix-group centralizer basis needs a field ring");
    // Stack the commutant conditions g a = a g over all elements.
    int nn = n_ * n_;
    Matrix sys(ring_, nn * static_cast<int>(elements_.size()), nn);
    int row0 = 0;
    for (const auto& g : elements_) {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                int r = row0 + i * n_ + j;
                for (int k = 0; k < n_; ++k) {
                    sys.at(r, k * n_ + j) = sys.at(r, k * n_ + j) + g.at(i, k);
                    sys.at(r, i * n_ + k) = sys.at(r, i * n_ + k) - g.at(k, j);
                }
            }
        row0 += nn;
    }
    std::vector<Matrix> basis;
    for (const auto& v : nullspace(sys)) {
        Matrix m(ring_, n_, n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m.at(i, j) = v.at(i * n_ + j, 0);
        basis.push_back(std::move(m));
    }
    return basis;
}

std::optional<int> find_free_point(const GroupSpec& g) {
    for (int i = 0; i < g.n(); ++i) {
        bool free = true;
        for (const auto& e : g.elements())
            if (!e.is_identity() && !e.at(i, i).is_zero()) {
                free = false;
                break;
            }
        if (free) return i + 1;
    }
    return std::nullopt;
}

bool perm_free_point_criterion(const std::vector<int>& cycle_type) {
    if (cycle_type.empty()) throw Error("empty cycle type");
    long l = 1;
    for (int part : cycle_type) {
        if (part < 1) throw Error("cycle type parts must be positive");
        l = std::lcm(l, static_cast<long>(part));
    }
    return std::any_of(cycle_type.begin(), cycle_type.end(),
                       [&](int part) { return part == l; });
}

const Matrix& FrobeniusSystem::trace_of_unit(int a1, int b1) const {
    return trace_table.at(static_cast<size_t>(a1 - 1) * n + (b1 - 1));
}

Matrix FrobeniusSystem::apply(const Matrix& a) const {
    if (a.rows() != n || a.cols() != n || !(a.ring() == ring)) throw Error("trace input shape mismatch");
    Matrix out(ring, n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (!a.at1(i, j).is_zero()) out = out + trace_of_unit(i, j) * a.at1(i, j);
    return out;
}

namespace {

// Membership of a matrix in the span of a list, by reduction against
// the echelonized stack over the fraction field.  Exact for fields;
// for Z callers install a ring-exact test instead.
std::function<bool(const Matrix&)> make_span_membership(RingSpec ring, int n,
                                                        const std::vector<Matrix>& span) {
    RingSpec field = ring.kind == RingKind::Integers ? RingSpec::rationals() : ring;
    Matrix stack(field, static_cast<int>(span.size()), n * n);
    for (size_t k = 0; k < span.size(); ++k) {
        Matrix v = span[k].to_ring(field).vec_row();
        for (int c = 0; c < v.cols(); ++c) stack.at(static_cast<int>(k), c) = v.at(0, c);
    }
    auto ech = std::make_shared<Echelon>(echelon_form(stack));
    return [field, ech](const Matrix& m) {
        Matrix v = m.to_ring(field).vec_row();
        for (int r = 0; r < ech->rank; ++r) {
            const Scalar f = v.at(0, ech->pivots[r]);
            if (f.is_zero()) continue;
            for (int c = 0; c < v.cols(); ++c) v.at(0, c) = v.at(0, c) - f * ech->rref.at(r, c);
        }
        return v.is_zero();
    };
}

}  // namespace

FrobeniusSystem group_trace_system(const GroupSpec& g, int point_1based, bool require_free) {
    if (point_1based < 1 || point_1based > g.n()) throw Error("free point out of range");
    if (require_free) {
        for (const auto& e : g.elements())
            if (!e.is_identity() && !e.at1(point_1based, point_1based).is_zero())
                throw Error("point " + std::to_string(point_1based) + " is not free");
    }
    FrobeniusSystem sys;
    sys.ring = g.ring();
    sys.n = g.n();
    sys.origin = "group-trace(point " + std::to_string(point_1based) + ")";

    // Inverse of each element, located inside the verified list.
    std::vector<const Matrix*> inverse(g.elements().size(), nullptr);
    for (size_t a = 0; a < g.elements().size(); ++a)
        for (size_t b = 0; b < g.elements().size(); ++b)
            if ((g.elements()[a] * g.elements()[b]).is_identity()) {
                inverse[a] = &g.elements()[b];
                break;
            }
    int n = sys.n;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            // sum_g g e_ij g^{-1} = sum_g (col_i of g) (row_j of g^{-1}).
            Matrix e(sys.ring, n, n);
            for (size_t k = 0; k < g.elements().size(); ++k) {
                const Matrix& gm = g.elements()[k];
                const Matrix& gi = *inverse[k];
                for (int r = 1; r <= n; ++r) {
                    if (gm.at1(r, i).is_zero()) continue;
                    for (int c = 1; c <= n; ++c)
                        if (!gi.at1(j, c).is_zero())
                            e.at1(r, c) = e.at1(r, c) + gm.at1(r, i) * gi.at1(j, c);
                }
            }
            sys.trace_table.push_back(std::move(e));
        }
    for (int j = 1; j <= n; ++j) {
        sys.x.push_back(Matrix::unit(sys.ring, n, n, j, point_1based));
        sys.y.push_back(Matrix::unit(sys.ring, n, n, point_1based, j));
    }
    sys.subalgebra = g.subalgebra_basis();

    if (g.is_permutation_group()) {
        // Orbit sums have disjoint supports: coordinates are read off
        // one representative entry each, exactly over any ring.
        auto span = sys.subalgebra;
        RingSpec ring = sys.ring;
        sys.in_subalgebra = [span, ring, n](const Matrix& m) {
            Matrix rebuilt(ring, n, n);
            for (const auto& orbital : span) {
                Scalar coeff = Scalar::zero(ring);
                bool found = false;
                for (int i = 0; i < n && !found; ++i)
                    for (int j = 0; j < n && !found; ++j)
                        if (!orbital.at(i, j).is_zero()) {
                            coeff = m.at(i, j);
                            found = true;
                        }
                rebuilt = rebuilt + orbital * coeff;
            }
            return rebuilt == m;
        };
    } else {
        sys.in_subalgebra = make_span_membership(sys.ring, n, sys.subalgebra);
    }
    return sys;
}

Matrix eij_apply(const BlockIndex& idx, int bi, int bj, const Matrix& a) {
    int li = idx.block_size(bi), lj = idx.block_size(bj);
    if (a.rows() != li || a.cols() != lj) throw Error("block trace input shape mismatch");
    Matrix out(a.ring(), li, lj);
    int rho = idx.rho(bi, bj);
    if (rho <= 0) return out;
    for (int p = 1; p <= rho; ++p) {
        Scalar coeff = Scalar::zero(a.ring());
        for (int u = 1; u <= rho - p + 1; ++u)
            coeff = coeff + a.at1(li - u + 1, rho - p + 2 - u);
        if (coeff.is_zero()) continue;
        for (int u = 1; u <= p; ++u)
            out.at1(p - u + 1, lj - u + 1) = out.at1(p - u + 1, lj - u + 1) + coeff;
    }
    return out;
}

FrobeniusSystem jordan_trace_system(const JordanType& jt) {
    BlockIndex idx(jt);
    FrobeniusSystem sys;
    sys.ring = jt.ring();
    sys.n = idx.n();
    sys.origin = "jordan-trace";
    int n = sys.n;

    // Locate the block containing a 1-based global row index.
    auto block_of = [&](int pos1) {
        for (int b = 0; b < idx.num_blocks(); ++b) {
            int lo = idx.tau(idx.block_group(b)) + idx.block_start(b);
            if (pos1 > lo && pos1 <= lo + idx.block_size(b)) return b;
        }
        throw Error("position outside all blocks");
    };

    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            int bi = block_of(a), bj = block_of(b);
            if (idx.block_group(bi) != idx.block_group(bj)) {
                sys.trace_table.push_back(Matrix(sys.ring, n, n));
                continue;
            }
            int u = a - idx.tau(idx.block_group(bi)) - idx.block_start(bi);
            int v = b - idx.tau(idx.block_group(bj)) - idx.block_start(bj);
            Matrix unit(sys.ring, idx.block_size(bi), idx.block_size(bj));
            unit.at1(u, v) = Scalar::one(sys.ring);
            sys.trace_table.push_back(embed_phi(jt, idx, bi, bj, eij_apply(idx, bi, bj, unit)));
        }

    for (int i = 1; i <= n; ++i) {
        Matrix xi(sys.ring, n, n), yi(sys.ring, n, n);
        for (int q = 0; q < idx.num_groups(); ++q) {
            xi.at1(i, idx.tau(q) + 1) = Scalar::one(sys.ring);
            yi.at1(idx.tau(q) + idx.lambda_max(q), i) = Scalar::one(sys.ring);
        }
        sys.x.push_back(std::move(xi));
        sys.y.push_back(std::move(yi));
    }

    std::vector<BasisElement> basis = structured_basis(jt);
    for (const auto& e : basis) sys.subalgebra.push_back(materialize(jt, idx, e));
    auto jt_copy = std::make_shared<JordanType>(jt);
    auto idx_copy = std::make_shared<BlockIndex>(idx);
    auto basis_copy = std::make_shared<std::vector<BasisElement>>(std::move(basis));
    sys.in_subalgebra = [jt_copy, idx_copy, basis_copy](const Matrix& m) {
        return decompose(*jt_copy, *idx_copy, *basis_copy, m).has_value();
    };
    return sys;
}

FrobeniusReport check_frobenius_system(const FrobeniusSystem& sys) {
    FrobeniusReport rep;
    int n = sys.n;

    rep.image = true;
    for (int a = 1; a <= n && rep.image; ++a)
        for (int b = 1; b <= n && rep.image; ++b)
            if (!sys.in_subalgebra(sys.trace_of_unit(a, b))) {
                rep.image = false;
                rep.counterexample = "E(e(" + std::to_string(a) + "," + std::to_string(b) +
                                     ")) escapes the subalgebra span";
            }

    rep.bimodule = true;
    for (const auto& bm : sys.subalgebra) {
        if (!rep.bimodule) break;
        for (int a = 1; a <= n && rep.bimodule; ++a)
            for (int b = 1; b <= n && rep.bimodule; ++b) {
                Matrix unit = Matrix::unit(sys.ring, n, n, a, b);
                const Matrix& eu = sys.trace_of_unit(a, b);
                if (!(sys.apply(bm * unit) == bm * eu && sys.apply(unit * bm) == eu * bm)) {
                    rep.bimodule = false;
                    rep.counterexample = "bimodule law fails at unit e(" + std::to_string(a) + "," +
                                         std::to_string(b) + ")";
                }
            }
    }

    rep.dual_left = rep.dual_right = true;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            Matrix unit = Matrix::unit(sys.ring, n, n, a, b);
            Matrix left(sys.ring, n, n), right(sys.ring, n, n);
            for (size_t i = 0; i < sys.x.size(); ++i) {
                left = left + sys.x[i] * sys.apply(sys.y[i] * unit);
                right = right + sys.apply(unit * sys.x[i]) * sys.y[i];
            }
            if (rep.dual_left && !(left == unit)) {
                rep.dual_left = false;
                rep.counterexample = "left dual identity fails at e(" + std::to_string(a) + "," +
                                     std::to_string(b) + ")";
            }
            if (rep.dual_right && !(right == unit)) {
                rep.dual_right = false;
                if (rep.counterexample.empty())
                    rep.counterexample = "right dual identity fails at e(" + std::to_string(a) + "," +
                                         std::to_string(b) + ")";
            }
            if (!rep.dual_left && !rep.dual_right) break;
        }
    return rep;
}

Matrix separability_element(const JordanType& jt) {
    BlockIndex idx(jt);
    const GroupIndex& g0 = idx.group(0);
    Matrix d_tilde(jt.ring(), g0.n, g0.n);
    int off = 0;
    for (int b = 0; b < g0.num_blocks; ++b) {
        int lambda = idx.block_size(g0.first_block + b);
        // All-ones semicirculant [1,1,...,1] on the block diagonal.
        for (int i = 1; i <= lambda; ++i)
            for (int j = i; j <= lambda; ++j)
                d_tilde.at1(off + i, off + j) = Scalar::one(jt.ring());
        off += lambda;
    }
    return embed_psi(jt, idx, 0, d_tilde);
}

SplitResult split_solver(const JordanType& jt) {
    if (!jt.ring().is_field()) throw Error("split witness search needs a field");
    SplitResult res;
    res.predicate = true;
    for (const auto& g : jt.groups())
        res.predicate = res.predicate && g.blocks.size() == 1 && g.blocks.front().size == 1;

    BlockIndex idx(jt);
    FrobeniusSystem sys = jordan_trace_system(jt);
    int n = idx.n(), nn = n * n;
    std::vector<Matrix> basis_mats;
    for (const auto& e : structured_basis(jt)) basis_mats.push_back(materialize(jt, idx, e));

    // Unknown z, row-major: commutation with every basis element plus
    // E(z) = I, all exact linear conditions.
    int rows = nn * (static_cast<int>(basis_mats.size()) + 1);
    Matrix sysm(jt.ring(), rows, nn);
    Matrix rhs(jt.ring(), rows, 1);
    int r0 = 0;
    for (const auto& bm : basis_mats) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int r = r0 + i * n + j;
                for (int k = 0; k < n; ++k) {
                    sysm.at(r, i * n + k) = sysm.at(r, i * n + k) + bm.at(k, j);   // (z b)_{ij}
                    sysm.at(r, k * n + j) = sysm.at(r, k * n + j) - bm.at(i, k);   // (b z)_{ij}
                }
            }
        r0 += nn;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int r = r0 + i * n + j;
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b)
                    sysm.at(r, (a - 1) * n + (b - 1)) = sys.trace_of_unit(a, b).at(i, j);
            if (i == j) rhs.at(r, 0) = Scalar::one(jt.ring());
        }

    if (auto sol = solve_linear(sysm, rhs)) {
        Matrix z(jt.ring(), n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) z.at(i, j) = sol->at(i * n + j, 0);
        res.witness = std::move(z);
    }
    if (res.witness.has_value() != res.predicate)
        throw Error("split witness search disagrees with the closed predicate");
    return res;
}

bool semisimple_predicate(const JordanType& jt) {
    if (!jt.ring().is_field()) throw Error("semisimplicity test needs a field");
    for (const auto& g : jt.groups())
        if (g.blocks.size() != 1 || g.blocks.front().size != 1) return false;
    return true;
}

}  // namespace cent
