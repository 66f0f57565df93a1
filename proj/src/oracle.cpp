#include "cent/oracle.hpp"

namespace cent {

namespace {

Matrix stack_rows(RingSpec ring, int n, const std::vector<Matrix>& mats) {
    Matrix stack(ring, static_cast<int>(mats.size()), n * n);
    for (size_t k = 0; k < mats.size(); ++k) {
        if (mats[k].rows() != n || mats[k].cols() != n) throw Error("span matrices must be n x n");
        Matrix v = mats[k].vec_row();
        for (int c = 0; c < v.cols(); ++c) stack.at(static_cast<int>(k), c) = v.at(0, c);
    }
    return stack;
}

Matrix unvec(RingSpec ring, int n, const Matrix& row_or_col, bool row) {
    Matrix m(ring, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = row ? row_or_col.at(0, i * n + j) : row_or_col.at(i * n + j, 0);
    return m;
}

void require_trace_form_domain(const SpanBasis& basis) {
    if (!basis.ring.is_field()) throw Error("radical oracle needs a field");
    if (basis.ring.kind == RingKind::PrimeField && basis.ring.p <= static_cast<unsigned long>(basis.n))
        throw Error("trace-form radical needs characteristic 0 or p > n; got " + basis.ring.name() +
                    " with n = " + std::to_string(basis.n));
}

// Coordinates against the echelonized basis rows: read off the pivot
// entries, then insist the combination reproduces the vector.
std::vector<Scalar> coords_of(const Echelon& ech, const Matrix& m) {
    Matrix v = m.vec_row();
    std::vector<Scalar> coords;
    for (int r = 0; r < ech.rank; ++r) coords.push_back(v.at(0, ech.pivots[r]));
    for (int r = 0; r < ech.rank; ++r) {
        if (coords[r].is_zero()) continue;
        for (int c = 0; c < v.cols(); ++c) v.at(0, c) = v.at(0, c) - coords[r] * ech.rref.at(r, c);
    }
    if (!v.is_zero()) throw Error("matrix outside the span; the basis does not span an algebra");
    return coords;
}

}  // namespace

SpanBasis make_span(RingSpec ring, int n, const std::vector<Matrix>& mats) {
    if (!ring.is_field()) throw Error("span bases live over fields");
    SpanBasis out{ring, n, {}};
    if (mats.empty()) return out;
    Echelon e = echelon_form(stack_rows(ring, n, mats));
    for (int r = 0; r < e.rank; ++r) {
        Matrix row(ring, 1, n * n);
        for (int c = 0; c < n * n; ++c) row.at(0, c) = e.rref.at(r, c);
        out.mats.push_back(unvec(ring, n, row, true));
    }
    return out;
}

SpanBasis centralizer_nullspace(const Matrix& c) { return centralizer_nullspace_set({c}); }

SpanBasis centralizer_nullspace_set(const std::vector<Matrix>& cs) {
    if (cs.empty()) throw Error("empty matrix set");
    const RingSpec& ring = cs.front().ring();
    if (!ring.is_field()) throw Error("centralizer oracle needs a field");
    int n = cs.front().rows();
    for (const auto& c : cs)
        if (c.rows() != n || c.cols() != n || !(c.ring() == ring))
            throw Error("matrix set must share a square shape and ring");

    // Commutation operator K vec(a) = vec(c a - a c), stacked over the set.
    int nn = n * n;
    Matrix k(ring, nn * static_cast<int>(cs.size()), nn);
    int r0 = 0;
    for (const auto& c : cs) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int r = r0 + i * n + j;
                for (int l = 0; l < n; ++l) {
                    k.at(r, l * n + j) = k.at(r, l * n + j) + c.at(i, l);
                    k.at(r, i * n + l) = k.at(r, i * n + l) - c.at(l, j);
                }
            }
        r0 += nn;
    }
    std::vector<Matrix> mats;
    for (const auto& v : nullspace(k)) mats.push_back(unvec(ring, n, v, false));
    return make_span(ring, n, mats);
}

bool span_contains(const SpanBasis& a, const Matrix& m) {
    Matrix v = m.vec_row();
    for (int r = 0; r < a.dim(); ++r) {
        Matrix row = a.mats[r].vec_row();
        // Rows are echelonized; the pivot is their first nonzero entry.
        int pivot = -1;
        for (int c = 0; c < row.cols(); ++c)
            if (!row.at(0, c).is_zero()) { pivot = c; break; }
        const Scalar f = v.at(0, pivot);
        if (f.is_zero()) continue;
        for (int c = 0; c < v.cols(); ++c) v.at(0, c) = v.at(0, c) - f * row.at(0, c);
    }
    return v.is_zero();
}

bool span_equal(const SpanBasis& a, const SpanBasis& b) {
    if (!(a.ring == b.ring) || a.n != b.n) throw Error("span comparison across ambient spaces");
    if (a.dim() != b.dim()) return false;
    // Mutual membership, one multi-column solve per direction.
    auto contained = [&](const SpanBasis& span, const SpanBasis& members) {
        if (span.dim() == 0) return members.dim() == 0;
        Matrix lhs(span.ring, span.n * span.n, span.dim());
        for (int k = 0; k < span.dim(); ++k) {
            Matrix v = span.mats[k].vec_row();
            for (int c = 0; c < v.cols(); ++c) lhs.at(c, k) = v.at(0, c);
        }
        Matrix rhs(span.ring, span.n * span.n, members.dim());
        for (int k = 0; k < members.dim(); ++k) {
            Matrix v = members.mats[k].vec_row();
            for (int c = 0; c < v.cols(); ++c) rhs.at(c, k) = v.at(0, c);
        }
        return solve_linear(lhs, rhs).has_value();
    };
    return contained(a, b) && contained(b, a);
}

SpanBasis radical_oracle(const SpanBasis& basis) {
    require_trace_form_domain(basis);
    const int N = basis.dim();
    SpanBasis rad{basis.ring, basis.n, {}};
    if (N == 0) return rad;
    Echelon ech = echelon_form(stack_rows(basis.ring, basis.n, basis.mats));

    // Structure constants sc[i][j] = coordinates of B_i B_j.
    std::vector<std::vector<std::vector<Scalar>>> sc(N, std::vector<std::vector<Scalar>>(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            sc[i][j] = coords_of(ech, basis.mats[i] * basis.mats[j]);

    // Regular-representation traces: t_m = tr(L_{B_m}), and the trace
    // form tr(L_{B_i} L_{B_j}) = tr(L_{B_i B_j}) expanded along sc.
    std::vector<Scalar> t(N, Scalar::zero(basis.ring));
    for (int m = 0; m < N; ++m)
        for (int k = 0; k < N; ++k) t[m] = t[m] + sc[m][k][k];
    Matrix gram(basis.ring, N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            Scalar s = Scalar::zero(basis.ring);
            for (int m = 0; m < N; ++m)
                if (!sc[i][j][m].is_zero()) s = s + sc[i][j][m] * t[m];
            gram.at(i, j) = s;
        }

    std::vector<Matrix> rad_mats;
    for (const auto& v : nullspace(gram)) {
        Matrix m(basis.ring, basis.n, basis.n);
        for (int k = 0; k < N; ++k)
            if (!v.at(k, 0).is_zero()) m = m + basis.mats[k] * v.at(k, 0);
        rad_mats.push_back(std::move(m));
    }
    rad = make_span(basis.ring, basis.n, rad_mats);

    // Nilpotency: powers of the span must reach zero within n steps.
    SpanBasis power = rad;
    for (int step = 0; power.dim() > 0; ++step) {
        if (step > basis.n) throw Error("trace-form radical is not nilpotent; oracle invariant broken");
        std::vector<Matrix> next;
        for (const auto& r : power.mats)
            for (const auto& s : rad.mats) next.push_back(r * s);
        power = make_span(basis.ring, basis.n, next);
    }
    return rad;
}

int simple_count_oracle(const SpanBasis& basis) {
    SpanBasis rad = radical_oracle(basis);
    const int N = basis.dim(), M = rad.dim();
    if (N == 0) return 0;
    Echelon ech = echelon_form(stack_rows(basis.ring, basis.n, basis.mats));

    // Radical in coordinates, echelonized; its pivots mark the
    // directions to quotient away.
    std::vector<int> rad_pivots;
    Matrix rad_coords(basis.ring, std::max(M, 1), N);
    if (M > 0) {
        for (int r = 0; r < M; ++r) {
            auto coords = coords_of(ech, rad.mats[r]);
            for (int c = 0; c < N; ++c) rad_coords.at(r, c) = coords[c];
        }
        Echelon re = echelon_form(rad_coords);
        rad_coords = re.rref;
        rad_pivots = re.pivots;
    }
    std::vector<bool> is_rad_pivot(N, false);
    for (int c : rad_pivots) is_rad_pivot[c] = true;

    auto reduce_mod_rad = [&](std::vector<Scalar> v) {
        for (size_t r = 0; r < rad_pivots.size(); ++r) {
            const Scalar f = v[rad_pivots[r]];
            if (f.is_zero()) continue;
            for (int c = 0; c < N; ++c) v[c] = v[c] - f * rad_coords.at(static_cast<int>(r), c);
        }
        return v;
    };

    // Center of basis/rad: solve [z, B_j] in rad for all j, i.e. the
    // reduced commutator coordinates vanish; then subtract the radical
    // itself, which always satisfies the condition.
    std::vector<std::vector<std::vector<Scalar>>> sc(N, std::vector<std::vector<Scalar>>(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            sc[i][j] = coords_of(ech, basis.mats[i] * basis.mats[j]);

    Matrix sys(basis.ring, N * N, N);
    for (int j = 0; j < N; ++j) {
        // Row block j: coordinates of [z, B_j] reduced mod radical.
        for (int q = 0; q < N; ++q) {
            std::vector<Scalar> comm(N, Scalar::zero(basis.ring));
            for (int c = 0; c < N; ++c) comm[c] = sc[q][j][c] - sc[j][q][c];
            comm = reduce_mod_rad(std::move(comm));
            for (int c = 0; c < N; ++c)
                if (!is_rad_pivot[c]) sys.at(j * N + c, q) = comm[c];
        }
    }
    int central_dim = static_cast<int>(nullspace(sys).size());
    return central_dim - M;
}

}  // namespace cent
