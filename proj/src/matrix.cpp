#include "cent/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace cent {

Matrix Matrix::identity(RingSpec ring, int n) {
    Matrix m(ring, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(ring);
    return m;
}

Matrix Matrix::unit(RingSpec ring, int rows, int cols, int i1, int j1) {
    if (i1 < 1 || i1 > rows || j1 < 1 || j1 > cols)
        throw Error("matrix unit index out of range");
    Matrix m(ring, rows, cols);
    m.at1(i1, j1) = Scalar::one(ring);
    return m;
}

void Matrix::require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
    if (!(ring_ == o.ring_)) throw Error("matrix ring mismatch");
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_same_shape(o);
    Matrix r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_same_shape(o);
    Matrix r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
    if (!(ring_ == o.ring_)) throw Error("matrix ring mismatch");
    Matrix r(ring_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& x = at(i, k);
            if (x.is_zero()) continue;  // basis matrices are sparse, skip early
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar& y = o.at(k, j);
                if (y.is_zero()) continue;
                r.at(i, j) = r.at(i, j) + x * y;
            }
        }
    return r;
}

Matrix Matrix::operator*(const Scalar& s) const {
    Matrix r = *this;
    for (auto& e : r.a_) e = e * s;
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (auto& e : r.a_) e = -e;
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Matrix Matrix::transpose() const {
    Matrix r(ring_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::pow(int k) const {
    if (rows_ != cols_) throw Error("pow of non-square matrix");
    if (k < 0) throw Error("negative matrix power");
    Matrix r = identity(ring_, rows_);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

Scalar Matrix::trace() const {
    if (rows_ != cols_) throw Error("trace of non-square matrix");
    Scalar t = Scalar::zero(ring_);
    for (int i = 0; i < rows_; ++i) t = t + at(i, i);
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

Matrix Matrix::to_ring(RingSpec target) const {
    Matrix r(target, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).to_ring(target);
    return r;
}

Matrix Matrix::vec_row() const {
    Matrix r(ring_, 1, rows_ * cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(0, i * cols_ + j) = at(i, j);
    return r;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.at(i, j).str();
    }
    return os << "]";
}

Echelon echelon_form(const Matrix& a) {
    if (!a.ring().is_field()) throw Error("echelon form requires a field, got " + a.ring().name());
    Echelon e;
    e.rref = a;
    Matrix& m = e.rref;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(piv, j));
        Scalar inv = m.at(row, col).inverse();
        for (int j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col);
            for (int j = col; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.rank = row;
    return e;
}

int rank_of(const Matrix& a) { return echelon_form(a).rank; }

std::vector<Matrix> nullspace(const Matrix& a) {
    Echelon e = echelon_form(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int c : e.pivots) is_pivot[c] = true;

    // One vector per free column, then re-echelonize the stack so the
    // returned basis is canonical.
    Matrix stack(a.ring(), a.cols() - e.rank, a.cols());
    int r = 0;
    for (int free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        stack.at(r, free) = Scalar::one(a.ring());
        for (int i = 0; i < e.rank; ++i)
            stack.at(r, e.pivots[i]) = -e.rref.at(i, free);
        ++r;
    }
    Echelon canon = echelon_form(stack);
    std::vector<Matrix> basis;
    for (int i = 0; i < canon.rank; ++i) {
        Matrix v(a.ring(), a.cols(), 1);
        for (int j = 0; j < a.cols(); ++j) v.at(j, 0) = canon.rref.at(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& rhs) {
    if (a.rows() != rhs.rows()) throw Error("solve: rhs row count mismatch");
    if (!(a.ring() == rhs.ring())) throw Error("solve: ring mismatch");
    Matrix aug(a.ring(), a.rows(), a.cols() + rhs.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        for (int j = 0; j < rhs.cols(); ++j) aug.at(i, a.cols() + j) = rhs.at(i, j);
    }
    Echelon e = echelon_form(aug);
    for (int c : e.pivots)
        if (c >= a.cols()) return std::nullopt;  // pivot in the rhs block: inconsistent
    Matrix x(a.ring(), a.cols(), rhs.cols());
    for (size_t i = 0; i < e.pivots.size(); ++i)
        for (int j = 0; j < rhs.cols(); ++j)
            x.at(e.pivots[i], j) = e.rref.at(static_cast<int>(i), a.cols() + j);
    return x;
}

std::vector<Scalar> charpoly(const Matrix& a) {
    if (a.rows() != a.cols()) throw Error("charpoly of non-square matrix");
    if (a.ring().kind == RingKind::PrimeField)
        throw Error("charpoly over GF(p) unsupported; eigenvalue search is exhaustive over residues");
    RingSpec q = RingSpec::rationals();
    Matrix aq = a.to_ring(q);
    int n = a.rows();

    // Faddeev-LeVerrier: M_0 = 0, c_n = 1, and for k = 1..n
    //   M_k = A M_{k-1} + c_{n-k+1} I,   c_{n-k} = -tr(A M_k) / k.
    // Divisions by k are exact over Q.
    std::vector<Scalar> c(n + 1, Scalar::zero(q));
    c[n] = Scalar::one(q);
    Matrix m(q, n, n);
    for (int k = 1; k <= n; ++k) {
        m = aq * m + Matrix::identity(q, n) * c[n - k + 1];
        c[n - k] = -((aq * m).trace() / Scalar::of_int(q, k));
    }
    return c;
}

namespace {

std::vector<mpz_class> divisors_of(const mpz_class& v) {
    mpz_class n = abs(v);
    std::vector<mpz_class> divs;
    if (n == 0) return divs;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            mpz_class e = n / d;
            if (e != d) divs.push_back(e);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Scalar eval_poly(const std::vector<Scalar>& coeffs, const Scalar& x) {
    Scalar acc = Scalar::zero(x.ring());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Divides p(x) by (x - r); remainder must vanish.
std::vector<Scalar> deflate(const std::vector<Scalar>& coeffs, const Scalar& r) {
    int deg = static_cast<int>(coeffs.size()) - 1;
    std::vector<Scalar> out(deg, Scalar::zero(r.ring()));
    Scalar carry = coeffs[deg];
    for (int k = deg - 1; k >= 0; --k) {
        out[k] = carry;
        carry = coeffs[k] + carry * r;
    }
    if (!carry.is_zero()) throw Error("deflation by a non-root");
    return out;
}

}  // namespace

std::vector<std::pair<Scalar, int>> rational_roots(const std::vector<Scalar>& coeffs_in) {
    RingSpec q = RingSpec::rationals();
    std::vector<Scalar> coeffs = coeffs_in;
    if (coeffs.empty()) throw Error("empty polynomial");
    while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();

    std::vector<std::pair<Scalar, int>> roots;
    int zero_mult = 0;
    while (coeffs.size() > 1 && coeffs.front().is_zero()) {
        coeffs.erase(coeffs.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) roots.emplace_back(Scalar::zero(q), zero_mult);
    if (coeffs.size() <= 1) return roots;

    // Primitive integer polynomial: clear denominators, divide by content.
    mpz_class den_lcm = 1;
    for (const auto& c : coeffs) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.value().get_den().get_mpz_t());
    std::vector<mpz_class> z;
    for (const auto& c : coeffs) z.push_back(mpz_class(c.value() * den_lcm));
    mpz_class content = 0;
    for (const auto& v : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    for (auto& v : z) v /= content;

    auto num_divs = divisors_of(z.front());
    auto den_divs = divisors_of(z.back());
    std::vector<Scalar> candidates;
    for (const auto& p : num_divs)
        for (const auto& d : den_divs) {
            mpq_class r(p, d);
            r.canonicalize();
            candidates.emplace_back(q, r);
            candidates.emplace_back(q, -r);
        }
    std::sort(candidates.begin(), candidates.end(),
              [](const Scalar& a, const Scalar& b) { return a.value() < b.value(); });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const auto& cand : candidates) {
        int mult = 0;
        while (coeffs.size() > 1 && eval_poly(coeffs, cand).is_zero()) {
            coeffs = deflate(coeffs, cand);
            ++mult;
        }
        if (mult > 0) roots.emplace_back(cand, mult);
    }
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first.value() < b.first.value(); });
    return roots;
}

std::vector<std::pair<Scalar, int>> charpoly_rational_roots(const Matrix& a) {
    return rational_roots(charpoly(a));
}

}  // namespace cent
