#include "starcong/matrix.hpp"

#include <algorithm>

namespace starcong {

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
    return m;
}

Matrix Matrix::zero(const Field& f, std::size_t rows, std::size_t cols) {
    return Matrix(f, rows, cols);
}

Matrix Matrix::from_int_rows(const Field& f,
                             const std::vector<std::vector<std::int64_t>>& rows) {
    if (rows.empty()) return Matrix(f, 0, 0);
    Matrix m(f, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw input_error("ragged matrix literal");
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.set(i, j, Scalar::from_int(f, rows[i][j]));
    }
    return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty()) return Matrix(f, 0, 0);
    Matrix m(f, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw input_error("ragged matrix literal");
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::column(const std::vector<Scalar>& v) {
    if (v.empty()) throw input_error("empty column");
    Matrix m(v[0].field(), v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.set(i, 0, v[i]);
    return m;
}

Matrix Matrix::reversal(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, n - 1 - i, Scalar::one(f));
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
        throw input_error("shape or field mismatch in matrix addition");
    Matrix r(field_, rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r(field_, rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_ || field_ != o.field_)
        throw input_error("shape or field mismatch in matrix product");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.a_[i * o.cols_ + j] = r.a_[i * o.cols_ + j] + aik * o.at(k, j);
        }
    return r;
}

Matrix Matrix::operator*(const Scalar& s) const {
    Matrix r(field_, rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

Matrix Matrix::conj() const {
    Matrix r(field_, rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k].conj();
    return r;
}

bool Matrix::is_zero() const {
    for (const Scalar& s : a_)
        if (!s.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i == j && !at(i, j).is_one()) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

bool Matrix::is_toeplitz() const {
    for (std::size_t i = 0; i + 1 < rows_; ++i)
        for (std::size_t j = 0; j + 1 < cols_; ++j)
            if (at(i, j) != at(i + 1, j + 1)) return false;
    return true;
}

Matrix Matrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix r(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) r.set(i, j, at(r0 + i, c0 + j));
    return r;
}

void Matrix::paste(std::size_t r0, std::size_t c0, const Matrix& block) {
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j) set(r0 + i, c0 + j, block.at(i, j));
}

Matrix Matrix::direct_sum(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) throw input_error("empty direct sum");
    std::size_t n = 0, m = 0;
    for (const Matrix& b : blocks) {
        n += b.rows();
        m += b.cols();
    }
    Matrix r(blocks[0].field(), n, m);
    std::size_t i = 0, j = 0;
    for (const Matrix& b : blocks) {
        r.paste(i, j, b);
        i += b.rows();
        j += b.cols();
    }
    return r;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw input_error("hstack row mismatch");
    Matrix r(a.field(), a.rows(), a.cols() + b.cols());
    r.paste(0, 0, a);
    r.paste(0, a.cols(), b);
    return r;
}

Matrix Matrix::pow(std::int64_t e) const {
    if (!square()) throw input_error("matrix power requires a square matrix");
    if (e < 0) return inverse(*this).pow(-e);
    Matrix acc = identity(field_, rows_);
    Matrix base = *this;
    std::uint64_t k = static_cast<std::uint64_t>(e);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::vector<Scalar> Matrix::col(std::size_t j) const {
    std::vector<Scalar> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
    return v;
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
    std::vector<Scalar> v;
    v.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v.push_back(at(i, j));
    return v;
}

namespace {

// row echelon elimination; returns rank, optionally accumulating the same row
// operations on a companion matrix (for inverses/solves). Pivot choice: first
// nonzero entry in column order.
std::size_t echelon(Matrix& m, Matrix* companion, Scalar* det_out) {
    const Field& f = m.field();
    Scalar d = Scalar::one(f);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m.at(piv, c).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                Scalar tmp = m.at(r, j);
                m.set(r, j, m.at(piv, j));
                m.set(piv, j, tmp);
            }
            if (companion)
                for (std::size_t j = 0; j < companion->cols(); ++j) {
                    Scalar tmp = companion->at(r, j);
                    companion->set(r, j, companion->at(piv, j));
                    companion->set(piv, j, tmp);
                }
            d = -d;
        }
        Scalar inv = m.at(r, c).inverse();
        d = d * m.at(r, c);
        for (std::size_t j = 0; j < m.cols(); ++j) m.set(r, j, m.at(r, j) * inv);
        if (companion)
            for (std::size_t j = 0; j < companion->cols(); ++j)
                companion->set(r, j, companion->at(r, j) * inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar factor = m.at(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.set(i, j, m.at(i, j) - factor * m.at(r, j));
            if (companion)
                for (std::size_t j = 0; j < companion->cols(); ++j)
                    companion->set(i, j, companion->at(i, j) - factor * companion->at(r, j));
        }
        ++r;
    }
    if (det_out) *det_out = d;
    return r;
}

}  // namespace

Scalar det(const Matrix& m) {
    if (!m.square()) throw input_error("determinant of a non-square matrix");
    if (m.empty()) return Scalar::one(m.field());
    Matrix w = m;
    Scalar d = Scalar::one(m.field());
    std::size_t r = echelon(w, nullptr, &d);
    if (r < m.rows()) return Scalar::zero(m.field());
    return d;
}

std::size_t rank(const Matrix& m) {
    if (m.empty()) return 0;
    Matrix w = m;
    return echelon(w, nullptr, nullptr);
}

bool nonsingular(const Matrix& m) { return m.square() && rank(m) == m.rows(); }

Matrix inverse(const Matrix& m) {
    if (!m.square()) throw input_error("inverse of a non-square matrix");
    Matrix w = m;
    Matrix inv = Matrix::identity(m.field(), m.rows());
    std::size_t r = echelon(w, &inv, nullptr);
    if (r < m.rows()) throw input_error("matrix is singular");
    return inv;
}

std::optional<std::vector<Scalar>> solve(const Matrix& A, const std::vector<Scalar>& b) {
    if (b.size() != A.rows()) throw input_error("solve dimension mismatch");
    Matrix aug(A.field(), A.rows(), A.cols() + 1);
    aug.paste(0, 0, A);
    for (std::size_t i = 0; i < A.rows(); ++i) aug.set(i, A.cols(), b[i]);
    echelon(aug, nullptr, nullptr);
    std::vector<Scalar> x(A.cols(), Scalar::zero(A.field()));
    for (std::size_t i = 0; i < A.rows(); ++i) {
        std::size_t lead = A.cols() + 1;
        for (std::size_t j = 0; j <= A.cols(); ++j)
            if (!aug.at(i, j).is_zero()) {
                lead = j;
                break;
            }
        if (lead == A.cols()) return std::nullopt;  // 0 = nonzero
        if (lead < A.cols()) x[lead] = aug.at(i, A.cols());
    }
    return x;
}

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& A) {
    const Field& f = A.field();
    Matrix w = A;
    echelon(w, nullptr, nullptr);
    std::vector<std::ptrdiff_t> pivot_of_col(A.cols(), -1);
    std::size_t r = 0;
    for (std::size_t i = 0; i < w.rows(); ++i) {
        std::size_t lead = A.cols();
        for (std::size_t j = 0; j < A.cols(); ++j)
            if (!w.at(i, j).is_zero()) {
                lead = j;
                break;
            }
        if (lead < A.cols()) {
            pivot_of_col[lead] = static_cast<std::ptrdiff_t>(i);
            ++r;
        }
    }
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free_col = 0; free_col < A.cols(); ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        std::vector<Scalar> v(A.cols(), Scalar::zero(f));
        v[free_col] = Scalar::one(f);
        for (std::size_t j = 0; j < A.cols(); ++j) {
            if (pivot_of_col[j] < 0) continue;
            v[j] = -w.at(static_cast<std::size_t>(pivot_of_col[j]), free_col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Matrix> stein_solution_space(const Matrix& F, const Matrix& G) {
    if (!F.square() || !G.square()) throw input_error("stein operands must be square");
    const Field& f = F.field();
    std::size_t n = F.rows(), m = G.rows();
    Matrix Fs = F.star();
    // vec(X) - vec(F* X G) = 0 with vec column-major: coefficient of X[k][l]
    // in (F* X G)[i][j] is F*[i][k] * G[l][j]
    Matrix sys(f, n * m, n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            std::size_t row = j * n + i;
            sys.set(row, row, Scalar::one(f));
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < m; ++l) {
                    std::size_t colidx = l * n + k;
                    Scalar v = sys.at(row, colidx) - Fs.at(i, k) * G.at(l, j);
                    sys.set(row, colidx, v);
                }
        }
    std::vector<Matrix> out;
    for (const auto& v : kernel_basis(sys)) {
        Matrix X(f, n, m);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < m; ++l) X.set(k, l, v[l * n + k]);
        out.push_back(std::move(X));
    }
    return out;
}

std::vector<Scalar> mat_vec(const Matrix& A, const std::vector<Scalar>& v) {
    if (v.size() != A.cols()) throw input_error("mat_vec dimension mismatch");
    std::vector<Scalar> r(A.rows(), Scalar::zero(A.field()));
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            if (!A.at(i, j).is_zero()) r[i] = r[i] + A.at(i, j) * v[j];
    return r;
}

Matrix eval_poly_at(const Poly& f, const Matrix& M) {
    if (!M.square()) throw input_error("polynomial of a non-square matrix");
    Matrix acc = Matrix::zero(M.field(), M.rows(), M.rows());
    for (std::size_t k = f.coeffs().size(); k-- > 0;) {
        acc = acc * M;
        for (std::size_t i = 0; i < M.rows(); ++i)
            acc.set(i, i, acc.at(i, i) + f[k]);
    }
    return acc;
}

Poly Matrix::charpoly() const {
    // Faddeev-LeVerrier needs division by integers (char 0 only), so use the
    // generic route: expand det(xI - M) by elimination over F(x) is messy;
    // instead build from the Krylov minimal polynomials via column reduction.
    // For the sizes involved, the Hessenberg determinant recursion is exact
    // and simple.
    if (!square()) throw input_error("charpoly of a non-square matrix");
    const Field& f = field_;
    std::size_t n = rows_;
    // reduce to Hessenberg form by similarity (exact)
    Matrix H = *this;
    for (std::size_t c = 0; c + 2 <= n; ++c) {
        std::size_t piv = c + 1;
        while (piv < n && H.at(piv, c).is_zero()) ++piv;
        if (piv == n) continue;
        if (piv != c + 1) {
            for (std::size_t j = 0; j < n; ++j) {
                Scalar t = H.at(c + 1, j);
                H.set(c + 1, j, H.at(piv, j));
                H.set(piv, j, t);
            }
            for (std::size_t i = 0; i < n; ++i) {
                Scalar t = H.at(i, c + 1);
                H.set(i, c + 1, H.at(i, piv));
                H.set(i, piv, t);
            }
        }
        Scalar inv = H.at(c + 1, c).inverse();
        for (std::size_t i = c + 2; i < n; ++i) {
            Scalar factor = H.at(i, c) * inv;
            if (factor.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) H.set(i, j, H.at(i, j) - factor * H.at(c + 1, j));
            for (std::size_t j = 0; j < n; ++j) H.set(j, c + 1, H.at(j, c + 1) + factor * H.at(j, i));
        }
    }
    // char polys of leading principal Hessenberg minors
    std::vector<Poly> p(n + 1, Poly::zero(f));
    p[0] = Poly::constant(Scalar::one(f));
    for (std::size_t k = 1; k <= n; ++k) {
        Poly term = (Poly::x(f) - Poly::constant(H.at(k - 1, k - 1))) * p[k - 1];
        Scalar prod = Scalar::one(f);
        for (std::size_t m = 1; m < k; ++m) {
            prod = prod * H.at(k - m, k - m - 1);
            Poly sub = Poly::constant(H.at(k - m - 1, k - 1) * prod) * p[k - m - 1];
            term = term - sub;
        }
        p[k] = term;
    }
    return p[n];
}

Poly minimal_poly(const Matrix& M) {
    if (!M.square()) throw input_error("minimal polynomial of a non-square matrix");
    const Field& f = M.field();
    std::size_t n = M.rows();
    if (n == 0) return Poly::constant(Scalar::one(f));
    Poly m = Poly::constant(Scalar::one(f));
    for (std::size_t start = 0; start < n; ++start) {
        // minimal polynomial of e_start under M, then lcm
        std::vector<Scalar> v(n, Scalar::zero(f));
        v[start] = Scalar::one(f);
        std::vector<std::vector<Scalar>> krylov{v};
        for (;;) {
            std::vector<Scalar> next = mat_vec(M, krylov.back());
            // test dependency: solve [krylov] c = next
            Matrix K(f, n, krylov.size());
            for (std::size_t j = 0; j < krylov.size(); ++j)
                for (std::size_t i = 0; i < n; ++i) K.set(i, j, krylov[j][i]);
            auto sol = solve(K, next);
            if (sol) {
                std::vector<Scalar> c = *sol;
                c.resize(krylov.size(), Scalar::zero(f));
                std::vector<Scalar> pc(krylov.size() + 1, Scalar::zero(f));
                for (std::size_t k = 0; k < krylov.size(); ++k) pc[k] = -c[k];
                pc[krylov.size()] = Scalar::one(f);
                Poly pv(f, std::move(pc));
                m = (m * pv) / gcd(m, pv);
                break;
            }
            krylov.push_back(std::move(next));
        }
        if (m.degree() == static_cast<int>(n)) break;
    }
    return m.monic();
}

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng) {
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rng.scalar(f));
    return m;
}

Matrix random_nonsingular(const Field& f, std::size_t n, Rng& rng) {
    Matrix s = Matrix::identity(f, n);
    if (n == 0) return s;
    std::size_t ops = 3 * n + 2;
    for (std::size_t k = 0; k < ops; ++k) {
        switch (rng.below(3)) {
            case 0: {  // transvection: row i += c * row j
                std::size_t i = rng.below(n), j = rng.below(n);
                if (i == j) break;
                Scalar c = rng.scalar(f);
                for (std::size_t col = 0; col < n; ++col)
                    s.set(i, col, s.at(i, col) + c * s.at(j, col));
                break;
            }
            case 1: {  // swap
                std::size_t i = rng.below(n), j = rng.below(n);
                for (std::size_t col = 0; col < n; ++col) {
                    Scalar t = s.at(i, col);
                    s.set(i, col, s.at(j, col));
                    s.set(j, col, t);
                }
                break;
            }
            default: {  // scale by a unit
                std::size_t i = rng.below(n);
                Scalar c = rng.nonzero_scalar(f);
                for (std::size_t col = 0; col < n; ++col) s.set(i, col, s.at(i, col) * c);
                break;
            }
        }
    }
    if (!nonsingular(s)) throw internal_error("random unimodular product became singular");
    return s;
}

Matrix matrix_mul_vec_as_col(const Matrix& A, const std::vector<Scalar>& v) {
    return Matrix::column(mat_vec(A, v));
}

}  // namespace starcong
