#pragma once

#include <vector>

#include "starcong/poly.hpp"

namespace starcong {

/// Dense exact matrix over a Field. Immutable in spirit: operations return
/// new values; set() exists for construction only.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(const Field& f, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& f, std::size_t n);
    static Matrix zero(const Field& f, std::size_t rows, std::size_t cols);
    static Matrix from_int_rows(const Field& f,
                                const std::vector<std::vector<std::int64_t>>& rows);
    static Matrix from_rows(const Field& f, const std::vector<std::vector<Scalar>>& rows);
    static Matrix column(const std::vector<Scalar>& v);
    /// n x n anti-identity (reversal) matrix.
    static Matrix reversal(const Field& f, std::size_t n);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, const Scalar& v) { a_[i * cols_ + j] = v; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const Scalar& s) const;
    Matrix operator-() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const;
    Matrix conj() const;
    /// Conjugate transpose.
    Matrix star() const { return conj().transpose(); }

    bool is_zero() const;
    bool is_identity() const;
    bool is_symmetric() const { return square() && *this == transpose(); }
    bool is_toeplitz() const;

    Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void paste(std::size_t r0, std::size_t c0, const Matrix& block);
    static Matrix direct_sum(const std::vector<Matrix>& blocks);
    static Matrix hstack(const Matrix& a, const Matrix& b);

    Matrix pow(std::int64_t e) const;  // negative exponents require nonsingular

    std::vector<Scalar> col(std::size_t j) const;
    std::vector<Scalar> row(std::size_t i) const;

    Poly charpoly() const;

  private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

Scalar det(const Matrix& m);
std::size_t rank(const Matrix& m);
bool nonsingular(const Matrix& m);
Matrix inverse(const Matrix& m);  // input_error if singular

/// One solution of A x = b, or empty optional if inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& A, const std::vector<Scalar>& b);
/// Basis of the right kernel {x : A x = 0}.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& A);

/// Basis of {X : X = F* X G}, computed from the vectorized linear system.
std::vector<Matrix> stein_solution_space(const Matrix& F, const Matrix& G);

Matrix matrix_mul_vec_as_col(const Matrix& A, const std::vector<Scalar>& v);
std::vector<Scalar> mat_vec(const Matrix& A, const std::vector<Scalar>& v);

/// Evaluate a polynomial at a square matrix.
Matrix eval_poly_at(const Poly& f, const Matrix& M);

/// Minimal polynomial (monic).
Poly minimal_poly(const Matrix& M);

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng);
/// Random nonsingular matrix assembled from elementary transvections,
/// permutations and unit scalings; entries stay small.
Matrix random_nonsingular(const Field& f, std::size_t n, Rng& rng);

}  // namespace starcong
