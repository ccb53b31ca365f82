#pragma once

#include <optional>

#include "starcong/matrix.hpp"

namespace starcong {

/// A monic irreducible p and an exponent t, naming the Frobenius block of
/// p(x)^t (size n = t * deg p).
struct IrreduciblePower {
    Poly p;
    int t = 1;

    std::size_t n() const { return static_cast<std::size_t>(p.degree() * t); }
    Poly power() const { return p.pow(static_cast<std::uint64_t>(t)); }

    /// Order: deg p, then coefficient lex, then t descending.
    static int compare_rcf(const IrreduciblePower& a, const IrreduciblePower& b);
    /// Order: deg p, then coefficient lex, then t ascending.
    static int compare_canonical(const IrreduciblePower& a, const IrreduciblePower& b);
    bool operator==(const IrreduciblePower& o) const { return p == o.p && t == o.t; }
};

/// Companion matrix of p^t: subdiagonal ones, last column -c_n ... -c_1 where
/// p(x)^t = x^n + c_1 x^{n-1} + ... + c_n.
Matrix frobenius_block(const IrreduciblePower& b);

/// Companion matrix of an arbitrary monic polynomial in the same convention.
Matrix companion(const Poly& monic);

struct PrimaryRcf {
    std::vector<IrreduciblePower> blocks;  // sorted by compare_rcf
    Matrix T;                              // T^{-1} M T = direct sum of Frobenius blocks
};

/// Primary rational canonical form with accumulated similarity.
PrimaryRcf primary_rcf(const Matrix& M, Rng& rng);

/// Symmetric nonsingular S with F S = S F^T for F = frobenius_block(b):
/// the Hankel matrix with first row (c_{n-1}, ..., c_1, 1) and zeros below
/// the anti-diagonal. Always nonsingular (anti-diagonal of ones).
Matrix transposing_symmetrizer(const IrreduciblePower& b);

/// T with T^{-1} M T = N, or nullopt when M and N are not similar.
std::optional<Matrix> similar_transform(const Matrix& M, const Matrix& N, Rng& rng);

/// J_n(lambda): lambda on the diagonal, ones on the subdiagonal.
Matrix jordan_block(const Scalar& lambda, std::size_t n);

}  // namespace starcong
