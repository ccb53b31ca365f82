#pragma once

#include "starcong/similarity.hpp"

namespace starcong {

/// A^{-*} A for nonsingular A.
Matrix cosquare(const Matrix& A);

/// Whether the Frobenius block of p^t admits a *cosquare root: p != x,
/// p self-adjoint, and under the identity involution p != x + (-1)^{n+1}.
bool admits_star_root(const IrreduciblePower& b);

/// Banded Toeplitz *cosquare root of a Frobenius block. The realized matrix
/// has entries a_{j-i} on and above the diagonal and conj(a_{i-j-1}) below.
struct ToeplitzStarRoot {
    std::vector<Scalar> band;  // a_0 .. a_{n-1}
    IrreduciblePower block;

    Matrix realize() const;
};

/// Constructs the canonical *cosquare root of frobenius_block(b): leading
/// band entries zero, the pivot entry from the parity case split, the rest
/// solved left-to-right from the defining identity. Verified before return.
ToeplitzStarRoot star_root_frobenius(const IrreduciblePower& b);

/// Realized matrix of star_root_frobenius.
Matrix star_root_matrix(const IrreduciblePower& b);

}  // namespace starcong
