#include "starcong/cosquare.hpp"

namespace starcong {

Matrix cosquare(const Matrix& A) {
    if (!A.square()) throw input_error("cosquare of a non-square matrix");
    if (!nonsingular(A)) throw input_error("cosquare of a singular matrix");
    return inverse(A.star()) * A;
}

namespace {

// p = x - z with z^(n-1) = 1
bool is_root_of_unity_shift(const Poly& p, std::size_t n) {
    if (p.degree() != 1) return false;
    Scalar z = -p.coeff(0);
    if (z.is_zero()) return false;
    if (n == 1) return z.is_one();  // z^0 = 1 always; keep the convention exact
    return z.pow(static_cast<std::int64_t>(n - 1)).is_one();
}

}  // namespace

bool admits_star_root(const IrreduciblePower& b) {
    const Poly& p = b.p;
    const Field& f = p.field();
    if (p == Poly::x(f)) return false;
    if (p != p.vee()) return false;
    if (f.identity_involution()) {
        std::size_t n = b.n();
        // x + (-1)^{n+1}
        Poly excluded = n % 2 == 0 ? Poly::x_minus(Scalar::one(f))
                                   : Poly::x(f) + Poly::constant(Scalar::one(f));
        if (p == excluded) return false;
    }
    return true;
}

Matrix ToeplitzStarRoot::realize() const {
    std::size_t n = band.size();
    const Field& f = block.p.field();
    Matrix A(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            A.set(i, j, j >= i ? band[j - i] : band[i - j - 1].conj());
    return A;
}

ToeplitzStarRoot star_root_frobenius(const IrreduciblePower& b) {
    if (!admits_star_root(b))
        throw input_error("Frobenius block does not admit a *cosquare root");
    const Field& f = b.p.field();
    std::size_t n = b.n();
    Poly q = b.power();  // x^n + c_1 x^{n-1} + ... + c_n
    std::size_t m = (n - 1) / 2;

    std::vector<Scalar> a(n, Scalar::zero(f));
    if (n % 2 == 0 && !is_root_of_unity_shift(b.p, n)) {
        a[m] = Scalar::one(f);
    } else if (n % 2 == 1 && b.p != Poly::x(f) + Poly::constant(Scalar::one(f))) {
        a[m] = b.p.eval(Scalar::from_int(f, -1)).pow(b.t);
    } else {
        if (f.identity_involution())
            throw internal_error("fallthrough pivot case under the identity involution");
        Scalar w = sample_nonfixed(f);
        a[m] = w - w.conj();
    }

    // remaining band entries from the last-column identity, highest row first:
    // a_{n-1-i} = -( sum_{j<=i} conj(a_{i-j}) q_j + sum_{j>i} a_{j-i-1} q_j )
    for (std::size_t k = m + 1; k < n; ++k) {
        std::size_t i = n - 1 - k;
        Scalar acc = Scalar::zero(f);
        for (std::size_t j = 0; j <= i; ++j) acc = acc + a[i - j].conj() * q.coeff(j);
        for (std::size_t j = i + 1; j < n; ++j) acc = acc + a[j - i - 1] * q.coeff(j);
        a[k] = -acc;
    }

    ToeplitzStarRoot root{std::move(a), b};
    Matrix A = root.realize();
    Matrix F = frobenius_block(b);
    if (A != A.star() * F) throw internal_error("star root identity A = A* F failed");
    if (A != F.star() * A * F) throw internal_error("star root identity A = F* A F failed");
    if (!nonsingular(A)) throw internal_error("star root is singular");
    if (cosquare(A) != F) throw internal_error("star root cosquare mismatch");
    return root;
}

Matrix star_root_matrix(const IrreduciblePower& b) { return star_root_frobenius(b).realize(); }

}  // namespace starcong
