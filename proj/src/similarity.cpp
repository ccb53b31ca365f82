#include "starcong/similarity.hpp"

#include <algorithm>

namespace starcong {

int IrreduciblePower::compare_rcf(const IrreduciblePower& a, const IrreduciblePower& b) {
    int c = Poly::compare(a.p, b.p);
    if (c) return c;
    return a.t > b.t ? -1 : (a.t == b.t ? 0 : 1);
}

int IrreduciblePower::compare_canonical(const IrreduciblePower& a, const IrreduciblePower& b) {
    int c = Poly::compare(a.p, b.p);
    if (c) return c;
    return a.t < b.t ? -1 : (a.t == b.t ? 0 : 1);
}

Matrix companion(const Poly& monic) {
    if (!monic.is_monic()) throw input_error("companion matrix needs a monic polynomial");
    std::size_t n = static_cast<std::size_t>(monic.degree());
    Matrix F(monic.field(), n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) F.set(i + 1, i, Scalar::one(monic.field()));
    for (std::size_t i = 0; i < n; ++i) F.set(i, n - 1, -monic.coeff(i));
    return F;
}

Matrix frobenius_block(const IrreduciblePower& b) { return companion(b.power()); }

Matrix jordan_block(const Scalar& lambda, std::size_t n) {
    Matrix J(lambda.field(), n, n);
    for (std::size_t i = 0; i < n; ++i) J.set(i, i, lambda);
    for (std::size_t i = 0; i + 1 < n; ++i) J.set(i + 1, i, Scalar::one(lambda.field()));
    return J;
}

Matrix transposing_symmetrizer(const IrreduciblePower& b) {
    Poly q = b.power();
    std::size_t n = b.n();
    const Field& f = q.field();
    Matrix S(f, n, n);
    // S[i][j] = c_{n-1-i-j} with c_0 = 1, c_k the coefficient of x^{n-k}
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) {
            std::size_t k = n - 1 - i - j;  // index into c_1..c_n, k = 0 means 1
            S.set(i, j, k == 0 ? Scalar::one(f) : q.coeff(n - k));
        }
    Matrix F = frobenius_block(b);
    if (F * S != S * F.transpose())
        throw internal_error("transposing symmetrizer identity failed");
    return S;
}

namespace {

// order of v in the p-primary module: least h with p(M)^h v = 0
int p_order(const Matrix& pM, const std::vector<Scalar>& v, int cap) {
    std::vector<Scalar> w = v;
    int h = 0;
    auto is_zero = [](const std::vector<Scalar>& x) {
        for (const Scalar& s : x)
            if (!s.is_zero()) return false;
        return true;
    };
    while (!is_zero(w)) {
        w = mat_vec(pM, w);
        ++h;
        if (h > cap) throw internal_error("p-order exceeded module exponent");
    }
    return h;
}

// cyclic decomposition of one p-primary component; returns exponents t and
// the local transformation (columns are the cyclic bases)
void cyclic_decompose(const Matrix& M, const Poly& p, Rng& rng, std::vector<int>& ts,
                      Matrix& T_out) {
    const Field& f = M.field();
    std::size_t dim = M.rows();
    if (dim == 0) {
        T_out = Matrix(f, 0, 0);
        return;
    }
    Matrix pM = eval_poly_at(p, M);
    int d = p.degree();
    int cap = static_cast<int>(dim);

    // pick a vector of maximal order among the standard basis
    int best_h = 0;
    std::size_t best_k = 0;
    for (std::size_t k = 0; k < dim; ++k) {
        std::vector<Scalar> e(dim, Scalar::zero(f));
        e[k] = Scalar::one(f);
        int h = p_order(pM, e, cap);
        if (h > best_h) {
            best_h = h;
            best_k = k;
        }
    }
    std::vector<Scalar> v(dim, Scalar::zero(f));
    v[best_k] = Scalar::one(f);
    std::size_t blockdim = static_cast<std::size_t>(best_h * d);

    // Krylov basis of the cyclic submodule W
    std::vector<std::vector<Scalar>> kry{v};
    for (std::size_t a = 1; a < blockdim; ++a) kry.push_back(mat_vec(M, kry.back()));
    Matrix K(f, dim, blockdim);
    for (std::size_t j = 0; j < blockdim; ++j)
        for (std::size_t i = 0; i < dim; ++i) K.set(i, j, kry[j][i]);
    if (rank(K) != blockdim) throw internal_error("cyclic vector has short Krylov span");

    if (blockdim == dim) {
        ts.push_back(best_h);
        T_out = K;
        return;
    }

    // dual functional separating W: the Hankel pairing [xi(M^{a+b} v)] must be
    // nonsingular; coordinate functionals first, then seeded random rows
    std::vector<Scalar> moments;  // xi(M^a v) for a = 0..2*blockdim-2
    auto hankel_ok = [&](const std::vector<Scalar>& xi) {
        moments.clear();
        std::vector<Scalar> w = v;
        for (std::size_t a = 0; a + 1 < 2 * blockdim; ++a) {
            Scalar s = Scalar::zero(f);
            for (std::size_t i = 0; i < dim; ++i) s = s + xi[i] * w[i];
            moments.push_back(s);
            w = mat_vec(M, w);
        }
        Matrix H(f, blockdim, blockdim);
        for (std::size_t i = 0; i < blockdim; ++i)
            for (std::size_t j = 0; j < blockdim; ++j) H.set(i, j, moments[i + j]);
        return nonsingular(H);
    };

    std::vector<Scalar> xi;
    bool found = false;
    for (std::size_t k = 0; k < dim && !found; ++k) {
        xi.assign(dim, Scalar::zero(f));
        xi[k] = Scalar::one(f);
        found = hankel_ok(xi);
    }
    for (int tries = 0; tries < 256 && !found; ++tries) {
        xi.clear();
        for (std::size_t i = 0; i < dim; ++i) xi.push_back(rng.scalar(f));
        found = hankel_ok(xi);
    }
    if (!found) throw internal_error("no separating functional for cyclic splitting");

    // invariant complement: all dual Krylov conditions
    Matrix R(f, dim, dim);
    {
        std::vector<Scalar> row = xi;
        for (std::size_t a = 0; a < dim; ++a) {
            for (std::size_t j = 0; j < dim; ++j) R.set(a, j, row[j]);
            // next functional: xi M^{a+1}, i.e. row * M
            std::vector<Scalar> next(dim, Scalar::zero(f));
            for (std::size_t j = 0; j < dim; ++j)
                for (std::size_t i = 0; i < dim; ++i) next[j] = next[j] + row[i] * M.at(i, j);
            row = next;
        }
    }
    auto cbasis = kernel_basis(R);
    if (cbasis.size() != dim - blockdim)
        throw internal_error("cyclic complement has wrong dimension");
    Matrix C(f, dim, cbasis.size());
    for (std::size_t j = 0; j < cbasis.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) C.set(i, j, cbasis[j][i]);

    // restrict M to the complement: M*C = C*Mc
    Matrix MC = M * C;
    Matrix Mc(f, cbasis.size(), cbasis.size());
    for (std::size_t j = 0; j < cbasis.size(); ++j) {
        auto sol = solve(C, MC.col(j));
        if (!sol) throw internal_error("complement is not invariant");
        for (std::size_t i = 0; i < cbasis.size(); ++i) Mc.set(i, j, (*sol)[i]);
    }

    std::vector<int> sub_ts;
    Matrix sub_T;
    cyclic_decompose(Mc, p, rng, sub_ts, sub_T);

    ts.push_back(best_h);
    for (int t : sub_ts) ts.push_back(t);
    Matrix rest = C * sub_T;
    T_out = Matrix::hstack(K, rest);
}

}  // namespace

PrimaryRcf primary_rcf(const Matrix& M, Rng& rng) {
    if (!M.square()) throw input_error("primary rcf needs a square matrix");
    const Field& f = M.field();
    std::size_t n = M.rows();
    PrimaryRcf out;
    if (n == 0) {
        out.T = Matrix(f, 0, 0);
        return out;
    }
    Poly mp = minimal_poly(M);
    auto factors = factor(mp, rng);

    struct ClassData {
        IrreduciblePower ip;  // t used per block later
        Matrix basis;         // columns: primary component basis
        std::vector<int> ts;
        Matrix local_T;
    };
    std::vector<ClassData> classes;
    std::size_t total = 0;
    for (const auto& [p, s] : factors) {
        Matrix pk = eval_poly_at(p.pow(static_cast<std::uint64_t>(s)), M);
        auto basis = kernel_basis(pk);
        Matrix B(f, n, basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j)
            for (std::size_t i = 0; i < n; ++i) B.set(i, j, basis[j][i]);
        // restriction of M to the component
        Matrix MB = M * B;
        Matrix Mr(f, basis.size(), basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j) {
            auto sol = solve(B, MB.col(j));
            if (!sol) throw internal_error("primary component is not invariant");
            for (std::size_t i = 0; i < basis.size(); ++i) Mr.set(i, j, (*sol)[i]);
        }
        ClassData cd{IrreduciblePower{p, s}, B, {}, Matrix()};
        cyclic_decompose(Mr, p, rng, cd.ts, cd.local_T);
        total += basis.size();
        classes.push_back(std::move(cd));
    }
    if (total != n) throw internal_error("primary components do not fill the space");

    // flatten blocks with their global column ranges
    struct BlockRef {
        IrreduciblePower ip;
        Matrix cols;  // n x blockdim
    };
    std::vector<BlockRef> blocks;
    for (auto& cd : classes) {
        Matrix global_cols = cd.basis * cd.local_T;
        std::size_t off = 0;
        for (int t : cd.ts) {
            std::size_t bd = static_cast<std::size_t>(t * cd.ip.p.degree());
            blocks.push_back({IrreduciblePower{cd.ip.p, t},
                              global_cols.submatrix(0, off, n, bd)});
            off += bd;
        }
    }
    std::stable_sort(blocks.begin(), blocks.end(), [](const BlockRef& a, const BlockRef& b) {
        return IrreduciblePower::compare_rcf(a.ip, b.ip) < 0;
    });

    Matrix T(f, n, n);
    std::size_t off = 0;
    for (auto& b : blocks) {
        T.paste(0, off, b.cols);
        off += b.cols.cols();
        out.blocks.push_back(b.ip);
    }
    out.T = T;

    // verify
    std::vector<Matrix> fb;
    fb.reserve(out.blocks.size());
    for (const auto& ip : out.blocks) fb.push_back(frobenius_block(ip));
    Matrix D = Matrix::direct_sum(fb);
    if (inverse(out.T) * M * out.T != D) throw internal_error("primary rcf verification failed");
    return out;
}

std::optional<Matrix> similar_transform(const Matrix& M, const Matrix& N, Rng& rng) {
    if (!M.square() || !N.square() || M.rows() != N.rows() || M.field() != N.field())
        throw input_error("similar_transform needs same-size square matrices over one field");
    PrimaryRcf rm = primary_rcf(M, rng);
    PrimaryRcf rn = primary_rcf(N, rng);
    if (rm.blocks.size() != rn.blocks.size()) return std::nullopt;
    for (std::size_t k = 0; k < rm.blocks.size(); ++k)
        if (!(rm.blocks[k] == rn.blocks[k])) return std::nullopt;
    Matrix T = rm.T * inverse(rn.T);
    if (inverse(T) * M * T != N) throw internal_error("similarity composition failed");
    return T;
}

}  // namespace starcong
