#include "starcong/kappa.hpp"

namespace starcong {

KappaField::KappaField(Poly p) : ring_(std::move(p)) {
    if (ring_.modulus().coeff(0).is_zero())
        throw input_error("kappa field needs an invertible kappa (p(0) != 0)");
    if (!ring_.modulus().is_monic()) throw input_error("kappa modulus must be monic");
}

bool KappaField::involution_trivial() const {
    if (!base().identity_involution()) return false;
    return conj(Poly::x(base())) == reduce(Poly::x(base()));
}

bool PhiForm::is_zero() const {
    for (const Scalar& s : b)
        if (!s.is_zero()) return false;
    return true;
}

Poly PhiForm::residue() const { return in_ring(PolyQuotient(p)); }

Poly PhiForm::in_ring(const PolyQuotient& R) const {
    const Field& f = p.field();
    Poly xinv = R.x_inverse();
    Poly acc = Poly::constant(b[0]);
    Poly xp = Poly::constant(Scalar::one(f));
    Poly xn = Poly::constant(Scalar::one(f));
    for (std::size_t j = 1; j < b.size(); ++j) {
        xp = R.mul(xp, Poly::x(f));
        xn = R.mul(xn, xinv);
        acc = R.add(acc, R.add(xp * b[j], xn * b[j].conj()));
    }
    return R.reduce(acc);
}

Matrix PhiForm::eval_at(const Matrix& F) const {
    if (!F.square()) throw input_error("phi evaluation needs a square matrix");
    Matrix Finv = inverse(F);
    Matrix acc = Matrix::identity(F.field(), F.rows()) * b[0];
    Matrix xp = Matrix::identity(F.field(), F.rows());
    Matrix xn = xp;
    for (std::size_t j = 1; j < b.size(); ++j) {
        xp = xp * F;
        xn = xn * Finv;
        acc = acc + xp * b[j] + xn * b[j].conj();
    }
    return acc;
}

void PhiForm::validate() const {
    const Field& f = p.field();
    if (b.size() != static_cast<std::size_t>(p.degree() / 2) + 1)
        throw internal_error("phi form has the wrong coefficient count");
    if (b[0] != b[0].conj()) throw internal_error("phi form: b_0 is not fixed");
    if (p.degree() % 2 == 0 && p.degree() > 0) {
        const Scalar& br = b.back();
        if (f.identity_involution()) {
            if (!br.is_zero())
                throw internal_error("phi form: b_r must vanish under the identity involution");
        } else if (p.coeff(0).is_one()) {
            if (br != -br.conj()) throw internal_error("phi form: b_r must be anti-fixed");
        } else {
            if (br != br.conj()) throw internal_error("phi form: b_r must be fixed");
        }
    }
}

int PhiForm::compare(const PhiForm& a, const PhiForm& b2) {
    if (a.b.size() != b2.b.size()) return a.b.size() < b2.b.size() ? -1 : 1;
    for (std::size_t k = 0; k < a.b.size(); ++k) {
        int c = Scalar::compare(a.b[k], b2.b[k]);
        if (c) return c;
    }
    return 0;
}

PhiForm phi_representation(const KappaField& K, const Poly& f_in) {
    const Field& f = K.base();
    const Poly& p = K.modulus();
    Poly target = K.reduce(f_in);
    if (!K.is_fixed(target)) throw input_error("phi representation needs a circle-fixed element");

    int d = p.degree();
    std::size_t r = static_cast<std::size_t>(d / 2);
    bool even = d % 2 == 0;
    bool ident = f.identity_involution();

    // Unknowns range over the fixed subfield. Each unknown contributes a fixed
    // direction in F[kappa]; which b_j it feeds is recorded for reconstruction.
    struct Direction {
        Poly value;      // contribution to phi(kappa) per unit of the unknown
        std::size_t j;   // band index
        Scalar basis;    // contribution to b_j per unit of the unknown
    };
    std::vector<Direction> dirs;
    Poly xinv = K.ring().x_inverse();
    Poly one = Poly::constant(Scalar::one(f));

    auto kpow = [&](std::size_t j) { return K.ring().pow(Poly::x(f), BigInt(j)); };
    auto kneg = [&](std::size_t j) { return K.ring().pow(xinv, BigInt(j)); };

    Scalar w = ident ? Scalar::zero(f) : sample_nonfixed(f);
    dirs.push_back({one, 0, Scalar::one(f)});
    for (std::size_t j = 1; j <= r; ++j) {
        bool constrained = even && j == r;
        if (!constrained) {
            dirs.push_back({K.add(kpow(j), kneg(j)), j, Scalar::one(f)});
            if (!ident)
                dirs.push_back({K.add(kpow(j) * w, kneg(j) * w.conj()), j, w});
        } else if (ident) {
            // b_r forced to zero: no direction
        } else if (!p.coeff(0).is_one()) {
            dirs.push_back({K.add(kpow(j), kneg(j)), j, Scalar::one(f)});
        } else {
            // b_r anti-fixed: direction eta = (w - conj(w))/2
            Scalar eta = (w - w.conj()) / Scalar::from_int(f, 2);
            dirs.push_back({K.add(kpow(j) * eta, kneg(j) * eta.conj()), j, eta});
        }
    }

    // Linear system over the fixed subfield: split every F-coordinate of
    // F[kappa] into fixed coordinates.
    std::size_t coord_mult = ident ? 1 : 2;
    std::size_t rows = static_cast<std::size_t>(d) * coord_mult;
    Matrix sys(f, rows, dirs.size());
    std::vector<Scalar> rhs(rows, Scalar::zero(f));
    auto put = [&](const Poly& val, std::size_t col, std::vector<Scalar>* rhs_out) {
        for (int k = 0; k < d; ++k) {
            auto [c0, c1] = val.coeff(static_cast<std::size_t>(k)).fixed_coords();
            std::size_t base = static_cast<std::size_t>(k) * coord_mult;
            if (rhs_out) {
                (*rhs_out)[base] = c0;
                if (!ident) (*rhs_out)[base + 1] = c1;
            } else {
                sys.set(base, col, c0);
                if (!ident) sys.set(base + 1, col, c1);
            }
        }
    };
    for (std::size_t c = 0; c < dirs.size(); ++c) put(dirs[c].value, c, nullptr);
    put(target, 0, &rhs);

    if (rank(sys) != dirs.size())
        throw internal_error("phi representation directions are dependent");
    auto sol = solve(sys, rhs);
    if (!sol) throw internal_error("no phi representation found for a fixed element");

    PhiForm phi{p, std::vector<Scalar>(r + 1, Scalar::zero(f))};
    for (std::size_t c = 0; c < dirs.size(); ++c)
        phi.b[dirs[c].j] = phi.b[dirs[c].j] + dirs[c].basis * (*sol)[c];
    phi.validate();
    if (phi.in_ring(K.ring()) != target) throw internal_error("phi round trip failed");
    return phi;
}

}  // namespace starcong
