#include <algorithm>
#include <map>

#include "starcong/poly.hpp"

// Irreducible factorization. Finite fields use squarefree decomposition,
// distinct-degree splitting and Cantor-Zassenhaus; Q uses a modular lift
// (factor mod p, Hensel to past the coefficient bound, subset recombination);
// Q(i) reduces to Q through norms.

namespace starcong {

namespace {

constexpr int kInfiniteFieldDegreeCap = 12;

// ---------------------------------------------------------------- finite fields

Poly random_poly_below(const Field& f, int deg, Rng& rng) {
    std::vector<Scalar> c;
    c.reserve(static_cast<std::size_t>(deg));
    for (int k = 0; k < deg; ++k) c.push_back(rng.scalar(f));
    return Poly(f, std::move(c));
}

void equal_degree_split(const PolyQuotient& ambient, const Poly& f, int d, Rng& rng,
                        std::vector<Poly>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const Field& F = f.field();
    BigInt qd = 1;
    for (int k = 0; k < d; ++k) qd *= F.size();
    BigInt e = (qd - 1) / 2;
    for (;;) {
        Poly h = random_poly_below(F, f.degree(), rng);
        if (h.degree() < 1) continue;
        Poly g = gcd(h, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(ambient, g, d, rng, out);
            equal_degree_split(ambient, (f / g).monic(), d, rng, out);
            return;
        }
        PolyQuotient q(f);
        Poly t = q.pow(h, e) - Poly::constant(Scalar::one(F));
        g = gcd(t, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(ambient, g, d, rng, out);
            equal_degree_split(ambient, (f / g).monic(), d, rng, out);
            return;
        }
    }
}

// monic squarefree input
std::vector<Poly> factor_squarefree_finite(const Poly& f, Rng& rng) {
    std::vector<Poly> out;
    const Field& F = f.field();
    Poly rest = f;
    Poly h = Poly::x(F);
    int d = 0;
    while (rest.degree() > 0 && 2 * (d + 1) <= rest.degree()) {
        ++d;
        PolyQuotient q(rest);
        h = q.pow(h, BigInt(F.size()));
        Poly g = gcd(h - Poly::x(F), rest);
        if (g.degree() > 0) {
            equal_degree_split(q, g, d, rng, out);
            rest = (rest / g).monic();
            h = h % rest;
        }
    }
    if (rest.degree() > 0) out.push_back(rest);
    return out;
}

// p-th root of a coefficient: a^(q/p) (Frobenius inverse)
Scalar coeff_pth_root(const Scalar& a) {
    const Field& F = a.field();
    if (F.kind() == FieldKind::prime_field) return a;
    return a.pow(F.p());  // q = p^2: (a^p)^p = a
}

// monic f over a finite field -> squarefree parts with multiplicities
void squarefree_finite(const Poly& f, int mult, std::map<int, Poly>& acc) {
    const Field& F = f.field();
    if (f.degree() == 0) return;
    Poly d = f.derivative();
    if (d.is_zero()) {
        // f = h(x^p); take p-th roots of coefficients
        std::int64_t p = F.p();
        std::vector<Scalar> c;
        for (int k = 0; k <= f.degree(); k += static_cast<int>(p))
            c.push_back(coeff_pth_root(f.coeff(static_cast<std::size_t>(k))));
        squarefree_finite(Poly(F, std::move(c)), mult * static_cast<int>(p), acc);
        return;
    }
    Poly g = gcd(f, d);
    Poly w = (f / g).monic();
    int m = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, g);
        Poly part = (w / y).monic();
        if (part.degree() > 0) {
            auto it = acc.find(mult * m);
            if (it == acc.end())
                acc.emplace(mult * m, part);
            else
                it->second = it->second * part;
        }
        g = (g / y).monic();
        w = y;
        ++m;
    }
    if (g.degree() > 0) squarefree_finite(g, mult, acc);
}

std::vector<PolyFactor> factor_finite(const Poly& f, Rng& rng) {
    std::map<int, Poly> parts;
    squarefree_finite(f.monic(), 1, parts);
    std::vector<PolyFactor> out;
    for (auto& [mult, part] : parts)
        for (const Poly& irr : factor_squarefree_finite(part.monic(), rng))
            out.push_back({irr, mult});
    return out;
}

// ------------------------------------------------------------------- Z[x] helpers

using ZPoly = std::vector<BigInt>;  // constant first, trimmed

void ztrim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int zdeg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ztrim(r);
    return r;
}

BigInt zcontent(const ZPoly& f) {
    BigInt g = 0;
    for (const BigInt& c : f) g = boost::multiprecision::gcd(g, c);
    return g;
}

// exact division test: returns quotient if d | f over Z
bool zdivide_exact(const ZPoly& f, const ZPoly& d, ZPoly& q) {
    if (d.empty()) return false;
    ZPoly r = f;
    q.assign(f.size(), BigInt(0));
    while (zdeg(r) >= zdeg(d)) {
        BigInt lead = r.back();
        if (lead % d.back() != 0) return false;
        BigInt c = lead / d.back();
        std::size_t shift = r.size() - d.size();
        q[shift] = c;
        for (std::size_t k = 0; k < d.size(); ++k) r[shift + k] -= c * d[k];
        ztrim(r);
        if (r.empty()) break;
    }
    ztrim(q);
    return r.empty();
}

BigInt mod_centered(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

// polynomial arithmetic with coefficients mod m (monic divisors only)
ZPoly zmod(const ZPoly& f, const BigInt& m) {
    ZPoly r = f;
    for (BigInt& c : r) {
        c %= m;
        if (c < 0) c += m;
    }
    ztrim(r);
    return r;
}

ZPoly zmul_mod(const ZPoly& a, const ZPoly& b, const BigInt& m) { return zmod(zmul(a, b), m); }

ZPoly zsub_mod(const ZPoly& a, const ZPoly& b, const BigInt& m) {
    ZPoly r = a;
    if (r.size() < b.size()) r.resize(b.size(), BigInt(0));
    for (std::size_t k = 0; k < b.size(); ++k) r[k] -= b[k];
    return zmod(r, m);
}

// divmod by a monic divisor, coefficients mod m
void zdivmod_monic_mod(const ZPoly& f, const ZPoly& d, const BigInt& m, ZPoly& q, ZPoly& r) {
    r = zmod(f, m);
    q.clear();
    if (zdeg(r) >= zdeg(d)) q.assign(static_cast<std::size_t>(zdeg(r) - zdeg(d) + 1), BigInt(0));
    while (zdeg(r) >= zdeg(d)) {
        BigInt c = r.back();
        std::size_t shift = r.size() - d.size();
        q[shift] = c;
        for (std::size_t k = 0; k < d.size(); ++k) {
            r[shift + k] -= c * d[k];
            r[shift + k] %= m;
            if (r[shift + k] < 0) r[shift + k] += m;
        }
        ztrim(r);
    }
    ztrim(q);
}

struct HenselPair {
    ZPoly g, h;  // monic
    ZPoly s, t;  // s*g + t*h = 1 (mod m)
};

ZPoly zadd_mod(const ZPoly& a, const ZPoly& b, const BigInt& m) {
    ZPoly r = a;
    if (r.size() < b.size()) r.resize(b.size(), BigInt(0));
    for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
    return zmod(r, m);
}

// one quadratic step: from mod m to mod m^2, f monic, f = g*h (mod m),
// s*g + t*h = 1 (mod m)
void hensel_step(const ZPoly& f, HenselPair& ph, const BigInt& m) {
    BigInt m2 = m * m;
    ZPoly e = zsub_mod(f, zmul(ph.g, ph.h), m2);
    ZPoly q, r;
    zdivmod_monic_mod(zmul_mod(ph.s, e, m2), ph.h, m2, q, r);
    ZPoly gstar = zadd_mod(zadd_mod(ph.g, zmul_mod(ph.t, e, m2), m2), zmul_mod(q, ph.g, m2), m2);
    ZPoly hstar = zadd_mod(ph.h, r, m2);
    ZPoly b = zsub_mod(zadd_mod(zmul(ph.s, gstar), zmul(ph.t, hstar), m2), ZPoly{BigInt(1)}, m2);
    ZPoly c, d;
    zdivmod_monic_mod(zmul_mod(ph.s, b, m2), hstar, m2, c, d);
    ZPoly sstar = zsub_mod(ph.s, d, m2);
    ZPoly tstar = zsub_mod(zsub_mod(ph.t, zmul_mod(ph.t, b, m2), m2), zmul_mod(c, gstar, m2), m2);
    ph.g = gstar;
    ph.h = hstar;
    ph.s = sstar;
    ph.t = tstar;
}

Poly zpoly_to_fp(const ZPoly& f, const Field& fp) {
    std::vector<Scalar> c;
    c.reserve(f.size());
    for (const BigInt& a : f) {
        BigInt r = a % fp.p();
        c.push_back(Scalar::from_int(fp, static_cast<std::int64_t>(r)));
    }
    return Poly(fp, std::move(c));
}

ZPoly fp_to_zpoly(const Poly& f) {
    ZPoly r;
    r.reserve(static_cast<std::size_t>(f.degree() + 1));
    for (int k = 0; k <= f.degree(); ++k) r.push_back(BigInt(f.coeff(static_cast<std::size_t>(k)).res()));
    return r;
}

// lift the factorization f = prod(parts) (mod p) to mod p^(2^rounds) >= bound
std::vector<ZPoly> hensel_lift_tree(const ZPoly& f, std::vector<Poly> parts, const Field& fp,
                                    const BigInt& target, BigInt& modulus_out) {
    if (parts.size() == 1) {
        BigInt m = fp.p();
        ZPoly lifted = f;
        while (m < target) m *= m;
        modulus_out = m;
        return {zmod(f, m)};
    }
    std::size_t half = parts.size() / 2;
    Poly G = Poly::constant(Scalar::one(fp));
    for (std::size_t i = 0; i < half; ++i) G = G * parts[i];
    Poly H = Poly::constant(Scalar::one(fp));
    for (std::size_t i = half; i < parts.size(); ++i) H = H * parts[i];
    auto [gg, ss, tt] = xgcd(G, H);
    if (gg.degree() != 0) throw internal_error("modular factors not coprime");
    HenselPair ph;
    ph.g = fp_to_zpoly(G);
    ph.h = fp_to_zpoly(H);
    ph.s = fp_to_zpoly(ss * gg.coeff(0).inverse());
    ph.t = fp_to_zpoly(tt * gg.coeff(0).inverse());
    BigInt m = fp.p();
    while (m < target) {
        hensel_step(f, ph, m);
        m *= m;
    }
    modulus_out = m;
    std::vector<Poly> left(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(half));
    std::vector<Poly> right(parts.begin() + static_cast<std::ptrdiff_t>(half), parts.end());
    BigInt msub = 0;
    std::vector<ZPoly> out;
    for (auto& part : hensel_lift_tree(ph.g, std::move(left), fp, target, msub)) out.push_back(part);
    for (auto& part : hensel_lift_tree(ph.h, std::move(right), fp, target, msub)) out.push_back(part);
    return out;
}

// squarefree primitive f over Z, monic; returns monic irreducible Z-factors
std::vector<ZPoly> factor_monic_squarefree_z(const ZPoly& f, Rng& rng) {
    int n = zdeg(f);
    if (n <= 1) return {f};
    // choose an odd prime keeping f squarefree mod p
    std::int64_t p = 0;
    for (std::int64_t cand = 3;; cand += 2) {
        bool prime = true;
        for (std::int64_t d = 3; d * d <= cand; d += 2)
            if (cand % d == 0) {
                prime = false;
                break;
            }
        if (!prime) continue;
        if (f.back() % cand == 0) continue;
        Field fp = Field::prime_field(cand);
        Poly fbar = zpoly_to_fp(f, fp);
        if (fbar.degree() == n && gcd(fbar, fbar.derivative()).degree() == 0) {
            p = cand;
            break;
        }
        if (cand > 10000) throw internal_error("no suitable factorization prime found");
    }
    Field fp = Field::prime_field(p);
    Poly fbar = zpoly_to_fp(f, fp).monic();
    std::vector<Poly> parts = factor_squarefree_finite(fbar, rng);
    std::sort(parts.begin(), parts.end(), [](const Poly& a, const Poly& b) {
        return Poly::compare(a, b) < 0;
    });
    if (parts.size() == 1) return {f};

    // coefficient bound for any monic factor: 2^n * ||f||_1
    BigInt norm1 = 0;
    for (const BigInt& c : f) norm1 += abs(c);
    BigInt bound = (BigInt(1) << n) * norm1 * 2 + 1;
    BigInt modulus = 0;
    std::vector<ZPoly> lifted = hensel_lift_tree(f, parts, fp, bound, modulus);

    // subset recombination
    std::vector<ZPoly> result;
    std::vector<int> alive(lifted.size(), 1);
    ZPoly rest = f;
    std::size_t alive_count = lifted.size();
    for (std::size_t take = 1; take <= alive_count && alive_count > 0; ++take) {
        bool progress = true;
        while (progress && take * 2 <= alive_count) {
            progress = false;
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < lifted.size(); ++i)
                if (alive[i]) idx.push_back(i);
            std::vector<std::size_t> comb(take);
            // iterate combinations of size `take`
            std::vector<std::size_t> c(take);
            for (std::size_t i = 0; i < take; ++i) c[i] = i;
            while (true) {
                ZPoly cand{BigInt(1)};
                for (std::size_t i = 0; i < take; ++i) cand = zmul_mod(cand, lifted[idx[c[i]]], modulus);
                for (BigInt& co : cand) co = mod_centered(co, modulus);
                ztrim(cand);
                ZPoly q;
                if (!cand.empty() && cand.back() == 1 && zdivide_exact(rest, cand, q)) {
                    result.push_back(cand);
                    rest = q;
                    for (std::size_t i = 0; i < take; ++i) alive[idx[c[i]]] = 0;
                    alive_count -= take;
                    progress = true;
                    break;
                }
                // next combination
                std::size_t k = take;
                while (k > 0 && c[k - 1] == idx.size() - take + k - 1) --k;
                if (k == 0) break;
                ++c[k - 1];
                for (std::size_t j = k; j < take; ++j) c[j] = c[j - 1] + 1;
            }
        }
    }
    if (zdeg(rest) > 0) result.push_back(rest);
    return result;
}

// --------------------------------------------------------------------------- Q

BigInt denominator_lcm(const Poly& f) {
    BigInt l = 1;
    for (int k = 0; k <= f.degree(); ++k) {
        const BigRat& q = f.coeff(static_cast<std::size_t>(k)).rat();
        BigInt d = denominator(q);
        l = l / boost::multiprecision::gcd(l, d) * d;
    }
    return l;
}

ZPoly rational_to_primitive_z(const Poly& f) {
    BigInt l = denominator_lcm(f);
    ZPoly r;
    for (int k = 0; k <= f.degree(); ++k) {
        const BigRat& q = f.coeff(static_cast<std::size_t>(k)).rat();
        r.push_back(numerator(q) * (l / denominator(q)));
    }
    BigInt c = zcontent(r);
    if (c != 0)
        for (BigInt& a : r) a /= c;
    if (!r.empty() && r.back() < 0)
        for (BigInt& a : r) a = -a;
    return r;
}

Poly zpoly_to_rational(const ZPoly& f, const Field& Q) {
    std::vector<Scalar> c;
    c.reserve(f.size());
    for (const BigInt& a : f) c.push_back(Scalar::from_rational(Q, BigRat(a)));
    return Poly(Q, std::move(c));
}

// squarefree monic f over Q
std::vector<Poly> factor_squarefree_q(const Poly& f, Rng& rng) {
    const Field& Q = f.field();
    if (f.degree() <= 1) return {f};
    ZPoly z = rational_to_primitive_z(f);
    // monicize: g(y) = lc^(n-1) f(y/lc) is monic over Z, coefficients
    // g_k = z_k * lc^(n-1-k)
    BigInt lc = z.back();
    int n = zdeg(z);
    ZPoly g(z.size());
    g[static_cast<std::size_t>(n)] = 1;
    BigInt acc = 1;
    for (int k = n - 1; k >= 0; --k) {
        g[static_cast<std::size_t>(k)] = z[static_cast<std::size_t>(k)] * acc;
        acc *= lc;
    }
    std::vector<ZPoly> zfactors = factor_monic_squarefree_z(g, rng);
    std::vector<Poly> out;
    for (const ZPoly& h : zfactors) {
        // map back: y = lc * x
        std::vector<Scalar> c(h.size());
        BigInt acc = 1;
        for (std::size_t k = 0; k < h.size(); ++k) {
            c[k] = Scalar::from_rational(Q, BigRat(h[k] * acc));
            acc *= lc;
        }
        out.push_back(Poly(Q, std::move(c)).monic());
    }
    return out;
}

// char-0 squarefree decomposition (Yun)
std::vector<std::pair<Poly, int>> squarefree_char0(const Poly& f) {
    std::vector<std::pair<Poly, int>> out;
    Poly a = f.monic();
    Poly d = a.derivative();
    Poly g = gcd(a, d);
    Poly w = (a / g).monic();
    Poly y = (d / g);
    int m = 1;
    while (w.degree() > 0) {
        Poly z = y - w.derivative();
        Poly part = gcd(w, z);
        if (part.degree() > 0) out.emplace_back(part, m);
        w = (w / part).monic();
        y = (z / part);
        ++m;
    }
    return out;
}

// ------------------------------------------------------------------------ Q(i)

Poly gauss_conj_all(const Poly& f) { return f.conj(); }  // conjugation field assumed

Poly gauss_to_q(const Poly& f, const Field& Q) {
    std::vector<Scalar> c;
    for (int k = 0; k <= f.degree(); ++k) {
        const GaussRat& g = f.coeff(static_cast<std::size_t>(k)).gauss();
        if (g.im != 0) throw internal_error("norm polynomial is not rational");
        c.push_back(Scalar::from_rational(Q, g.re));
    }
    return Poly(Q, std::move(c));
}

Poly q_to_gauss(const Poly& f, const Field& Qi) {
    std::vector<Scalar> c;
    for (int k = 0; k <= f.degree(); ++k)
        c.push_back(Scalar::gaussian(Qi, f.coeff(static_cast<std::size_t>(k)).rat(), BigRat(0)));
    return Poly(Qi, std::move(c));
}

Poly shift_by_imag(const Poly& f, std::int64_t s) {
    // f(x + s*i)
    const Field& F = f.field();
    Poly x_shift(F, {Scalar::gaussian(F, BigRat(0), BigRat(s)), Scalar::one(F)});
    Poly acc = Poly::zero(F);
    for (std::size_t k = f.coeffs().size(); k-- > 0;)
        acc = acc * x_shift + Poly::constant(f[k]);
    return acc;
}

std::vector<Poly> factor_squarefree_gauss(const Poly& f, Rng& rng) {
    const Field& Qi = f.field();
    if (f.degree() <= 1) return {f};
    Field Qi_conj = Field::gaussian_rationals(Involution::conjugation);
    Field Q = Field::rationals();
    // move to the conjugation field for norm computations
    auto to_conj = [&](const Poly& g) {
        std::vector<Scalar> c;
        for (int k = 0; k <= g.degree(); ++k) {
            const GaussRat& a = g.coeff(static_cast<std::size_t>(k)).gauss();
            c.push_back(Scalar::gaussian(Qi_conj, a.re, a.im));
        }
        return Poly(Qi_conj, std::move(c));
    };
    auto from_conj = [&](const Poly& g) {
        std::vector<Scalar> c;
        for (int k = 0; k <= g.degree(); ++k) {
            const GaussRat& a = g.coeff(static_cast<std::size_t>(k)).gauss();
            c.push_back(Scalar::gaussian(Qi, a.re, a.im));
        }
        return Poly(Qi, std::move(c));
    };

    Poly fc = to_conj(f.monic());
    for (std::int64_t s = 0; s <= 64; ++s) {
        Poly fs = shift_by_imag(fc, -s);  // f(x - s*i)
        Poly norm_gauss = fs * gauss_conj_all(fs);
        Poly norm = gauss_to_q(norm_gauss, Q);
        if (gcd(norm, norm.derivative()).degree() != 0) continue;
        std::vector<Poly> qfactors = factor_squarefree_q(norm.monic(), rng);
        std::vector<Poly> out;
        for (const Poly& h : qfactors) {
            Poly hg = to_conj(q_to_gauss(h, Qi));
            Poly g = gcd(fs, hg);
            if (g.degree() > 0) out.push_back(from_conj(shift_by_imag(g.monic(), s)).monic());
        }
        int total = 0;
        for (const Poly& g : out) total += g.degree();
        if (total != f.degree()) throw internal_error("norm descent lost a factor");
        return out;
    }
    throw internal_error("no squarefree norm shift found");
}

}  // namespace

std::vector<PolyFactor> factor(const Poly& f, Rng& rng) {
    if (f.is_zero()) throw input_error("cannot factor the zero polynomial");
    if (f.field().finite()) return factor_finite(f, rng);
    if (f.degree() > kInfiniteFieldDegreeCap)
        throw degree_cap_error("factorization degree cap exceeded over an infinite field");
    std::vector<PolyFactor> out;
    if (f.degree() == 0) return out;
    for (auto& [part, mult] : squarefree_char0(f)) {
        std::vector<Poly> irr = f.field().kind() == FieldKind::rationals
                                    ? factor_squarefree_q(part, rng)
                                    : factor_squarefree_gauss(part, rng);
        for (Poly& g : irr) out.push_back({g.monic(), mult});
    }
    std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
        int c = Poly::compare(a.p, b.p);
        return c ? c < 0 : a.mult < b.mult;
    });
    return out;
}

bool is_irreducible(const Poly& f, Rng& rng) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    if (f.field().finite()) {
        // f irreducible iff x^(q^n) = x mod f and gcd(x^(q^(n/l)) - x, f) = 1
        // for every prime l dividing n
        const Field& F = f.field();
        Poly m = f.monic();
        PolyQuotient q(m);
        int n = f.degree();
        BigInt Q = F.size();
        auto xq_power = [&](int e) {
            Poly h = Poly::x(F);
            for (int k = 0; k < e; ++k) h = q.pow(h, Q);
            return h;
        };
        if (xq_power(n) != Poly::x(F) % m) return false;
        for (int l = 2; l <= n; ++l) {
            if (n % l) continue;
            bool prime = true;
            for (int d = 2; d * d <= l; ++d)
                if (l % d == 0) prime = false;
            if (!prime) continue;
            if (gcd(xq_power(n / l) - Poly::x(F), m).degree() != 0) return false;
        }
        return true;
    }
    auto fs = factor(f, rng);
    return fs.size() == 1 && fs[0].mult == 1 && fs[0].p.degree() == f.degree();
}

std::vector<Poly> irreducibles_of_degree(const Field& f, int deg, Rng& rng) {
    if (!f.finite()) throw input_error("irreducible enumeration needs a finite field");
    std::vector<Poly> out;
    std::vector<Scalar> elems = enumerate_field(f);
    std::vector<std::size_t> idx(static_cast<std::size_t>(deg), 0);
    for (;;) {
        std::vector<Scalar> c;
        for (std::size_t k = 0; k < idx.size(); ++k) c.push_back(elems[idx[k]]);
        c.push_back(Scalar::one(f));
        Poly cand(f, std::move(c));
        if (is_irreducible(cand, rng)) out.push_back(cand);
        std::size_t k = 0;
        while (k < idx.size()) {
            if (++idx[k] < elems.size()) break;
            idx[k++] = 0;
        }
        if (k == idx.size()) break;
    }
    return out;
}

}  // namespace starcong
