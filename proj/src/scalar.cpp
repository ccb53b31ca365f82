#include "starcong/scalar.hpp"

#include <cctype>
#include <sstream>

namespace starcong {

namespace {

bool is_small_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::int64_t mod_norm(std::int64_t a, std::int64_t p) {
    a %= p;
    return a < 0 ? a + p : a;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = mod_norm(a, p);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw input_error("division by zero in F_p");
    return mod_norm(t, p);
}

}  // namespace

Field Field::rationals() {
    Field f;
    f.kind_ = FieldKind::rationals;
    f.inv_ = Involution::identity;
    return f;
}

Field Field::gaussian_rationals(Involution inv) {
    Field f;
    f.kind_ = FieldKind::gaussian_rationals;
    f.inv_ = inv;
    return f;
}

Field Field::prime_field(std::int64_t p) {
    if (!is_small_prime(p) || p == 2) throw input_error("prime field requires an odd prime");
    if (p > (std::int64_t(1) << 31)) throw input_error("prime too large");
    Field f;
    f.kind_ = FieldKind::prime_field;
    f.inv_ = Involution::identity;
    f.p_ = p;
    return f;
}

Field Field::quadratic_extension(std::int64_t p, std::int64_t m0, std::int64_t m1,
                                 Involution inv) {
    if (!is_small_prime(p) || p == 2) throw input_error("extension base must be an odd prime");
    if (p > (std::int64_t(1) << 20)) throw input_error("prime too large for extension");
    Field f;
    f.kind_ = FieldKind::quadratic_extension;
    f.inv_ = inv;
    f.p_ = p;
    f.m0_ = mod_norm(m0, p);
    f.m1_ = mod_norm(m1, p);
    // degree-2 modulus is irreducible iff it has no root
    for (std::int64_t r = 0; r < p; ++r) {
        std::int64_t v = mod_norm(mul_mod(r, r, p) + mul_mod(f.m1_, r, p) + f.m0_, p);
        if (v == 0) throw input_error("quadratic extension modulus is reducible");
    }
    return f;
}

std::uint64_t Field::size() const {
    switch (kind_) {
        case FieldKind::prime_field: return static_cast<std::uint64_t>(p_);
        case FieldKind::quadratic_extension:
            return static_cast<std::uint64_t>(p_) * static_cast<std::uint64_t>(p_);
        default: throw input_error("field is infinite");
    }
}

std::string Field::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case FieldKind::rationals: os << "Q"; break;
        case FieldKind::gaussian_rationals: os << "Q(i)"; break;
        case FieldKind::prime_field: os << "F" << p_; break;
        case FieldKind::quadratic_extension:
            os << "F" << p_ * p_ << "=F" << p_ << "[u]/(u^2";
            if (m1_) os << "+" << m1_ << "u";
            if (m0_) os << "+" << m0_;
            os << ")";
            break;
    }
    os << "/" << (inv_ == Involution::identity ? "identity" : "conjugation");
    return os.str();
}

Scalar Scalar::zero(const Field& f) { return from_int(f, 0); }
Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, std::int64_t n) {
    Scalar s;
    s.field_ = f;
    switch (f.kind()) {
        case FieldKind::rationals: s.v_ = BigRat(n); break;
        case FieldKind::gaussian_rationals: s.v_ = GaussRat{BigRat(n), BigRat(0)}; break;
        case FieldKind::prime_field: s.v_ = mod_norm(n, f.p()); break;
        case FieldKind::quadratic_extension:
            s.v_ = std::array<std::int64_t, 2>{mod_norm(n, f.p()), 0};
            break;
    }
    return s;
}

Scalar Scalar::from_rational(const Field& f, const BigRat& q) {
    Scalar s;
    s.field_ = f;
    if (f.kind() == FieldKind::rationals)
        s.v_ = q;
    else if (f.kind() == FieldKind::gaussian_rationals)
        s.v_ = GaussRat{q, BigRat(0)};
    else
        throw input_error("rational literal in a finite field");
    return s;
}

Scalar Scalar::gaussian(const Field& f, const BigRat& re, const BigRat& im) {
    if (f.kind() != FieldKind::gaussian_rationals)
        throw input_error("gaussian literal outside Q(i)");
    Scalar s;
    s.field_ = f;
    s.v_ = GaussRat{re, im};
    return s;
}

Scalar Scalar::residue(const Field& f, std::int64_t a) {
    if (f.kind() != FieldKind::prime_field) throw input_error("residue literal outside F_p");
    Scalar s;
    s.field_ = f;
    s.v_ = mod_norm(a, f.p());
    return s;
}

Scalar Scalar::extension(const Field& f, std::int64_t a0, std::int64_t a1) {
    if (f.kind() != FieldKind::quadratic_extension)
        throw input_error("extension literal outside F_{p^2}");
    Scalar s;
    s.field_ = f;
    s.v_ = std::array<std::int64_t, 2>{mod_norm(a0, f.p()), mod_norm(a1, f.p())};
    return s;
}

const BigRat& Scalar::rat() const { return std::get<BigRat>(v_); }
const GaussRat& Scalar::gauss() const { return std::get<GaussRat>(v_); }
std::int64_t Scalar::res() const { return std::get<std::int64_t>(v_); }
std::array<std::int64_t, 2> Scalar::ext() const { return std::get<std::array<std::int64_t, 2>>(v_); }

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_) throw input_error("mixed fields in scalar arithmetic");
}

bool Scalar::is_zero() const {
    switch (field_.kind()) {
        case FieldKind::rationals: return rat() == 0;
        case FieldKind::gaussian_rationals: return gauss().re == 0 && gauss().im == 0;
        case FieldKind::prime_field: return res() == 0;
        case FieldKind::quadratic_extension: return ext()[0] == 0 && ext()[1] == 0;
    }
    return false;
}

bool Scalar::is_one() const { return *this == one(field_); }

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar r;
    r.field_ = field_;
    switch (field_.kind()) {
        case FieldKind::rationals: r.v_ = rat() + o.rat(); break;
        case FieldKind::gaussian_rationals:
            r.v_ = GaussRat{gauss().re + o.gauss().re, gauss().im + o.gauss().im};
            break;
        case FieldKind::prime_field: r.v_ = mod_norm(res() + o.res(), field_.p()); break;
        case FieldKind::quadratic_extension: {
            auto a = ext(), b = o.ext();
            r.v_ = std::array<std::int64_t, 2>{mod_norm(a[0] + b[0], field_.p()),
                                               mod_norm(a[1] + b[1], field_.p())};
            break;
        }
    }
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.field_ = field_;
    switch (field_.kind()) {
        case FieldKind::rationals: r.v_ = BigRat(-rat()); break;
        case FieldKind::gaussian_rationals: r.v_ = GaussRat{-gauss().re, -gauss().im}; break;
        case FieldKind::prime_field: r.v_ = mod_norm(-res(), field_.p()); break;
        case FieldKind::quadratic_extension: {
            auto a = ext();
            r.v_ = std::array<std::int64_t, 2>{mod_norm(-a[0], field_.p()),
                                               mod_norm(-a[1], field_.p())};
            break;
        }
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar r;
    r.field_ = field_;
    switch (field_.kind()) {
        case FieldKind::rationals: r.v_ = BigRat(rat() * o.rat()); break;
        case FieldKind::gaussian_rationals: {
            const auto &a = gauss(), &b = o.gauss();
            r.v_ = GaussRat{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
            break;
        }
        case FieldKind::prime_field: r.v_ = mul_mod(res(), o.res(), field_.p()); break;
        case FieldKind::quadratic_extension: {
            // u^2 = -m1*u - m0
            auto a = ext(), b = o.ext();
            std::int64_t p = field_.p();
            std::int64_t c2 = mul_mod(a[1], b[1], p);
            std::int64_t c1 = mod_norm(mul_mod(a[0], b[1], p) + mul_mod(a[1], b[0], p), p);
            std::int64_t c0 = mul_mod(a[0], b[0], p);
            c0 = mod_norm(c0 - mul_mod(c2, field_.modulus_c0(), p), p);
            c1 = mod_norm(c1 - mul_mod(c2, field_.modulus_c1(), p), p);
            r.v_ = std::array<std::int64_t, 2>{c0, c1};
            break;
        }
    }
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw input_error("division by zero");
    Scalar r;
    r.field_ = field_;
    switch (field_.kind()) {
        case FieldKind::rationals: r.v_ = BigRat(1 / rat()); break;
        case FieldKind::gaussian_rationals: {
            const auto& a = gauss();
            BigRat n = a.re * a.re + a.im * a.im;
            r.v_ = GaussRat{a.re / n, -a.im / n};
            break;
        }
        case FieldKind::prime_field: r.v_ = inv_mod(res(), field_.p()); break;
        case FieldKind::quadratic_extension: {
            // (a0 + a1 u)(x0 + x1 u) = 1 as a 2x2 linear system over F_p
            auto a = ext();
            std::int64_t p = field_.p();
            std::int64_t m0 = field_.modulus_c0(), m1 = field_.modulus_c1();
            // matrix [[a0, -a1*m0], [a1, a0 - a1*m1]]
            std::int64_t A = a[0], B = mod_norm(-mul_mod(a[1], m0, p), p);
            std::int64_t C = a[1], D = mod_norm(a[0] - mul_mod(a[1], m1, p), p);
            std::int64_t det = mod_norm(mul_mod(A, D, p) - mul_mod(B, C, p), p);
            std::int64_t di = inv_mod(det, p);
            std::int64_t x0 = mul_mod(D, di, p);
            std::int64_t x1 = mod_norm(-mul_mod(C, di, p), p);
            r.v_ = std::array<std::int64_t, 2>{x0, x1};
            break;
        }
    }
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return v_ == o.v_;
}

Scalar Scalar::conj() const {
    if (field_.identity_involution()) return *this;
    if (field_.kind() == FieldKind::gaussian_rationals) {
        Scalar r;
        r.field_ = field_;
        r.v_ = GaussRat{gauss().re, -gauss().im};
        return r;
    }
    // Frobenius a -> a^p by square-and-multiply; works for any modulus.
    return pow(field_.p());
}

Scalar Scalar::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc = one(field_);
    Scalar base = *this;
    std::uint64_t k = static_cast<std::uint64_t>(e);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) throw input_error("mixed fields in scalar comparison");
    auto cmp_rat = [](const BigRat& x, const BigRat& y) { return x < y ? -1 : (x == y ? 0 : 1); };
    switch (a.field_.kind()) {
        case FieldKind::rationals: return cmp_rat(a.rat(), b.rat());
        case FieldKind::gaussian_rationals: {
            int c = cmp_rat(a.gauss().re, b.gauss().re);
            return c ? c : cmp_rat(a.gauss().im, b.gauss().im);
        }
        case FieldKind::prime_field:
            return a.res() < b.res() ? -1 : (a.res() == b.res() ? 0 : 1);
        case FieldKind::quadratic_extension: {
            auto x = a.ext(), y = b.ext();
            if (x[0] != y[0]) return x[0] < y[0] ? -1 : 1;
            if (x[1] != y[1]) return x[1] < y[1] ? -1 : 1;
            return 0;
        }
    }
    return 0;
}

namespace {

std::string rat_str(const BigRat& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << "/" << denominator(q);
    return os.str();
}

// prints "", the coefficient text for a basis symbol ("i" or "u"): 1 -> "",
// -1 -> "-", otherwise the plain coefficient text
std::string coeff_prefix_rat(const BigRat& q) {
    if (q == 1) return "";
    if (q == -1) return "-";
    return rat_str(q);
}

}  // namespace

std::string Scalar::str() const {
    switch (field_.kind()) {
        case FieldKind::rationals: return rat_str(rat());
        case FieldKind::gaussian_rationals: {
            const auto& g = gauss();
            if (g.im == 0) return rat_str(g.re);
            std::string im_part = coeff_prefix_rat(g.im) + "i";
            if (g.re == 0) return im_part;
            std::string out = rat_str(g.re);
            if (g.im > 0) out += "+";
            return out + im_part;
        }
        case FieldKind::prime_field: return std::to_string(res());
        case FieldKind::quadratic_extension: {
            auto a = ext();
            if (a[1] == 0) return std::to_string(a[0]);
            std::string u_part = (a[1] == 1 ? "u" : std::to_string(a[1]) + "u");
            if (a[0] == 0) return u_part;
            return std::to_string(a[0]) + "+" + u_part;
        }
    }
    return "?";
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    bool done() const { return i >= s.size(); }
    char peek() const { return done() ? '\0' : s[i]; }
    char take() { return s[i++]; }
};

BigInt parse_digits(Cursor& c) {
    if (!std::isdigit(static_cast<unsigned char>(c.peek())))
        throw input_error("expected digits in scalar literal");
    BigInt v = 0;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek())))
        v = v * 10 + (c.take() - '0');
    return v;
}

// [digits][/digits]; the leading sign is handled by the caller
BigRat parse_unsigned_rat(Cursor& c) {
    BigInt num = parse_digits(c);
    if (c.peek() == '/') {
        c.take();
        BigInt den = parse_digits(c);
        if (den == 0) throw input_error("zero denominator");
        return BigRat(num, den);
    }
    return BigRat(num);
}

}  // namespace

Scalar Scalar::parse(const Field& f, const std::string& raw) {
    std::string text;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
    if (text.empty()) throw input_error("empty scalar literal");
    Cursor c{text};

    auto parse_term_sign = [&](bool first) -> int {
        int sign = 1;
        if (c.peek() == '+' || c.peek() == '-') {
            if (c.take() == '-') sign = -1;
        } else if (!first) {
            throw input_error("expected '+' or '-' between scalar terms");
        }
        return sign;
    };

    switch (f.kind()) {
        case FieldKind::rationals: {
            int sign = parse_term_sign(true);
            BigRat q = parse_unsigned_rat(c);
            if (!c.done()) throw input_error("trailing characters in rational literal");
            return from_rational(f, sign < 0 ? BigRat(-q) : q);
        }
        case FieldKind::gaussian_rationals: {
            BigRat re(0), im(0);
            bool first = true;
            while (!c.done()) {
                int sign = parse_term_sign(first);
                first = false;
                BigRat mag(1);
                bool has_digits = std::isdigit(static_cast<unsigned char>(c.peek()));
                if (has_digits) mag = parse_unsigned_rat(c);
                if (c.peek() == 'i') {
                    c.take();
                    im += sign < 0 ? BigRat(-mag) : mag;
                } else {
                    if (!has_digits) throw input_error("bad gaussian literal");
                    re += sign < 0 ? BigRat(-mag) : mag;
                }
            }
            return gaussian(f, re, im);
        }
        case FieldKind::prime_field: {
            int sign = parse_term_sign(true);
            BigInt v = parse_digits(c);
            if (!c.done()) throw input_error("trailing characters in residue literal");
            BigInt m = v % f.p();
            auto r = static_cast<std::int64_t>(m);
            return residue(f, sign < 0 ? -r : r);
        }
        case FieldKind::quadratic_extension: {
            std::int64_t a0 = 0, a1 = 0;
            bool first = true;
            while (!c.done()) {
                int sign = parse_term_sign(first);
                first = false;
                std::int64_t mag = 1;
                bool has_digits = std::isdigit(static_cast<unsigned char>(c.peek()));
                if (has_digits) mag = static_cast<std::int64_t>(parse_digits(c) % f.p());
                if (c.peek() == 'u') {
                    c.take();
                    a1 += sign * mag;
                } else {
                    if (!has_digits) throw input_error("bad extension literal");
                    a0 += sign * mag;
                }
            }
            return extension(f, a0, a1);
        }
    }
    throw input_error("unknown field kind");
}

std::pair<Scalar, Scalar> Scalar::fixed_coords() const {
    if (field_.identity_involution()) return {*this, zero(field_)};
    if (field_.kind() == FieldKind::gaussian_rationals) {
        return {from_rational(field_, gauss().re), from_rational(field_, gauss().im)};
    }
    // F_{p^2} with Frobenius: fixed field is F_p and w = u, so coordinates are
    // just the representation coefficients.
    auto a = ext();
    return {extension(field_, a[0], 0), extension(field_, a[1], 0)};
}

Scalar sample_nonfixed(const Field& f) {
    if (f.identity_involution())
        throw input_error("no element moves under the identity involution");
    if (f.kind() == FieldKind::gaussian_rationals)
        return Scalar::gaussian(f, BigRat(0), BigRat(1));
    if (f.kind() == FieldKind::quadratic_extension) {
        for (const Scalar& s : enumerate_field(f))
            if (s.conj() != s) return s;
        throw internal_error("Frobenius fixes all of F_{p^2}");
    }
    throw input_error("conjugation unavailable on this field");
}

std::vector<Scalar> enumerate_field(const Field& f) {
    if (!f.finite()) throw input_error("cannot enumerate an infinite field");
    std::vector<Scalar> out;
    if (f.kind() == FieldKind::prime_field) {
        out.reserve(static_cast<std::size_t>(f.p()));
        for (std::int64_t a = 0; a < f.p(); ++a) out.push_back(Scalar::residue(f, a));
    } else {
        out.reserve(static_cast<std::size_t>(f.p()) * static_cast<std::size_t>(f.p()));
        for (std::int64_t a0 = 0; a0 < f.p(); ++a0)
            for (std::int64_t a1 = 0; a1 < f.p(); ++a1)
                out.push_back(Scalar::extension(f, a0, a1));
    }
    return out;
}

Scalar Rng::scalar(const Field& f) {
    switch (f.kind()) {
        case FieldKind::rationals: {
            std::int64_t num = in_range(-8, 8);
            std::int64_t den = in_range(1, 4);
            return Scalar::from_rational(f, BigRat(num, den));
        }
        case FieldKind::gaussian_rationals: {
            BigRat re(in_range(-8, 8), in_range(1, 4));
            BigRat im(in_range(-8, 8), in_range(1, 4));
            return Scalar::gaussian(f, re, im);
        }
        case FieldKind::prime_field:
            return Scalar::residue(f, static_cast<std::int64_t>(below(f.size())));
        case FieldKind::quadratic_extension:
            return Scalar::extension(f, in_range(0, f.p() - 1), in_range(0, f.p() - 1));
    }
    throw internal_error("unreachable");
}

Scalar Rng::nonzero_scalar(const Field& f) {
    for (;;) {
        Scalar s = scalar(f);
        if (!s.is_zero()) return s;
    }
}

}  // namespace starcong
