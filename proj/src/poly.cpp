#include "starcong/poly.hpp"

#include <algorithm>
#include <sstream>

namespace starcong {

Poly::Poly(const Field& f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) {
    for (const Scalar& s : c_)
        if (s.field() != field_) throw input_error("mixed fields in polynomial");
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Scalar& c) {
    Poly p(c.field());
    if (!c.is_zero()) p.c_ = {c};
    return p;
}

Poly Poly::x(const Field& f) {
    Poly p(f);
    p.c_ = {Scalar::zero(f), Scalar::one(f)};
    return p;
}

Poly Poly::x_minus(const Scalar& a) {
    Poly p(a.field());
    p.c_ = {-a, Scalar::one(a.field())};
    return p;
}

Poly Poly::from_int_coeffs(const Field& f, const std::vector<std::int64_t>& c) {
    std::vector<Scalar> v;
    v.reserve(c.size());
    for (std::int64_t n : c) v.push_back(Scalar::from_int(f, n));
    return Poly(f, std::move(v));
}

Scalar Poly::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : Scalar::zero(field_);
}

const Scalar& Poly::leading() const {
    if (c_.empty()) throw input_error("zero polynomial has no leading coefficient");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    if (field_ != o.field_) throw input_error("mixed fields in polynomial arithmetic");
    Poly r(field_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), Scalar::zero(field_));
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = coeff(k) + o.coeff(k);
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r(field_);
    r.c_.reserve(c_.size());
    for (const Scalar& s : c_) r.c_.push_back(-s);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (field_ != o.field_) throw input_error("mixed fields in polynomial arithmetic");
    if (is_zero() || o.is_zero()) return Poly(field_);
    Poly r(field_);
    r.c_.assign(c_.size() + o.c_.size() - 1, Scalar::zero(field_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

Poly Poly::operator*(const Scalar& s) const {
    Poly r(field_);
    r.c_.reserve(c_.size());
    for (const Scalar& a : c_) r.c_.push_back(a * s);
    r.trim();
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw input_error("polynomial division by zero");
    Poly q(field_), r = *this;
    if (r.degree() < d.degree()) return {q, r};
    q.c_.assign(static_cast<std::size_t>(r.degree() - d.degree() + 1), Scalar::zero(field_));
    Scalar lc_inv = d.leading().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
        Scalar f = r.leading() * lc_inv;
        q.c_[shift] = f;
        for (std::size_t k = 0; k < d.c_.size(); ++k)
            r.c_[shift + k] = r.c_[shift + k] - f * d.c_[k];
        r.trim();
    }
    q.trim();
    return {q, r};
}

bool Poly::divides(const Poly& f) const { return f.divmod(*this).second.is_zero(); }

Poly Poly::pow(std::uint64_t e) const {
    Poly acc = Poly::constant(Scalar::one(field_));
    Poly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

Poly Poly::derivative() const {
    Poly r(field_);
    if (degree() < 1) return r;
    r.c_.reserve(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        r.c_.push_back(c_[k] * Scalar::from_int(field_, static_cast<std::int64_t>(k)));
    r.trim();
    return r;
}

Scalar Poly::eval(const Scalar& x) const {
    Scalar acc = Scalar::zero(field_);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

Poly Poly::conj() const {
    Poly r(field_);
    r.c_.reserve(c_.size());
    for (const Scalar& s : c_) r.c_.push_back(s.conj());
    r.trim();
    return r;
}

Poly Poly::vee() const {
    if (!is_monic()) throw input_error("vee requires a monic polynomial");
    if (coeff(0).is_zero()) throw input_error("vee requires a nonzero constant term");
    std::size_t n = c_.size();  // degree + 1
    std::vector<Scalar> rc(n, Scalar::zero(field_));
    Scalar an_bar_inv = c_[0].conj().inverse();
    // coefficient of x^k is conj(a_{n-k}) / conj(a_n), with a_j the
    // coefficient of x^{n-j} in this polynomial
    for (std::size_t k = 0; k < n; ++k) rc[k] = c_[n - 1 - k].conj() * an_bar_inv;
    return Poly(field_, std::move(rc));
}

int Poly::compare(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t k = 0; k < a.c_.size(); ++k) {
        int c = Scalar::compare(a.c_[k], b.c_[k]);
        if (c) return c;
    }
    return 0;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        std::string cs = c_[k].str();
        bool neg = cs.size() > 1 && cs[0] == '-' && cs.find('+', 1) == std::string::npos &&
                   cs.find('-', 1) == std::string::npos;
        if (!first) os << (neg ? "" : "+");
        bool composite = cs.find('+') != std::string::npos ||
                         (cs.find('-') != std::string::npos && cs[0] != '-') ||
                         (cs.size() > 1 && cs.find('-', 1) != std::string::npos);
        if (k == 0) {
            if (composite)
                os << "(" << cs << ")";
            else
                os << cs;
        } else {
            if (composite)
                os << "(" << cs << ")";
            else if (cs == "1")
                ;  // implicit coefficient
            else if (cs == "-1")
                os << "-";
            else
                os << cs;
            os << "x";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

Poly Poly::parse(const Field& f, const std::string& raw) {
    std::string text;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
    if (text.empty()) throw input_error("empty polynomial literal");

    std::vector<Scalar> coeffs;
    auto add_term = [&](const Scalar& c, std::size_t k) {
        if (coeffs.size() <= k) coeffs.resize(k + 1, Scalar::zero(f));
        coeffs[k] = coeffs[k] + c;
    };

    std::size_t i = 0;
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw input_error("expected '+' or '-' between polynomial terms");
        }
        first = false;
        Scalar c = Scalar::one(f);
        bool have_coeff = false;
        if (text[i] == '(') {
            std::size_t close = text.find(')', i);
            if (close == std::string::npos) throw input_error("unbalanced parenthesis");
            c = Scalar::parse(f, text.substr(i + 1, close - i - 1));
            i = close + 1;
            have_coeff = true;
        } else {
            std::size_t j = i;
            while (j < text.size() && text[j] != 'x' && text[j] != '+' && text[j] != '-') ++j;
            if (j > i) {
                c = Scalar::parse(f, text.substr(i, j - i));
                have_coeff = true;
                i = j;
            }
        }
        std::size_t k = 0;
        if (i < text.size() && text[i] == 'x') {
            ++i;
            k = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                std::size_t j = i;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                if (j == i) throw input_error("missing exponent");
                k = static_cast<std::size_t>(std::stoul(text.substr(i, j - i)));
                i = j;
            }
        } else if (!have_coeff) {
            throw input_error("empty polynomial term");
        }
        add_term(sign < 0 ? -c : c, k);
    }
    return Poly(f, std::move(coeffs));
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = y;
        y = r;
    }
    return x.monic();
}

std::array<Poly, 3> xgcd(const Poly& a, const Poly& b) {
    const Field& f = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(Scalar::one(f)), s1 = Poly::zero(f);
    Poly t0 = Poly::zero(f), t1 = Poly::constant(Scalar::one(f));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = r1;
        r1 = r;
        Poly s = s0 - q * s1;
        s0 = s1;
        s1 = s;
        Poly t = t0 - q * t1;
        t0 = t1;
        t1 = t;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Scalar lc_inv = r0.leading().inverse();
    return {r0 * lc_inv, s0 * lc_inv, t0 * lc_inv};
}

PolyQuotient::PolyQuotient(Poly modulus) : m_(std::move(modulus)) {
    if (m_.degree() < 1) throw input_error("quotient modulus must have degree >= 1");
}

Poly PolyQuotient::pow(const Poly& a, const BigInt& e) const {
    if (e < 0) return pow(inv(a), -e);
    Poly acc = Poly::constant(Scalar::one(field()));
    Poly base = reduce(a);
    BigInt k = e;
    while (k > 0) {
        if ((k & 1) != 0) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

Poly PolyQuotient::inv(const Poly& a) const {
    auto [g, s, t] = xgcd(reduce(a), m_);
    (void)t;
    if (g.degree() != 0) throw input_error("element not invertible in quotient ring");
    return reduce(s * g.coeff(0).inverse());
}

bool PolyQuotient::is_unit(const Poly& a) const {
    Poly r = reduce(a);
    if (r.is_zero()) return false;
    return gcd(r, m_).degree() == 0;
}

Poly PolyQuotient::x_inverse() const {
    if (m_.coeff(0).is_zero()) throw input_error("x is not invertible modulo this modulus");
    return inv(Poly::x(field()));
}

Poly PolyQuotient::star(const Poly& a) const {
    Poly xb = x_inverse();
    Poly ac = reduce(a).conj();
    // Horner at x^{-1}
    Poly acc = Poly::zero(field());
    for (std::size_t k = ac.coeffs().size(); k-- > 0;)
        acc = add(mul(acc, xb), Poly::constant(ac[k]));
    return acc;
}

}  // namespace starcong
