#pragma once

#include <utility>
#include <vector>

#include "starcong/scalar.hpp"

namespace starcong {

/// Univariate polynomial over a Field, coefficients constant term first.
/// Always normalized: no trailing zero coefficients; degree of the zero
/// polynomial is -1.
class Poly {
  public:
    Poly() = default;
    explicit Poly(const Field& f) : field_(f) {}
    Poly(const Field& f, std::vector<Scalar> coeffs);

    static Poly zero(const Field& f) { return Poly(f); }
    static Poly constant(const Scalar& c);
    static Poly x(const Field& f);
    /// x - a
    static Poly x_minus(const Scalar& a);
    static Poly from_int_coeffs(const Field& f, const std::vector<std::int64_t>& c);

    const Field& field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return degree() == 0 && c_[0].is_one(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    const Scalar& operator[](std::size_t k) const { return c_[k]; }
    /// Coefficient of x^k, zero beyond the degree.
    Scalar coeff(std::size_t k) const;
    const Scalar& leading() const;
    const std::vector<Scalar>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Scalar& s) const;
    bool operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Quotient and remainder; input_error on zero divisor.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }
    bool divides(const Poly& f) const;

    Poly pow(std::uint64_t e) const;
    Poly monic() const;
    Poly derivative() const;
    Scalar eval(const Scalar& x) const;

    /// Coefficientwise involution.
    Poly conj() const;

    /// The reciprocal adjoint of a monic polynomial with nonzero constant
    /// term; an involution on its domain.
    Poly vee() const;
    bool self_adjoint() const { return *this == vee(); }

    /// Deterministic total order: degree first, then coefficient lex from
    /// the constant term.
    static int compare(const Poly& a, const Poly& b);

    std::string str() const;                                   // "x^2+3x+2"
    static Poly parse(const Field& f, const std::string& text);

  private:
    Field field_;
    std::vector<Scalar> c_;
    void trim();
};

/// Monic gcd.
Poly gcd(const Poly& a, const Poly& b);

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
std::array<Poly, 3> xgcd(const Poly& a, const Poly& b);

/// Arithmetic in F[x]/(modulus). Elements are reduced representatives.
class PolyQuotient {
  public:
    explicit PolyQuotient(Poly modulus);

    const Poly& modulus() const { return m_; }
    const Field& field() const { return m_.field(); }

    Poly reduce(const Poly& f) const { return f % m_; }
    Poly add(const Poly& a, const Poly& b) const { return reduce(a + b); }
    Poly sub(const Poly& a, const Poly& b) const { return reduce(a - b); }
    Poly mul(const Poly& a, const Poly& b) const { return reduce(a * b); }
    Poly pow(const Poly& a, const BigInt& e) const;
    /// input_error if a is not invertible modulo the modulus.
    Poly inv(const Poly& a) const;
    bool is_unit(const Poly& a) const;

    /// The ring involution f(x) -> conj(f)(x^{-1}); requires x invertible,
    /// i.e. modulus(0) != 0.
    Poly star(const Poly& a) const;
    Poly x_inverse() const;

  private:
    Poly m_;
};

struct PolyFactor {
    Poly p;        // monic irreducible
    int mult = 1;
};

/// Monic irreducible factors with multiplicities; the product times the
/// leading coefficient reconstructs the input. Over Q and Q(i) the degree is
/// capped (degree_cap_error beyond 12); finite fields have no cap.
std::vector<PolyFactor> factor(const Poly& f, Rng& rng);

bool is_irreducible(const Poly& f, Rng& rng);

/// Monic irreducibles of the given degree over a finite field, in the
/// deterministic enumeration order of the coefficient tuples.
std::vector<Poly> irreducibles_of_degree(const Field& f, int deg, Rng& rng);

}  // namespace starcong
