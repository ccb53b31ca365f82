#pragma once

#include "starcong/matrix.hpp"

namespace starcong {

/// The residue field F[kappa] = F[x]/(p) carrying the involution
/// f(kappa) -> conj(f)(kappa^{-1}). Requires p(0) != 0.
class KappaField {
  public:
    explicit KappaField(Poly p);

    const Poly& modulus() const { return ring_.modulus(); }
    const Field& base() const { return ring_.field(); }
    const PolyQuotient& ring() const { return ring_; }

    Poly reduce(const Poly& f) const { return ring_.reduce(f); }
    Poly add(const Poly& a, const Poly& b) const { return ring_.add(a, b); }
    Poly sub(const Poly& a, const Poly& b) const { return ring_.sub(a, b); }
    Poly mul(const Poly& a, const Poly& b) const { return ring_.mul(a, b); }
    Poly inv(const Poly& a) const { return ring_.inv(a); }
    Poly div(const Poly& a, const Poly& b) const { return ring_.mul(a, ring_.inv(b)); }

    /// The circle involution.
    Poly conj(const Poly& a) const { return ring_.star(a); }
    bool is_fixed(const Poly& a) const { return conj(a) == reduce(a); }

    /// Whether the circle involution is the identity map on F[kappa].
    bool involution_trivial() const;

  private:
    PolyQuotient ring_;
};

/// The symmetric Laurent normal form of a circle-fixed residue:
/// phi(x) = conj(b_r) x^{-r} + ... + b_0 + ... + b_r x^r with r = deg(p)/2,
/// b_0 fixed, and the documented constraint on b_r for even-degree p.
struct PhiForm {
    Poly p;                 // modulus
    std::vector<Scalar> b;  // b_0 .. b_r

    std::size_t r() const { return b.empty() ? 0 : b.size() - 1; }
    bool is_zero() const;
    /// phi(kappa) as a reduced residue mod p.
    Poly residue() const;
    /// phi(x) as an element of F[x]/(modulus), e.g. modulus = p^t.
    Poly in_ring(const PolyQuotient& R) const;
    /// sum b_j F^j + conj(b_j) F^{-j}; F must be nonsingular.
    Matrix eval_at(const Matrix& F) const;
    /// Enforce the b_0 / b_r constraints; internal_error on violation.
    void validate() const;

    static int compare(const PhiForm& a, const PhiForm& b);
    bool operator==(const PhiForm& o) const { return p == o.p && b == o.b; }
};

/// The unique PhiForm representing a circle-fixed residue f; input_error if
/// f is not fixed, internal_error if the representation system degenerates.
PhiForm phi_representation(const KappaField& K, const Poly& f);

}  // namespace starcong
