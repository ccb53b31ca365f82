#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace starcong {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Malformed or out-of-contract input (bad syntax, mixed fields, singular
/// matrix where a nonsingular one is required, ...).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A verified identity failed or a search that must succeed did not.
/// Indicates a bug, never a bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Raised when polynomial factorization over an infinite field exceeds the
/// supported degree cap.
struct degree_cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class FieldKind : std::uint8_t {
    rationals,
    gaussian_rationals,
    prime_field,
    quadratic_extension,
};

enum class Involution : std::uint8_t {
    identity,
    conjugation,  // complex conjugation on Q(i), Frobenius a -> a^p on F_{p^2}
};

/// Description of a supported exact field of characteristic != 2 together
/// with its involution. Small value type, freely copyable; two scalars may
/// interoperate iff their Field compares equal.
class Field {
  public:
    Field() : kind_(FieldKind::rationals), inv_(Involution::identity), p_(0), m0_(0), m1_(0) {}

    static Field rationals();
    static Field gaussian_rationals(Involution inv);
    /// F_p, p an odd prime. Identity involution only (Frobenius is trivial).
    static Field prime_field(std::int64_t p);
    /// F_{p^2} = F_p[u]/(u^2 + m1*u + m0); the modulus must be irreducible.
    static Field quadratic_extension(std::int64_t p, std::int64_t m0, std::int64_t m1,
                                     Involution inv);

    FieldKind kind() const { return kind_; }
    Involution involution() const { return inv_; }
    bool identity_involution() const { return inv_ == Involution::identity; }

    std::int64_t characteristic() const { return p_; }  // 0 for Q, Q(i)
    std::int64_t p() const { return p_; }
    std::int64_t modulus_c0() const { return m0_; }
    std::int64_t modulus_c1() const { return m1_; }

    bool finite() const {
        return kind_ == FieldKind::prime_field || kind_ == FieldKind::quadratic_extension;
    }
    /// Number of elements; input_error on infinite fields.
    std::uint64_t size() const;

    bool operator==(const Field& o) const {
        return kind_ == o.kind_ && inv_ == o.inv_ && p_ == o.p_ && m0_ == o.m0_ && m1_ == o.m1_;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string describe() const;

  private:
    FieldKind kind_;
    Involution inv_;
    std::int64_t p_;
    std::int64_t m0_, m1_;  // quadratic modulus coefficients, constant first
};

struct GaussRat {
    BigRat re, im;
    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
};

/// An element of a Field in canonical reduced form. Immutable value type;
/// all operations are pure and exact.
class Scalar {
  public:
    Scalar() = default;

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar from_int(const Field& f, std::int64_t n);
    static Scalar from_rational(const Field& f, const BigRat& q);  // Q and Q(i) only
    static Scalar gaussian(const Field& f, const BigRat& re, const BigRat& im);
    static Scalar residue(const Field& f, std::int64_t a);                   // F_p
    static Scalar extension(const Field& f, std::int64_t a0, std::int64_t a1);  // F_{p^2}

    const Field& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // input_error on zero divisor
    Scalar operator-() const;
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// The field involution a -> conj(a); conj(conj(a)) == a.
    Scalar conj() const;
    bool is_fixed() const { return conj() == *this; }

    Scalar pow(std::int64_t e) const;  // e < 0 requires nonzero

    /// Total order used only for deterministic sorting and tie-breaking
    /// (rationals by value, composite reps lexicographically).
    static int compare(const Scalar& a, const Scalar& b);

    /// Canonical text form; parse() accepts exactly the grammar documented
    /// in the README ("-2/3", "1/2+3/4i", "5", "2+u", ...).
    std::string str() const;
    static Scalar parse(const Field& f, const std::string& text);

    // Coordinates over the fixed subfield, basis {1, w} with w = sample_nonfixed.
    // For identity involutions the second coordinate is zero.
    std::pair<Scalar, Scalar> fixed_coords() const;

    const BigRat& rat() const;       // rationals only
    const GaussRat& gauss() const;   // gaussian only
    std::int64_t res() const;        // prime field only
    std::array<std::int64_t, 2> ext() const;  // quadratic extension only

  private:
    friend Scalar sample_nonfixed(const Field&);
    Field field_;
    std::variant<BigRat, GaussRat, std::int64_t, std::array<std::int64_t, 2>> v_;

    void check_same_field(const Scalar& o) const;
};

/// Deterministic element b with b != conj(b) (smallest in enumeration order
/// for finite fields, i for Q(i)); input_error under the identity involution.
Scalar sample_nonfixed(const Field& f);

/// Every element exactly once in the documented deterministic order;
/// input_error for infinite fields.
std::vector<Scalar> enumerate_field(const Field& f);

/// Seeded random source shared by factorization and search fallbacks, so
/// whole runs are reproducible from a single CLI seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed = 0) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return n ? eng_() % n : 0; }
    std::int64_t in_range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    /// Random element; for infinite fields, small numerators/denominators.
    Scalar scalar(const Field& f);
    /// Random nonzero element.
    Scalar nonzero_scalar(const Field& f);

  private:
    std::mt19937_64 eng_;
};

}  // namespace starcong
