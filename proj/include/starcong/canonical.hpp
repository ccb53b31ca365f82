#pragma once

#include <map>
#include <optional>

#include "starcong/cosquare.hpp"
#include "starcong/kappa.hpp"

namespace starcong {

enum class BlockType : std::uint8_t { type_i, type_ii, type_iii };

/// One canonical summand: a singular Jordan block J_n(0), a root-times-phi
/// block over an admissible Frobenius block, or a hyperbolic pair block
/// [[0, I], [F, 0]].
struct CanonicalBlock {
    BlockType type;
    std::size_t size = 0;   // realized matrix dimension
    IrreduciblePower ip;    // type_ii / type_iii (type_iii stores min(p, p_vee))
    PhiForm phi;            // type_ii only
    Matrix realized;

    static CanonicalBlock jordan_zero(const Field& f, std::size_t n);
    static CanonicalBlock root_phi(const IrreduciblePower& ip, PhiForm phi);
    static CanonicalBlock hyperbolic(const IrreduciblePower& ip);

    /// Fixed total order: type tag, deg p, p lex, t, phi lex (type_i by size).
    static int compare(const CanonicalBlock& a, const CanonicalBlock& b);
    /// Structural equality of the labels (not the realized matrices).
    static bool same_label(const CanonicalBlock& a, const CanonicalBlock& b);
};

/// A nonsingular S recorded with the exact claim S* source S = target.
struct CongruenceWitness {
    Matrix S;
    Matrix source;
    Matrix target;
    bool holds() const;
    void require() const;  // internal_error when the identity fails
};

/// The diagonal Hermitian data of one group of equal-(p, t) blocks, entries
/// as reduced residues in F[kappa].
struct HermitianGroup {
    IrreduciblePower ip;
    std::vector<Poly> diag;
};

struct Regularization {
    Matrix S;                               // S* A S = core + Jordan part
    Matrix core;                            // nonsingular
    std::vector<std::size_t> jordan_sizes;  // in emitted block order
};

/// Splits off the singular Jordan summands by verified *congruence sweeps.
Regularization regularize(const Matrix& A, Rng& rng);

struct Decomposition {
    Matrix S;  // S* A S = direct sum of blocks, in sorted order
    std::vector<CanonicalBlock> blocks;
    std::vector<HermitianGroup> hermitian;

    Matrix block_sum() const;
    CongruenceWitness witness(const Matrix& A) const;
};

/// Full canonical decomposition with an exact, verified witness.
Decomposition decompose(const Matrix& A, Rng& rng);

/// A matrix over F[kappa]; entries are reduced residues.
struct KappaMatrix {
    std::vector<std::vector<Poly>> a;
    std::size_t size() const { return a.size(); }
    static KappaMatrix identity(const KappaField& K, std::size_t s);
};

KappaMatrix kappa_mul(const KappaField& K, const KappaMatrix& x, const KappaMatrix& y);
/// Transpose with entrywise circle involution.
KappaMatrix kappa_adjoint(const KappaField& K, const KappaMatrix& x);

struct HermitianNormalForm {
    std::vector<Poly> diag;  // canonical representative entries
    KappaMatrix U;           // adjoint(U) * diag_in * U = diag, over F[kappa]
};

/// Canonical representative of a diagonal Hermitian form over a finite
/// F[kappa]: identity diagonal for a nontrivial involution; diag(1,..,1,d)
/// with d in {1, fixed nonsquare} for the trivial one.
HermitianNormalForm hermitian_normalize_finite(const KappaField& K,
                                               const std::vector<Poly>& diag);

struct LabelResult {
    bool determined = false;
    std::string label;  // complete invariant when determined
};

/// Complete invariant over finite fields; over Q and Q(i) the type II groups
/// are canonicalized only where cheap class tests decide, otherwise the
/// result is marked undetermined.
LabelResult canonical_label(const Matrix& A, Rng& rng);

enum class Verdict : std::uint8_t { yes, no, undetermined };

struct CongruenceAnswer {
    Verdict verdict = Verdict::undetermined;
    std::optional<Matrix> witness;  // verified when verdict == yes
    std::string detail;
};

CongruenceAnswer is_star_congruent(const Matrix& A, const Matrix& B, Rng& rng);

}  // namespace starcong
