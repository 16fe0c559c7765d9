#ifndef ALTERNATOR_ALGEBRA_HPP
#define ALTERNATOR_ALGEBRA_HPP

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "alternator/linalg.hpp"

namespace alternator {

class InvolutionAlgebra;
using AlgebraPtr = std::shared_ptr<const InvolutionAlgebra>;

/// Construction records.  Tensor and conjugate nodes keep the constituent
/// algebras alive so provenance-directed operations (split isotropy, the
/// fast split membership test, per-factor alternating generators) can reach
/// them.
struct MatrixProvenance {
    int n = 0;
    std::vector<FieldElement> u_diag;  // sigma = Int(diag(u)) . transpose
};
struct QuaternionProvenance {
    FieldElement a, b;  // [a, b): i^2 = i + a, j^2 = b, ji = ij + j
    Vec u;              // sigma = Int(u) . gamma, coordinates over 1, i, j, ij
};
struct TensorProvenance {
    AlgebraPtr left, right;
};
struct ConjugateProvenance {
    AlgebraPtr base;
    Vec g;  // sigma' = Int(g) . sigma . Int(g^-1)
};
using Provenance =
    std::variant<MatrixProvenance, QuaternionProvenance, TensorProvenance, ConjugateProvenance>;

struct AltSymSpaces {
    Subspace alt;  // image of x |-> x + sigma(x)
    Subspace sym;  // kernel of the same map; contains alt, dims add up to dim A
};

/// A finite-dimensional associative algebra over a field2 field with an
/// involution of the first kind, represented by structure constants over a
/// fixed basis e_0 .. e_{d-1} plus the matrix of sigma.  Immutable and
/// shareable after construction.  Every factory validates the algebra laws
/// (associativity, unit) and the involution laws (sigma^2 = id,
/// anti-multiplicativity, fixing scalars): exhaustively for dim <= 16, on a
/// fixed pseudo-random sample of triples above that.
class InvolutionAlgebra : public std::enable_shared_from_this<InvolutionAlgebra> {
public:
    /// M_n(F) on the matrix-unit basis E_11, E_12, ..., E_nn (row-major),
    /// with sigma(x) = u x^t u^-1 for u = diag(u_diag); sigma(E_ij) =
    /// (u_j / u_i) E_ji.  A zero diagonal entry is rejected.
    static AlgebraPtr matrix_algebra(const FieldPtr& field, int n,
                                     std::vector<FieldElement> u_diag);

    /// The quaternion algebra [a, b) on the basis 1, i, j, ij with
    /// i^2 = i + a, j^2 = b, ji = ij + j, and sigma = Int(u) . gamma where
    /// gamma(x) = Trd(x) + x is the canonical involution.  Requires b != 0,
    /// gamma(u) = u, u invertible, and u not scalar (else sigma would be
    /// symplectic).
    static AlgebraPtr quaternion_algebra(const FieldElement& a, const FieldElement& b,
                                         const Vec& u);

    /// Structure constants of lhs (x) rhs on the basis e_i (x) f_j (lhs index
    /// major) with the product involution sigma_lhs (x) sigma_rhs.
    static AlgebraPtr tensor(const AlgebraPtr& lhs, const AlgebraPtr& rhs);

    /// The same algebra with involution Int(g) . sigma . Int(g^-1); the map
    /// x |-> g x g^-1 is then an isomorphism of algebras with involution
    /// from base onto the result.
    static AlgebraPtr conjugate(const AlgebraPtr& base, const Vec& g);

    const FieldPtr& field() const { return field_; }
    int dim() const { return dim_; }
    const Vec& unit() const { return unit_; }
    const MatrixF& invol_matrix() const { return invol_; }
    const Provenance& provenance() const { return provenance_; }

    /// Coordinates of e_i * e_j.
    const Vec& basis_product(int i, int j) const { return mult_[i * dim_ + j]; }
    Vec zero_vec() const;
    Vec basis_vec(int i) const;
    Vec scalar_vec(const FieldElement& c) const;
    /// c with x = c * 1 when x is scalar, nullopt otherwise.
    std::optional<FieldElement> as_scalar(const Vec& x) const;

    Vec multiply(const Vec& x, const Vec& y) const;
    Vec apply_invol(const Vec& x) const;
    /// The two-sided inverse of x, or nullopt when x is not a unit.
    std::optional<Vec> inverse(const Vec& x) const;

    const AltSymSpaces& alt_sym() const { return altsym_; }
    /// 1 not in Alt(A, sigma).
    bool is_orthogonal() const { return orthogonal_; }

private:
    InvolutionAlgebra() = default;
    void validate() const;
    void finish();  // validate, then fill the Alt/Sym cache

    FieldPtr field_;
    int dim_ = 0;
    std::vector<Vec> mult_;  // d*d entries, row-major in (i, j)
    Vec unit_;
    MatrixF invol_;  // column j = coordinates of sigma(e_j)
    Provenance provenance_;
    AltSymSpaces altsym_;
    bool orthogonal_ = false;
};

struct SplitIsotropyResult {
    bool isotropic = false;
    /// For isotropic instances: a verified nonzero x with sigma(x) x = 0,
    /// in algebra coordinates.
    std::optional<Vec> witness;
};

/// Isotropy of sigma for matrix provenance, decided through the adjoint
/// diagonal bilinear form; the witness is the rank-one map built from an
/// isotropic vector.  Throws UnsupportedProvenance otherwise.
SplitIsotropyResult split_isotropy(const InvolutionAlgebra& a);

/// Kronecker product of coordinate vectors: entry [i * dim(y) + j] = x_i y_j.
Vec kron_vec(const Vec& x, const Vec& y);

}  // namespace alternator

#endif
