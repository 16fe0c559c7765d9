#ifndef ALTERNATOR_ALTERNATOR_HPP
#define ALTERNATOR_ALTERNATOR_HPP

#include <optional>
#include <string>
#include <vector>

#include "alternator/algebra.hpp"
#include "alternator/forms.hpp"

namespace alternator {

/// S(A, sigma) = {x : sigma(x) x in F + Alt(A, sigma)} together with the
/// alternator form on a basis, and the intersection S' = S n Alt with its
/// form.  Because q is Frobenius-semilinear, the computed basis is
/// automatically a diagonalization: q(sum c_i f_i) = sum c_i^2 q_coeffs[i].
struct AlternatorData {
    Subspace s_basis;
    std::vector<FieldElement> q_coeffs;
    Subspace s_prime_basis;
    std::vector<FieldElement> q_prime_coeffs;

    TSQForm q_form() const { return TSQForm(s_basis.field(), q_coeffs); }
    TSQForm q_prime_form() const { return TSQForm(s_basis.field(), q_prime_coeffs); }
};

/// Computes S, q, S' and q' by Frobenius descent: x |-> sigma(x) x is
/// semilinear into A / (F + Alt), so S is the semilinear kernel of its basis
/// images and q(f) is the coefficient of 1 in sigma(f) f mod Alt.
/// Throws NotOrthogonal when 1 lies in Alt (the sum F + Alt degenerates).
AlternatorData alternator_subalgebra(const InvolutionAlgebra& a, Exec exec = Exec::parallel);

/// q_sigma(x) for an arbitrary element, or nullopt when x is outside S.
/// Membership in S and the value are decided together: sigma(x) x reduces
/// mod Alt to lambda * (1 mod Alt) exactly when x is in S.
std::optional<FieldElement> q_value(const InvolutionAlgebra& a, const Vec& x);

/// Kernel of psi(x) = class of sigma(x) x in A / Alt; sigma is direct iff
/// this kernel is zero.
Subspace psi_kernel(const InvolutionAlgebra& a, Exec exec = Exec::parallel);

/// Directness via ker psi = 0, cross-checked against the equivalent
/// condition that the q coefficients are F^2-independent.
bool is_direct(const InvolutionAlgebra& a, Exec exec = Exec::parallel);

/// The split-instance membership shortcut: x in S with q(x) = lambda iff
/// sum_k u_k^-1 x_{k i}^2 = u_i^-1 lambda for every column i.  An O(n^2)
/// test that never builds the descent system.
bool split_fast_membership(int n, const std::vector<FieldElement>& u_diag, const MatrixF& x,
                           const FieldElement& lambda);

enum class SFieldVerdict { field, not_field, inconclusive };

struct SFieldResult {
    SFieldVerdict verdict = SFieldVerdict::inconclusive;
    std::string detail;
    std::optional<Vec> witness;  // noncommuting product difference, or a nilpotent

    std::string str() const;
};

/// Field decision for a unital, multiplicatively closed subspace of A:
/// noncommutativity or a nilpotent disprove; if every basis square is scalar
/// the semilinear square map decides exactly; otherwise the iterated
/// Frobenius kernel finds the nilradical, and a reduced algebra with
/// non-scalar squares stays inconclusive.
SFieldResult commutative_field_test(const InvolutionAlgebra& a, const Subspace& sub,
                                    Exec exec = Exec::parallel);

/// commutative_field_test applied to S(A, sigma).
SFieldResult s_field_test(const AlternatorData& data, const InvolutionAlgebra& a,
                          Exec exec = Exec::parallel);

/// Alternating generators v_1, ..., v_n of the 2^n-dimensional subalgebra
/// Phi, their scalar squares alpha_i, and the Pfister form <<alpha_1, ...,
/// alpha_n>> built from them.
struct PhiData {
    std::vector<Vec> generators;
    std::vector<FieldElement> alphas;
    PfisterForm pf;
    Subspace phi_subalgebra;  // span of all subset products of the generators
};

/// Per-factor construction of PhiData over the provenance tree: quaternion
/// and 2x2-matrix leaves contribute their one-dimensional Alt generator, a
/// 2^m diagonal whose entries factor as subset products contributes one
/// generator per bit, tensor nodes embed factor generators, conjugations
/// transport them.  All PhiData invariants (alternating products,
/// commutation, 2^n span, self-centralizing) are verified before returning;
/// violations raise PhiConstructionFailed, unrecognized provenance raises
/// UnsupportedProvenance.
PhiData phi_and_pfister(const InvolutionAlgebra& a, Exec exec = Exec::parallel);

}  // namespace alternator

#endif
