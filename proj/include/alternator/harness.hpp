#ifndef ALTERNATOR_HARNESS_HPP
#define ALTERNATOR_HARNESS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "alternator/alternator.hpp"
#include "alternator/rng.hpp"

namespace alternator {

struct SuiteVerdict {
    std::string verdict;  // "pass" | "fail" | "skipped"
    std::string witness;  // fail: the violating data; skipped: the reason; may
                          // carry notes on pass (e.g. which side of a
                          // biconditional was agreed on)
    bool operator==(const SuiteVerdict&) const = default;
};

/// A suite verdict together with the individual condition values it
/// evaluated, so callers can assert agreement-on-false as well as
/// agreement-on-true.
struct SuiteRun {
    SuiteVerdict summary;
    std::vector<std::pair<std::string, bool>> conditions;

    bool condition(const std::string& name) const;  // throws if absent
    bool has_condition(const std::string& name) const;
};

struct CheckReport {
    std::string instance_id;
    std::size_t dim_s = 0;
    std::vector<std::string> q_sigma;
    std::vector<std::string> q_prime;
    bool direct = false;
    std::string s_field;
    std::optional<std::vector<std::string>> pf_slots;  // absent when the
                                                       // provenance gives no
                                                       // Pfister invariant
    std::map<std::string, SuiteVerdict> suites;

    nlohmann::json to_json() const;
    static CheckReport from_json(const nlohmann::json& doc);
    bool all_pass() const;  // no suite reported "fail"
    bool operator==(const CheckReport&) const = default;
};

/// Computes the invariant block of a report (dim S, q, q', directness,
/// field verdict, Pfister slots when supported) without running suites.
CheckReport compute_invariants(const AlgebraPtr& A, const std::string& id,
                               Exec exec = Exec::parallel);

/// Directness three ways (kernel of psi, F^2-independence of the q
/// coefficients, field test on S) plus the clause that all S-basis squares
/// are scalar when the conditions hold; passes iff every conclusive verdict
/// agrees.
SuiteRun suite_theorem_direct(const AlgebraPtr& A, Exec exec = Exec::parallel);

/// The eight equivalent conditions for totally decomposable involutions
/// (anisotropy of sigma / directness / Pfister and q anisotropy / Phi and S
/// fields / Phi = S / S inside Sym); condition (1) runs only on split
/// provenance and is skipped otherwise.  Throws UnsupportedProvenance when
/// no Pfister invariant exists.
SuiteRun suite_theorem_isotropic(const AlgebraPtr& A, Exec exec = Exec::parallel);

/// Equality of represented values D(q_sigma) = Q(Pf) via F^2-span
/// comparison.  Throws UnsupportedProvenance.
SuiteRun suite_prop_qp(const AlgebraPtr& A, Exec exec = Exec::parallel);

/// The span comparison behind suite_prop_qp, exposed so corrupted
/// coefficient lists can exercise the fail path.
SuiteRun qp_compare(const FieldPtr& F, const std::vector<FieldElement>& q_coeffs,
                    const std::vector<FieldElement>& pf_coeffs, Exec exec = Exec::parallel);

/// Transpose recognition: compares the computed q profile against the
/// ground truth read off u_diag (proportional to the identity: expected
/// true; F^2-independent entries: expected false; otherwise skipped).
/// Skipped on non-matrix provenance.
SuiteRun suite_theorem_tran(const AlgebraPtr& A, Exec exec = Exec::parallel);

/// Classification checks on a pair over one field: conjugate pairs must
/// have isometric q and q'; when both Pfister invariants are anisotropic,
/// q'-isometry must coincide with Pfister isometry; otherwise q-isometry
/// must imply Pfister isometry.  Throws UnsupportedProvenance.
SuiteRun suite_classification(const AlgebraPtr& A, const AlgebraPtr& B,
                              Exec exec = Exec::parallel);

/// Hard-coded regressions: the 4x4 anisotropic example (membership, value
/// beta^-1, non-symmetry, directness), the rank-3 diagonal with S = F, and
/// the transpose profile for n in {2,3,4} over GF(2) and GF(2)(t).  The
/// invariant block describes the 4x4 example.
CheckReport regression_fixtures();

/// Seeded generators.  Bounds: matrix degree <= 4, tensor factors <= 3
/// (dimension <= 64), <= 3 function-field variables, sampled element
/// degrees <= 4.
FieldPtr sample_field(Sampler& s);
AlgebraPtr sample_split_instance(Sampler& s);
AlgebraPtr sample_decomposable_instance(Sampler& s, int max_factors = 3);
/// Two decomposable instances over one (non-perfect) field, both with
/// anisotropic Pfister invariant.
std::pair<AlgebraPtr, AlgebraPtr> sample_anisotropic_pair(Sampler& s);
/// A random invertible element of the form 1 + c e_j.  Sparse on purpose:
/// inverting a dense element over a function field produces huge rational
/// entries, and every product in the conjugated algebra inherits them.
Vec sample_sparse_unit(Sampler& s, const InvolutionAlgebra& a);

/// Regression fixtures plus a bounded randomized batch of every suite;
/// returns the rendered JSON document (reports sorted by instance id, keys
/// sorted, trailing newline) and whether every verdict passed.
std::pair<std::string, bool> run_selftest(std::uint64_t seed);

}  // namespace alternator

#endif
