#ifndef ALTERNATOR_FORMS_HPP
#define ALTERNATOR_FORMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "alternator/linalg.hpp"

namespace alternator {

/// Diagonal symmetric bilinear form <a1,...,an>: b(x, y) = sum ai xi yi.
/// On the diagonal b(v, v) = sum ai vi^2, so the nonzero values form the
/// F^2-span of the coefficients.
class BilinDiagForm {
public:
    BilinDiagForm(FieldPtr field, std::vector<FieldElement> coeffs);

    std::size_t dim() const { return coeffs_.size(); }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    const FieldPtr& field() const { return field_; }

    FieldElement eval(const Vec& x, const Vec& y) const;
    FieldElement diag_value(const Vec& v) const { return eval(v, v); }

    /// True iff b(v, v) = 0 for some nonzero v, i.e. the coefficients are
    /// F^2-linearly dependent.
    bool is_isotropic() const;
    /// A nonzero v with b(v, v) = 0, when one exists.
    std::optional<Vec> isotropic_vector() const;

    std::string str() const;

private:
    FieldPtr field_;
    std::vector<FieldElement> coeffs_;
};

/// Bilinear Pfister form <<a1,...,an>> = tensor of <1, ai>; slots nonzero.
class PfisterForm {
public:
    PfisterForm(FieldPtr field, std::vector<FieldElement> slots);

    std::size_t nslots() const { return slots_.size(); }
    const std::vector<FieldElement>& slots() const { return slots_; }
    const FieldPtr& field() const { return field_; }

    /// The 2^n subset products; entry j is the product of slots[i] over the
    /// set bits i of j, so entry 0 is 1.
    BilinDiagForm expand() const;
    /// The expansion minus its leading 1 (2^n - 1 coefficients).
    BilinDiagForm pure_subform() const;

    /// Anisotropic iff the expansion coefficients span a 2^n-dimensional
    /// F^2-space.
    bool is_anisotropic() const;

    /// Isometry decision.  Equal slot multisets are isometric (reordered
    /// tensor factors); forms of mixed isotropy are not; two anisotropic
    /// forms are isometric iff their pure subforms have equal F^2-value
    /// spans (equal full spans do not suffice: <<t>> and <<t+1>> share the
    /// value span F^2 + F^2 t but their determinants lie in different
    /// square classes).  Distinct-slot isotropic pairs are undecided and
    /// raise InvalidForm.
    bool isometric(const PfisterForm& o) const;

    std::string str() const;

private:
    FieldPtr field_;
    std::vector<FieldElement> slots_;
};

/// Totally singular (quasilinear) quadratic form <a1,...,an>_q:
/// q(x) = sum ai xi^2; zero coefficients allowed.
class TSQForm {
public:
    TSQForm(FieldPtr field, std::vector<FieldElement> coeffs);

    std::size_t dim() const { return coeffs_.size(); }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    const FieldPtr& field() const { return field_; }

    FieldElement eval(const Vec& x) const;

    /// Classification of totally singular forms: isometric iff equal
    /// dimension and equal F^2-span of values.
    bool isometric(const TSQForm& o) const;

    /// True iff this form is isometric to <1>_q + (n^2 - n) x <0>_q.
    bool matches_transpose_profile(std::size_t n) const;

    std::string str() const;

private:
    FieldPtr field_;
    std::vector<FieldElement> coeffs_;
};

}  // namespace alternator

#endif
