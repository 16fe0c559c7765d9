#include "alternator/forms.hpp"

namespace alternator {
namespace {

void check_entries(const FieldPtr& field, const std::vector<FieldElement>& xs) {
    for (const auto& x : xs)
        if (!x.field() || !(*x.field() == *field))
            throw FieldMismatch("form coefficient from a different field");
}

// Equality of F^2-spans via ranks of the stacked coordinate systems.
bool same_f2span(const FieldPtr& field, const std::vector<FieldElement>& a,
                 const std::vector<FieldElement>& b) {
    std::vector<FieldElement> all = a;
    all.insert(all.end(), b.begin(), b.end());
    const std::size_t da = f2span_dim(field, a);
    const std::size_t db = f2span_dim(field, b);
    return da == db && db == f2span_dim(field, all);
}

}  // namespace

// --- BilinDiagForm ---------------------------------------------------------

BilinDiagForm::BilinDiagForm(FieldPtr field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    check_entries(field_, coeffs_);
}

FieldElement BilinDiagForm::eval(const Vec& x, const Vec& y) const {
    if (x.size() != coeffs_.size() || y.size() != coeffs_.size())
        throw DimensionMismatch("form argument dimension mismatch");
    FieldElement acc = field_->zero();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) acc += coeffs_[i] * x[i] * y[i];
    return acc;
}

bool BilinDiagForm::is_isotropic() const {
    if (coeffs_.empty()) return false;
    return f2span_dim(field_, coeffs_) < coeffs_.size();
}

std::optional<Vec> BilinDiagForm::isotropic_vector() const {
    if (coeffs_.empty()) return std::nullopt;
    std::vector<Vec> images;
    images.reserve(coeffs_.size());
    for (const auto& c : coeffs_) images.push_back(Vec{c});
    const Subspace ker = semilinear_kernel(field_, images);
    if (ker.dim() == 0) return std::nullopt;
    return ker.basis().front();
}

std::string BilinDiagForm::str() const {
    std::string out = "<";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ",";
        out += coeffs_[i].str();
    }
    return out + ">";
}

// --- PfisterForm -----------------------------------------------------------

PfisterForm::PfisterForm(FieldPtr field, std::vector<FieldElement> slots)
    : field_(std::move(field)), slots_(std::move(slots)) {
    check_entries(field_, slots_);
    for (const auto& s : slots_)
        if (s.is_zero()) throw InvalidForm("Pfister slot must be nonzero");
}

BilinDiagForm PfisterForm::expand() const {
    const std::size_t n = slots_.size();
    std::vector<FieldElement> coeffs;
    coeffs.reserve(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        FieldElement p = field_->one();
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) p *= slots_[i];
        coeffs.push_back(p);
    }
    return BilinDiagForm(field_, std::move(coeffs));
}

BilinDiagForm PfisterForm::pure_subform() const {
    std::vector<FieldElement> coeffs = expand().coeffs();
    coeffs.erase(coeffs.begin());
    return BilinDiagForm(field_, std::move(coeffs));
}

bool PfisterForm::is_anisotropic() const {
    return f2span_dim(field_, expand().coeffs()) == (std::size_t{1} << slots_.size());
}

bool PfisterForm::isometric(const PfisterForm& o) const {
    if (slots_.size() != o.slots_.size())
        throw DimensionMismatch("Pfister forms with different slot counts");
    if (!(*field_ == *o.field_)) throw FieldMismatch("forms over different fields");

    // Reordering the slots permutes the tensor factors, an isometry.
    std::vector<bool> used(o.slots_.size(), false);
    bool permuted = true;
    for (const auto& s : slots_) {
        bool found = false;
        for (std::size_t j = 0; j < o.slots_.size() && !found; ++j)
            if (!used[j] && o.slots_[j] == s) used[j] = found = true;
        if (!found) {
            permuted = false;
            break;
        }
    }
    if (permuted) return true;

    // Anisotropy transports along isometries, and anisotropic forms are
    // classified by the value span of the pure subform (the full spans can
    // coincide while the pure ones differ, e.g. <<t>> and <<t+1>>, whose
    // determinants t and t+1 lie in different square classes).
    const bool a = is_anisotropic(), b = o.is_anisotropic();
    if (a != b) return false;
    if (a) return same_f2span(field_, pure_subform().coeffs(), o.pure_subform().coeffs());
    throw InvalidForm("no complete isometry criterion for isotropic Pfister forms with distinct slots");
}

std::string PfisterForm::str() const {
    std::string out = "<<";
    for (std::size_t i = 0; i < slots_.size(); ++i) {
        if (i) out += ",";
        out += slots_[i].str();
    }
    return out + ">>";
}

// --- TSQForm ---------------------------------------------------------------

TSQForm::TSQForm(FieldPtr field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    check_entries(field_, coeffs_);
}

FieldElement TSQForm::eval(const Vec& x) const {
    if (x.size() != coeffs_.size()) throw DimensionMismatch("form argument dimension mismatch");
    FieldElement acc = field_->zero();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) acc += coeffs_[i] * x[i] * x[i];
    return acc;
}

bool TSQForm::isometric(const TSQForm& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return false;
    if (!(*field_ == *o.field_)) throw FieldMismatch("forms over different fields");
    return same_f2span(field_, coeffs_, o.coeffs_);
}

bool TSQForm::matches_transpose_profile(std::size_t n) const {
    if (coeffs_.size() != n * n - n + 1) return false;
    std::vector<FieldElement> with_one = coeffs_;
    with_one.push_back(field_->one());
    return f2span_dim(field_, coeffs_) == 1 && f2span_dim(field_, with_one) == 1;
}

std::string TSQForm::str() const {
    std::string out = "<";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ",";
        out += coeffs_[i].str();
    }
    return out + ">_q";
}

}  // namespace alternator
