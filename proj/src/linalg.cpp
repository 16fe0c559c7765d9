#include "alternator/linalg.hpp"

#include <algorithm>

namespace alternator {

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Vec r;
    r.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
    return r;
}

Vec vec_scale(const FieldElement& c, const Vec& v) {
    Vec r;
    r.reserve(v.size());
    for (const auto& x : v) r.push_back(c * x);
    return r;
}

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.is_zero(); });
}

// --- MatrixF ---------------------------------------------------------------

MatrixF::MatrixF(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
    entries_.assign(rows_ * cols_, field_->zero());
}

MatrixF MatrixF::identity(const FieldPtr& field, std::size_t n) {
    MatrixF m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field->one();
    return m;
}

MatrixF MatrixF::from_rows(const FieldPtr& field, const std::vector<Vec>& rows) {
    const std::size_t nc = rows.empty() ? 0 : rows.front().size();
    MatrixF m(field, rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != nc) throw DimensionMismatch("ragged row list");
        for (std::size_t c = 0; c < nc; ++c) {
            if (!rows[r][c].field() || !(*rows[r][c].field() == *field))
                throw FieldMismatch("matrix entry from a different field");
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

Vec MatrixF::row(std::size_t r) const {
    return Vec(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
}

Vec MatrixF::col(std::size_t c) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

MatrixF MatrixF::operator+(const MatrixF& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sizes differ");
    MatrixF m(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i] + o.entries_[i];
    return m;
}

MatrixF MatrixF::operator*(const MatrixF& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
    MatrixF m(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const FieldElement& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const FieldElement& b = o(k, j);
                if (b.is_zero()) continue;
                m(i, j) += a * b;
            }
        }
    return m;
}

Vec MatrixF::mul_vec(const Vec& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
    Vec r(rows_, field_->zero());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const FieldElement& a = (*this)(i, j);
            if (!a.is_zero() && !v[j].is_zero()) r[i] += a * v[j];
        }
    return r;
}

MatrixF MatrixF::transpose() const {
    MatrixF m(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

MatrixF MatrixF::scaled(const FieldElement& c) const {
    MatrixF m(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = c * entries_[i];
    return m;
}

bool MatrixF::operator==(const MatrixF& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != o.entries_[i]) return false;
    return true;
}

bool MatrixF::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const FieldElement& x) { return x.is_zero(); });
}

// --- elimination -----------------------------------------------------------

namespace {

// Adds factor * source row to target row, from column `from` on.  Row
// updates are independent of each other, which is what the parallel path
// exploits; keeping the arithmetic identical in both paths keeps the results
// bit-identical.  factor is taken by value: the loop's first step zeroes the
// matrix entry callers pass it from.
void eliminate_row(MatrixF& m, std::size_t target, std::size_t src, const FieldElement factor,
                   std::size_t from) {
    for (std::size_t c = from; c < m.cols(); ++c) {
        const FieldElement& s = m(src, c);
        if (!s.is_zero()) m(target, c) += factor * s;
    }
}

}  // namespace

std::vector<std::size_t> rref_in_place(MatrixF& m, Exec exec) {
#ifndef ALTERNATOR_HAVE_OPENMP
    exec = Exec::serial;
#endif
    // OpenMP pays off only once the elimination block is sizable.
    if (exec == Exec::parallel && m.rows() * m.cols() < 2048) exec = Exec::serial;

    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
        std::size_t sel = m.rows();
        for (std::size_t r = pr; r < m.rows(); ++r)
            if (!m(r, c).is_zero()) {
                sel = r;
                break;
            }
        if (sel == m.rows()) continue;
        if (sel != pr)
            for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(pr, j), m(sel, j));

        const FieldElement pivot_inv = m(pr, c).inv();
        if (!m(pr, c).is_one())
            for (std::size_t j = c; j < m.cols(); ++j) m(pr, j) = pivot_inv * m(pr, j);

        if (exec == Exec::serial) {
            for (std::size_t r = 0; r < m.rows(); ++r) {
                if (r == pr || m(r, c).is_zero()) continue;
                eliminate_row(m, r, pr, m(r, c), c);
            }
        } else {
#ifdef ALTERNATOR_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
            for (long long r = 0; r < static_cast<long long>(m.rows()); ++r) {
                const auto rr = static_cast<std::size_t>(r);
                if (rr == pr || m(rr, c).is_zero()) continue;
                eliminate_row(m, rr, pr, m(rr, c), c);
            }
#endif
        }
        pivots.push_back(c);
        ++pr;
    }
    return pivots;
}

// --- Subspace --------------------------------------------------------------

Subspace Subspace::zero(const FieldPtr& field, std::size_t ambient) {
    Subspace s;
    s.field_ = field;
    s.ambient_ = ambient;
    return s;
}

Subspace Subspace::full(const FieldPtr& field, std::size_t ambient) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < ambient; ++i) {
        Vec v(ambient, field->zero());
        v[i] = field->one();
        rows.push_back(std::move(v));
    }
    return span(field, ambient, rows, Exec::serial);
}

Subspace Subspace::span(const FieldPtr& field, std::size_t ambient, const std::vector<Vec>& gens,
                        Exec exec) {
    for (const auto& g : gens)
        if (g.size() != ambient) throw DimensionMismatch("generator has wrong ambient dimension");
    Subspace s = zero(field, ambient);
    if (gens.empty()) return s;
    MatrixF m = MatrixF::from_rows(field, gens);
    s.pivots_ = rref_in_place(m, exec);
    for (std::size_t r = 0; r < s.pivots_.size(); ++r) s.basis_.push_back(m.row(r));
    return s;
}

// Reduces v against the RREF basis; the remainder is zero iff v lies in the
// subspace.  When coeffs is non-null it receives the coefficient of each
// basis row (for an RREF basis that is just the entry at the pivot).
Vec Subspace::reduce_against(const Vec& v, Vec* coeffs) const {
    Vec rem = v;
    if (coeffs) coeffs->assign(basis_.size(), field_->zero());
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        const FieldElement c = rem[pivots_[r]];
        if (c.is_zero()) continue;
        if (coeffs) (*coeffs)[r] = c;
        rem = vec_add(rem, vec_scale(c, basis_[r]));
    }
    return rem;
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector has wrong ambient dimension");
    return vec_is_zero(reduce_against(v, nullptr));
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector has wrong ambient dimension");
    Vec coeffs;
    if (!vec_is_zero(reduce_against(v, &coeffs))) return std::nullopt;
    return coeffs;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && pivots_ == o.pivots_ && basis_ == o.basis_;
}

Subspace Subspace::sum(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw DimensionMismatch("ambient dimensions differ");
    std::vector<Vec> gens = basis_;
    gens.insert(gens.end(), o.basis_.begin(), o.basis_.end());
    return span(field_, ambient_, gens);
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw DimensionMismatch("ambient dimensions differ");
    if (dim() == 0 || o.dim() == 0) return zero(field_, ambient_);
    // Zassenhaus-style: coefficients (x, y) with sum x_i a_i = sum y_j b_j
    // form the kernel of the matrix whose columns are [a_i | b_j].
    MatrixF m(field_, ambient_, dim() + o.dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t r = 0; r < ambient_; ++r) m(r, i) = basis_[i][r];
    for (std::size_t j = 0; j < o.dim(); ++j)
        for (std::size_t r = 0; r < ambient_; ++r) m(r, dim() + j) = o.basis_[j][r];
    const Subspace ker = kernel_of(m);
    std::vector<Vec> gens;
    for (const auto& k : ker.basis()) {
        Vec v(ambient_, field_->zero());
        for (std::size_t i = 0; i < dim(); ++i)
            if (!k[i].is_zero()) v = vec_add(v, vec_scale(k[i], basis_[i]));
        gens.push_back(std::move(v));
    }
    return span(field_, ambient_, gens);
}

bool Subspace::contains_subspace(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw DimensionMismatch("ambient dimensions differ");
    return std::all_of(o.basis_.begin(), o.basis_.end(),
                       [this](const Vec& v) { return contains(v); });
}

Vec Subspace::reduce_mod(const Vec& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector has wrong ambient dimension");
    return reduce_against(v, nullptr);
}

// --- QuotientMap -----------------------------------------------------------

QuotientMap::QuotientMap(Subspace w) : w_(std::move(w)) {
    std::vector<bool> is_pivot(w_.ambient(), false);
    for (std::size_t c : w_.pivots()) is_pivot[c] = true;
    for (std::size_t c = 0; c < w_.ambient(); ++c)
        if (!is_pivot[c]) free_cols_.push_back(c);
}

Vec QuotientMap::project(const Vec& v) const {
    const Vec rem = w_.reduce_mod(v);
    Vec out;
    out.reserve(free_cols_.size());
    for (std::size_t c : free_cols_) out.push_back(rem[c]);
    return out;
}

// --- kernels and descent ---------------------------------------------------

Subspace kernel_of(const MatrixF& m, Exec exec) {
    MatrixF r = m;
    const std::vector<std::size_t> pivots = rref_in_place(r, exec);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<Vec> gens;
    for (std::size_t fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        Vec v(m.cols(), m.field()->zero());
        v[fc] = m.field()->one();
        // Row j reads x_{pivot_j} + sum over free columns of R(j, free) x_free = 0;
        // in characteristic two the solution with x_fc = 1 is x_{pivot_j} = R(j, fc).
        for (std::size_t j = 0; j < pivots.size(); ++j) v[pivots[j]] = r(j, fc);
        gens.push_back(std::move(v));
    }
    return Subspace::span(m.field(), m.cols(), gens, exec);
}

Subspace semilinear_kernel(const FieldPtr& field, const std::vector<Vec>& images, Exec exec) {
    const std::size_t k = images.size();
    if (k == 0) return Subspace::zero(field, 0);
    const std::size_t d = images.front().size();
    const std::size_t fr = field->frobenius_rank();
    // Descent system: one F-linear row per (coordinate, F^2-basis index).
    MatrixF m(field, d * fr, k);
    for (std::size_t i = 0; i < k; ++i) {
        if (images[i].size() != d) throw DimensionMismatch("image vectors differ in dimension");
        for (std::size_t c = 0; c < d; ++c) {
            if (!images[i][c].field() || !(*images[i][c].field() == *field))
                throw FieldMismatch("image entry from a different field");
            const std::vector<FieldElement> w = images[i][c].frobenius_coords();
            for (std::size_t eps = 0; eps < fr; ++eps) m(c * fr + eps, i) = w[eps];
        }
    }
    return kernel_of(m, exec);
}

std::size_t f2span_dim(const FieldPtr& field, const std::vector<FieldElement>& values, Exec exec) {
    if (values.empty()) return 0;
    const std::size_t fr = field->frobenius_rank();
    MatrixF m(field, values.size(), fr);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!values[i].field() || !(*values[i].field() == *field))
            throw FieldMismatch("value from a different field");
        const std::vector<FieldElement> w = values[i].frobenius_coords();
        for (std::size_t eps = 0; eps < fr; ++eps) m(i, eps) = w[eps];
    }
    return rref_in_place(m, exec).size();
}

}  // namespace alternator
