#ifndef ALTERNATOR_LINALG_HPP
#define ALTERNATOR_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "alternator/field.hpp"

namespace alternator {

using Vec = std::vector<FieldElement>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_scale(const FieldElement& c, const Vec& v);
bool vec_is_zero(const Vec& v);

/// Selects the row-elimination kernel.  Both produce bit-identical results:
/// the parallel path distributes independent row updates over OpenMP threads
/// and falls back to the serial loop for small matrices.  The serial path is
/// the reference implementation.
enum class Exec { serial, parallel };

/// Dense matrix over a field2 field; row-major.
class MatrixF {
public:
    MatrixF() = default;
    MatrixF(FieldPtr field, std::size_t rows, std::size_t cols);  // zero-filled
    static MatrixF identity(const FieldPtr& field, std::size_t n);
    static MatrixF from_rows(const FieldPtr& field, const std::vector<Vec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    const FieldElement& operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    FieldElement& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;

    MatrixF operator+(const MatrixF& o) const;
    MatrixF operator*(const MatrixF& o) const;
    Vec mul_vec(const Vec& v) const;
    MatrixF transpose() const;
    MatrixF scaled(const FieldElement& c) const;
    bool operator==(const MatrixF& o) const;
    bool is_zero() const;

private:
    FieldPtr field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<FieldElement> entries_;
};

/// Reduces m to reduced row echelon form in place (unit pivots, pivot columns
/// cleared above and below, pivot positions strictly increasing).  Pivot
/// selection takes the first nonzero entry of each column - the arithmetic is
/// exact, so there is no magnitude to prefer.  Returns the pivot columns.
std::vector<std::size_t> rref_in_place(MatrixF& m, Exec exec = Exec::parallel);

/// A linear subspace of F^n in canonical form: the basis rows are the reduced
/// echelon form of any generating set, so two equal subspaces are
/// structurally identical.
class Subspace {
public:
    static Subspace zero(const FieldPtr& field, std::size_t ambient);
    static Subspace full(const FieldPtr& field, std::size_t ambient);
    static Subspace span(const FieldPtr& field, std::size_t ambient, const std::vector<Vec>& gens,
                         Exec exec = Exec::parallel);

    std::size_t dim() const { return basis_.size(); }
    std::size_t ambient() const { return ambient_; }
    const FieldPtr& field() const { return field_; }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    /// Coefficients of v over basis(); nullopt if v lies outside.
    std::optional<Vec> coordinates(const Vec& v) const;
    /// Canonical representative of v modulo the subspace: v minus its
    /// component, zero at every pivot column.  reduce_mod(v) is zero iff
    /// contains(v), and the map is linear.
    Vec reduce_mod(const Vec& v) const;

    bool operator==(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    Subspace sum(const Subspace& o) const;
    bool contains_subspace(const Subspace& o) const;

private:
    FieldPtr field_;
    std::size_t ambient_ = 0;
    std::vector<Vec> basis_;            // RREF rows
    std::vector<std::size_t> pivots_;   // strictly increasing
    Vec reduce_against(const Vec& v, Vec* coeffs) const;
};

/// The quotient map F^n -> F^n / W in coordinates: project(v) lists the
/// non-pivot entries of v's canonical representative mod W, giving a linear
/// map of rank n - dim W whose kernel is exactly W.
class QuotientMap {
public:
    explicit QuotientMap(Subspace w);

    std::size_t ambient() const { return w_.ambient(); }
    std::size_t codim() const { return free_cols_.size(); }
    const Subspace& subspace() const { return w_; }

    Vec project(const Vec& v) const;

private:
    Subspace w_;
    std::vector<std::size_t> free_cols_;
};

/// {x : Mx = 0} with a canonical (RREF) basis.
Subspace kernel_of(const MatrixF& m, Exec exec = Exec::parallel);

/// Kernel of the Frobenius-semilinear map sending the i-th unit vector to
/// images[i]: {lambda : sum lambda_i^2 * images[i] = 0}.  Computed by
/// Frobenius descent - decompose every coordinate of every image over the
/// F^2-basis of F, which turns the semilinear condition into a stacked
/// F-linear system in the lambda_i themselves.
Subspace semilinear_kernel(const FieldPtr& field, const std::vector<Vec>& images,
                           Exec exec = Exec::parallel);

/// dim over F^2 of the F^2-span of the given scalars: the rank of their
/// Frobenius-coordinate matrix.
std::size_t f2span_dim(const FieldPtr& field, const std::vector<FieldElement>& values,
                       Exec exec = Exec::parallel);

}  // namespace alternator

#endif
