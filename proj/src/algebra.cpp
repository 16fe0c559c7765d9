#include "alternator/algebra.hpp"

#include <random>
#include <string>
#include <utility>

#include "alternator/forms.hpp"

namespace alternator {

namespace {

// Particular solution of Ax = b read off the RREF of [A | b]; nullopt when
// the system is inconsistent.  Free variables are set to zero.
std::optional<Vec> solve_linear(const MatrixF& a, const Vec& b) {
    if (a.rows() != b.size()) throw DimensionMismatch("solve: rhs length");
    MatrixF aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    const std::vector<std::size_t> pivots = rref_in_place(aug);
    Vec x(a.cols(), a.field()->zero());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == a.cols()) return std::nullopt;  // pivot in the rhs column
        x[pivots[r]] = aug(r, a.cols());
    }
    return x;
}

}  // namespace

Vec InvolutionAlgebra::zero_vec() const { return Vec(dim_, field_->zero()); }

Vec InvolutionAlgebra::basis_vec(int i) const {
    Vec v = zero_vec();
    v[i] = field_->one();
    return v;
}

Vec InvolutionAlgebra::scalar_vec(const FieldElement& c) const { return vec_scale(c, unit_); }

std::optional<FieldElement> InvolutionAlgebra::as_scalar(const Vec& x) const {
    // The unit vectors of all our bases have an invertible leading pattern;
    // solve x = c * unit by matching the first nonzero unit coordinate.
    std::size_t lead = unit_.size();
    for (std::size_t k = 0; k < unit_.size(); ++k)
        if (!unit_[k].is_zero()) {
            lead = k;
            break;
        }
    const FieldElement c = x[lead] / unit_[lead];
    if (vec_add(x, vec_scale(c, unit_)) != zero_vec()) return std::nullopt;
    return c;
}

Vec InvolutionAlgebra::multiply(const Vec& x, const Vec& y) const {
    if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
        throw DimensionMismatch("algebra multiply: coordinate length");
    Vec out = zero_vec();
    for (int i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            const FieldElement c = x[i] * y[j];
            const Vec& m = mult_[i * dim_ + j];
            for (int k = 0; k < dim_; ++k)
                if (!m[k].is_zero()) out[k] += c * m[k];
        }
    }
    return out;
}

Vec InvolutionAlgebra::apply_invol(const Vec& x) const {
    if (static_cast<int>(x.size()) != dim_) throw DimensionMismatch("involution: coordinate length");
    Vec out = zero_vec();
    for (int j = 0; j < dim_; ++j) {
        if (x[j].is_zero()) continue;
        for (int i = 0; i < dim_; ++i) {
            const FieldElement& a = invol_(i, j);
            if (!a.is_zero()) out[i] += a * x[j];
        }
    }
    return out;
}

std::optional<Vec> InvolutionAlgebra::inverse(const Vec& x) const {
    // Solve L_x y = 1.  A right inverse in a finite-dimensional unital
    // associative algebra is automatically two-sided.
    MatrixF lx(field_, dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
        const Vec col = multiply(x, basis_vec(j));
        for (int i = 0; i < dim_; ++i) lx(i, j) = col[i];
    }
    return solve_linear(lx, unit_);
}

void InvolutionAlgebra::validate() const {
    for (int i = 0; i < dim_; ++i) {
        const Vec e = basis_vec(i);
        if (multiply(unit_, e) != e || multiply(e, unit_) != e)
            throw InvalidInvolution("unit law fails on basis vector " + std::to_string(i));
    }

    const bool exhaustive = dim_ <= 16;
    std::mt19937_64 sample(0xA16EB7A5u);  // fixed: validation must be deterministic
    const int ntriples = exhaustive ? 0 : 256;

    auto check_assoc = [&](int i, int j, int k) {
        const Vec lhs = multiply(mult_[i * dim_ + j], basis_vec(k));
        const Vec rhs = multiply(basis_vec(i), mult_[j * dim_ + k]);
        if (lhs != rhs)
            throw InvalidInvolution("associativity fails on basis triple (" + std::to_string(i) +
                                    ", " + std::to_string(j) + ", " + std::to_string(k) + ")");
    };
    auto check_antihom = [&](int i, int j) {
        const Vec lhs = apply_invol(mult_[i * dim_ + j]);
        const Vec rhs = multiply(apply_invol(basis_vec(j)), apply_invol(basis_vec(i)));
        if (lhs != rhs)
            throw InvalidInvolution("sigma(e_i e_j) != sigma(e_j) sigma(e_i) at (" +
                                    std::to_string(i) + ", " + std::to_string(j) + ")");
    };

    if (exhaustive) {
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                check_antihom(i, j);
                for (int k = 0; k < dim_; ++k) check_assoc(i, j, k);
            }
    } else {
        for (int t = 0; t < ntriples; ++t) {
            const int i = static_cast<int>(sample() % dim_);
            const int j = static_cast<int>(sample() % dim_);
            const int k = static_cast<int>(sample() % dim_);
            check_assoc(i, j, k);
            check_antihom(i, j);
        }
    }

    for (int i = 0; i < dim_; ++i) {
        const Vec e = basis_vec(i);
        if (apply_invol(apply_invol(e)) != e)
            throw InvalidInvolution("sigma^2 != id on basis vector " + std::to_string(i));
    }
    if (apply_invol(unit_) != unit_) throw InvalidInvolution("sigma does not fix 1");
}

void InvolutionAlgebra::finish() {
    validate();
    std::vector<Vec> alt_gens;
    alt_gens.reserve(dim_);
    MatrixF one_plus_sigma(field_, dim_, dim_);
    for (int i = 0; i < dim_; ++i) {
        const Vec e = basis_vec(i);
        const Vec g = vec_add(e, apply_invol(e));
        for (int r = 0; r < dim_; ++r) one_plus_sigma(r, i) = g[r];
        alt_gens.push_back(g);
    }
    altsym_.alt = Subspace::span(field_, dim_, alt_gens);
    altsym_.sym = kernel_of(one_plus_sigma);
    orthogonal_ = !altsym_.alt.contains(unit_);
}

// --- factories -------------------------------------------------------------

AlgebraPtr InvolutionAlgebra::matrix_algebra(const FieldPtr& field, int n,
                                             std::vector<FieldElement> u_diag) {
    if (n < 1) throw DimensionMismatch("matrix algebra needs n >= 1");
    if (static_cast<int>(u_diag.size()) != n)
        throw DimensionMismatch("u_diag length differs from n");
    for (const auto& u : u_diag) {
        if (!u.field() || !(*u.field() == *field))
            throw FieldMismatch("u_diag entry from a different field");
        if (u.is_zero()) throw InvalidInvolution("diagonal Gram entry is zero");
    }

    std::shared_ptr<InvolutionAlgebra> a(new InvolutionAlgebra());
    a->field_ = field;
    a->dim_ = n * n;
    const int d = a->dim_;
    a->mult_.assign(static_cast<std::size_t>(d) * d, Vec(d, field->zero()));
    // E_ij E_kl = [j == k] E_il, with E_ij at index i*n + j.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (j == k)
                        a->mult_[(i * n + j) * d + (k * n + l)][i * n + l] = field->one();
    a->unit_ = Vec(d, field->zero());
    for (int i = 0; i < n; ++i) a->unit_[i * n + i] = field->one();
    // sigma(E_ij) = (u_j / u_i) E_ji
    a->invol_ = MatrixF(field, d, d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a->invol_(j * n + i, i * n + j) = u_diag[j] / u_diag[i];
    a->provenance_ = MatrixProvenance{n, std::move(u_diag)};
    a->finish();
    return a;
}

AlgebraPtr InvolutionAlgebra::quaternion_algebra(const FieldElement& a_par, const FieldElement& b,
                                                 const Vec& u) {
    const FieldPtr field = a_par.field();
    if (!field) throw InvalidField("quaternion parameter has no field");
    if (!b.field() || !(*b.field() == *field)) throw FieldMismatch("b from a different field");
    if (u.size() != 4) throw DimensionMismatch("quaternion u needs 4 coordinates");
    for (const auto& c : u)
        if (!c.field() || !(*c.field() == *field)) throw FieldMismatch("u from a different field");
    if (b.is_zero()) throw InvalidInvolution("quaternion algebra [a, b) needs b != 0");
    if (!u[1].is_zero())
        throw InvalidInvolution("u is not fixed by the canonical involution (i-component)");

    std::shared_ptr<InvolutionAlgebra> q(new InvolutionAlgebra());
    q->field_ = field;
    q->dim_ = 4;
    const auto zero = field->zero();
    const auto one = field->one();
    q->mult_.assign(16, Vec(4, zero));
    auto set = [&](int i, int j, std::initializer_list<std::pair<int, FieldElement>> terms) {
        for (const auto& [k, c] : terms) q->mult_[i * 4 + j][k] = c;
    };
    // Basis 1, i, j, ij with i^2 = i + a, j^2 = b, ji = ij + j.
    for (int k = 0; k < 4; ++k) {
        set(0, k, {{k, one}});
        if (k) set(k, 0, {{k, one}});
    }
    set(1, 1, {{0, a_par}, {1, one}});          // i i = a + i
    set(1, 2, {{3, one}});                      // i j = ij
    set(1, 3, {{2, a_par}, {3, one}});          // i ij = a j + ij
    set(2, 1, {{2, one}, {3, one}});            // j i = j + ij
    set(2, 2, {{0, b}});                        // j j = b
    set(2, 3, {{0, b}, {1, b}});                // j ij = b + b i
    set(3, 1, {{2, a_par}});                    // ij i = a j
    set(3, 2, {{1, b}});                        // ij j = b i
    set(3, 3, {{0, a_par * b}});                // ij ij = a b
    q->unit_ = {one, zero, zero, zero};

    // gamma(u) = u here, so u^2 = Nrd(u) is scalar and u^-1 = u / Nrd(u).
    const Vec usq = q->multiply(u, u);
    const FieldElement nrd = usq[0];
    if (!usq[1].is_zero() || !usq[2].is_zero() || !usq[3].is_zero())
        throw InvalidInvolution("u^2 is not scalar");
    if (nrd.is_zero()) throw NotAUnit("quaternion u has reduced norm zero");
    const Vec uinv = vec_scale(nrd.inv(), u);

    // gamma on the basis: 1 -> 1, i -> 1 + i, j -> j, ij -> ij.
    std::vector<Vec> gamma(4, Vec(4, zero));
    gamma[0][0] = one;
    gamma[1][0] = one;
    gamma[1][1] = one;
    gamma[2][2] = one;
    gamma[3][3] = one;
    q->invol_ = MatrixF(field, 4, 4);
    for (int c = 0; c < 4; ++c) {
        const Vec img = q->multiply(q->multiply(u, gamma[c]), uinv);
        for (int r = 0; r < 4; ++r) q->invol_(r, c) = img[r];
    }
    q->provenance_ = QuaternionProvenance{a_par, b, u};
    q->finish();
    if (!q->is_orthogonal()) throw NotOrthogonal("Int(u) . gamma is symplectic for this u");
    return q;
}

Vec kron_vec(const Vec& x, const Vec& y) {
    Vec out;
    out.reserve(x.size() * y.size());
    for (const auto& xi : x)
        for (const auto& yj : y) out.push_back(xi * yj);
    return out;
}

AlgebraPtr InvolutionAlgebra::tensor(const AlgebraPtr& lhs, const AlgebraPtr& rhs) {
    if (!(*lhs->field() == *rhs->field())) throw FieldMismatch("tensor factors over different fields");
    const FieldPtr field = lhs->field();
    const int dl = lhs->dim(), dr = rhs->dim();

    std::shared_ptr<InvolutionAlgebra> t(new InvolutionAlgebra());
    t->field_ = field;
    t->dim_ = dl * dr;
    const int d = t->dim_;
    t->mult_.assign(static_cast<std::size_t>(d) * d, Vec(d, field->zero()));
    for (int i1 = 0; i1 < dl; ++i1)
        for (int j1 = 0; j1 < dr; ++j1)
            for (int i2 = 0; i2 < dl; ++i2)
                for (int j2 = 0; j2 < dr; ++j2) {
                    const Vec& pl = lhs->basis_product(i1, i2);
                    const Vec& pr = rhs->basis_product(j1, j2);
                    Vec& out = t->mult_[(i1 * dr + j1) * d + (i2 * dr + j2)];
                    for (int k = 0; k < dl; ++k) {
                        if (pl[k].is_zero()) continue;
                        for (int l = 0; l < dr; ++l)
                            if (!pr[l].is_zero()) out[k * dr + l] = pl[k] * pr[l];
                    }
                }
    t->unit_ = kron_vec(lhs->unit(), rhs->unit());
    t->invol_ = MatrixF(field, d, d);
    for (int i = 0; i < dl; ++i)
        for (int j = 0; j < dr; ++j) {
            const Vec img = kron_vec(lhs->apply_invol(lhs->basis_vec(i)),
                                     rhs->apply_invol(rhs->basis_vec(j)));
            for (int r = 0; r < d; ++r) t->invol_(r, i * dr + j) = img[r];
        }
    t->provenance_ = TensorProvenance{lhs, rhs};
    t->finish();
    return t;
}

AlgebraPtr InvolutionAlgebra::conjugate(const AlgebraPtr& base, const Vec& g) {
    const std::optional<Vec> ginv = base->inverse(g);
    if (!ginv) throw NotAUnit("conjugating element is not a unit");

    std::shared_ptr<InvolutionAlgebra> c(new InvolutionAlgebra());
    c->field_ = base->field_;
    c->dim_ = base->dim_;
    c->mult_ = base->mult_;
    c->unit_ = base->unit_;
    c->invol_ = MatrixF(c->field_, c->dim_, c->dim_);
    for (int jcol = 0; jcol < c->dim_; ++jcol) {
        // sigma'(x) = g sigma(g^-1 x g) g^-1
        const Vec inner = base->multiply(base->multiply(*ginv, base->basis_vec(jcol)), g);
        const Vec img = base->multiply(base->multiply(g, base->apply_invol(inner)), *ginv);
        for (int r = 0; r < c->dim_; ++r) c->invol_(r, jcol) = img[r];
    }
    c->provenance_ = ConjugateProvenance{base, g};
    c->finish();
    return c;
}

// --- split isotropy ---------------------------------------------------------

SplitIsotropyResult split_isotropy(const InvolutionAlgebra& a) {
    const auto* mp = std::get_if<MatrixProvenance>(&a.provenance());
    if (!mp)
        throw UnsupportedProvenance("split isotropy needs plain matrix provenance");
    const int n = mp->n;
    const FieldPtr& field = a.field();

    // sigma = Int(diag(u)) . t is the adjoint involution of the diagonal
    // form <u_1^-1, ..., u_n^-1>, which is isotropic iff <u_1, ..., u_n> is
    // (the entries differ by squares).
    const BilinDiagForm form(field, mp->u_diag);
    SplitIsotropyResult res;
    res.isotropic = form.is_isotropic();
    if (!res.isotropic) return res;

    const std::optional<Vec> v = form.isotropic_vector();
    if (!v) throw Error("isotropic form without isotropic vector");  // unreachable
    // Convert to a vector w isotropic for <u^-1>, then take the rank-one map
    // z |-> b(w, z) w, whose matrix is x_ab = w_a u_b^-1 w_b.
    Vec w;
    for (int i = 0; i < n; ++i) w.push_back(mp->u_diag[i] * (*v)[i]);
    Vec x(static_cast<std::size_t>(n) * n, field->zero());
    for (int r = 0; r < n; ++r)
        for (int col = 0; col < n; ++col) x[r * n + col] = w[r] * w[col] / mp->u_diag[col];
    if (vec_is_zero(x)) throw Error("isotropy witness vanished");  // unreachable
    if (!vec_is_zero(a.multiply(a.apply_invol(x), x)))
        throw Error("isotropy witness fails sigma(x) x = 0");  // construction self-check
    res.witness = std::move(x);
    return res;
}

}  // namespace alternator
