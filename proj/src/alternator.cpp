#include "alternator/alternator.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

namespace alternator {

namespace {

// Decomposition helper for F + Alt: y in F + Alt splits uniquely as
// lambda * 1 + (alternating part); lambda is read off the reduction of y
// mod Alt against the reduction of 1, which is nonzero precisely for
// orthogonal involutions.
struct ScalarExtractor {
    const Subspace& alt;
    Vec r1;
    std::size_t k0 = 0;

    explicit ScalarExtractor(const InvolutionAlgebra& a) : alt(a.alt_sym().alt) {
        r1 = alt.reduce_mod(a.unit());
        while (k0 < r1.size() && r1[k0].is_zero()) ++k0;
        if (k0 == r1.size()) throw NotOrthogonal("1 lies in Alt(A, sigma)");
    }

    // lambda with y = lambda + Alt, or nullopt when y is outside F + Alt.
    std::optional<FieldElement> scalar_part(const Vec& y) const {
        const Vec r = alt.reduce_mod(y);
        const FieldElement lambda = r[k0] / r1[k0];
        if (!vec_is_zero(vec_add(r, vec_scale(lambda, r1)))) return std::nullopt;
        return lambda;
    }
};

Vec sigma_x_x(const InvolutionAlgebra& a, const Vec& x) {
    return a.multiply(a.apply_invol(x), x);
}

// Images of the basis under x |-> sigma(x) x composed with the given
// quotient projection; the map is Frobenius-semilinear, so these images
// determine it.
std::vector<Vec> basis_images(const InvolutionAlgebra& a, const QuotientMap& q) {
    std::vector<Vec> images;
    images.reserve(a.dim());
    for (int k = 0; k < a.dim(); ++k)
        images.push_back(q.project(sigma_x_x(a, a.basis_vec(k))));
    return images;
}

}  // namespace

AlternatorData alternator_subalgebra(const InvolutionAlgebra& a, Exec exec) {
    const ScalarExtractor ex(a);  // throws NotOrthogonal when degenerate
    const FieldPtr& field = a.field();

    std::vector<Vec> w_gens = ex.alt.basis();
    w_gens.push_back(a.unit());
    const Subspace f_plus_alt = Subspace::span(field, a.dim(), w_gens, exec);
    const QuotientMap proj(f_plus_alt);

    AlternatorData data;
    data.s_basis = semilinear_kernel(field, basis_images(a, proj), exec);

    auto q_of = [&](const Vec& f) {
        const std::optional<FieldElement> lambda = ex.scalar_part(sigma_x_x(a, f));
        if (!lambda) throw Error("computed S-basis vector violates the defining membership");
        return *lambda;
    };
    for (const auto& f : data.s_basis.basis()) data.q_coeffs.push_back(q_of(f));

    data.s_prime_basis = data.s_basis.intersect(ex.alt);
    for (const auto& f : data.s_prime_basis.basis()) data.q_prime_coeffs.push_back(q_of(f));
    return data;
}

std::optional<FieldElement> q_value(const InvolutionAlgebra& a, const Vec& x) {
    const ScalarExtractor ex(a);
    return ex.scalar_part(sigma_x_x(a, x));
}

Subspace psi_kernel(const InvolutionAlgebra& a, Exec exec) {
    if (!a.is_orthogonal()) throw NotOrthogonal("1 lies in Alt(A, sigma)");
    const QuotientMap proj(a.alt_sym().alt);
    return semilinear_kernel(a.field(), basis_images(a, proj), exec);
}

bool is_direct(const InvolutionAlgebra& a, Exec exec) {
    const bool direct = psi_kernel(a, exec).dim() == 0;
    const AlternatorData data = alternator_subalgebra(a, exec);
    const bool q_anisotropic =
        f2span_dim(a.field(), data.q_coeffs, exec) == data.q_coeffs.size();
    if (direct != q_anisotropic)
        throw Error("directness cross-check failed: ker psi and q anisotropy disagree");
    return direct;
}

bool split_fast_membership(int n, const std::vector<FieldElement>& u_diag, const MatrixF& x,
                           const FieldElement& lambda) {
    if (static_cast<int>(u_diag.size()) != n) throw DimensionMismatch("u_diag length");
    if (static_cast<int>(x.rows()) != n || static_cast<int>(x.cols()) != n)
        throw DimensionMismatch("matrix size");
    for (int i = 0; i < n; ++i) {
        FieldElement lhs = x.field()->zero();
        for (int k = 0; k < n; ++k) lhs += x(k, i).square() / u_diag[k];
        if (lhs != lambda / u_diag[i]) return false;
    }
    return true;
}

std::string SFieldResult::str() const {
    switch (verdict) {
        case SFieldVerdict::field:
            return "field";
        case SFieldVerdict::not_field:
            return "not_field(" + detail + ")";
        default:
            return detail.empty() ? "inconclusive" : "inconclusive(" + detail + ")";
    }
}

SFieldResult commutative_field_test(const InvolutionAlgebra& a, const Subspace& sub, Exec exec) {
    SFieldResult res;
    if (sub.dim() == 0 || !sub.contains(a.unit())) {
        res.verdict = SFieldVerdict::not_field;
        res.detail = "does not contain 1";
        return res;
    }
    const std::vector<Vec>& basis = sub.basis();
    const std::size_t s = basis.size();

    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j) {
            const Vec d = vec_add(a.multiply(basis[i], basis[j]), a.multiply(basis[j], basis[i]));
            if (!vec_is_zero(d)) {
                res.verdict = SFieldVerdict::not_field;
                res.detail = "noncommutative: basis pair (" + std::to_string(i) + ", " +
                             std::to_string(j) + ")";
                res.witness = d;
                return res;
            }
        }

    // On a commutative algebra squaring is Frobenius-semilinear, so basis
    // squares determine it.
    std::vector<Vec> squares;
    squares.reserve(s);
    for (const auto& f : basis) squares.push_back(a.multiply(f, f));

    bool all_scalar = true;
    std::vector<Vec> alpha_images;
    for (const auto& sq : squares) {
        const auto alpha = a.as_scalar(sq);
        if (!alpha) {
            all_scalar = false;
            break;
        }
        alpha_images.push_back(Vec{*alpha});
    }

    if (all_scalar) {
        const Subspace ker = semilinear_kernel(a.field(), alpha_images, exec);
        if (ker.dim() == 0) {
            // every nonzero x = sum c_i f_i has x^2 = (nonzero scalar) * 1,
            // hence the inverse x / x^2
            res.verdict = SFieldVerdict::field;
            return res;
        }
        Vec w = a.zero_vec();
        const Vec& lam = ker.basis().front();
        for (std::size_t i = 0; i < s; ++i)
            if (!lam[i].is_zero()) w = vec_add(w, vec_scale(lam[i], basis[i]));
        res.verdict = SFieldVerdict::not_field;
        res.detail = "nilpotent: x^2 = 0";
        res.witness = w;
        return res;
    }

    // Some square escapes the scalars: climb the kernel chain of the
    // iterated square map until it covers every nilpotent (2^e >= dim sub).
    int e = 0;
    while ((std::size_t{1} << e) < s) ++e;
    Subspace nil = Subspace::zero(a.field(), a.dim());
    for (int step = 0; step < e; ++step) {
        const QuotientMap proj(nil);
        std::vector<Vec> images;
        images.reserve(s);
        for (const auto& sq : squares) images.push_back(proj.project(sq));
        const Subspace lam_space = semilinear_kernel(a.field(), images, exec);
        std::vector<Vec> gens;
        for (const auto& lam : lam_space.basis()) {
            Vec w = a.zero_vec();
            for (std::size_t i = 0; i < s; ++i)
                if (!lam[i].is_zero()) w = vec_add(w, vec_scale(lam[i], basis[i]));
            gens.push_back(std::move(w));
        }
        Subspace next = Subspace::span(a.field(), a.dim(), gens, exec);
        if (next.dim() == nil.dim()) break;
        nil = std::move(next);
    }
    if (nil.dim() > 0) {
        res.verdict = SFieldVerdict::not_field;
        res.detail = "nilpotent: x^(2^" + std::to_string(e) + ") = 0";
        res.witness = nil.basis().front();
        return res;
    }
    res.verdict = SFieldVerdict::inconclusive;
    res.detail = "commutative and reduced with non-scalar squares";
    return res;
}

SFieldResult s_field_test(const AlternatorData& data, const InvolutionAlgebra& a, Exec exec) {
    return commutative_field_test(a, data.s_basis, exec);
}

// --- Phi and the Pfister invariant -----------------------------------------

namespace {

void collect_generators(const InvolutionAlgebra& a, std::vector<Vec>& gens,
                        std::vector<FieldElement>& alphas);

// A one-dimensional Alt (quaternion or 2x2 leaf) contributes its basis
// vector.
void leaf_generator(const InvolutionAlgebra& a, std::vector<Vec>& gens,
                    std::vector<FieldElement>& alphas) {
    const Subspace& alt = a.alt_sym().alt;
    if (alt.dim() != 1)
        throw PhiConstructionFailed("factor Alt dimension is " + std::to_string(alt.dim()) +
                                    ", expected 1");
    const Vec& w = alt.basis().front();
    const auto alpha = a.as_scalar(a.multiply(w, w));
    if (!alpha || alpha->is_zero())
        throw PhiConstructionFailed("factor generator square is not a nonzero scalar");
    gens.push_back(w);
    alphas.push_back(*alpha);
}

void matrix_generators(const InvolutionAlgebra& a, const MatrixProvenance& mp,
                       std::vector<Vec>& gens, std::vector<FieldElement>& alphas) {
    const int n = mp.n;
    if (n == 1) return;  // trivial factor, no slots
    if (n == 2) {
        leaf_generator(a, gens, alphas);
        return;
    }
    int m = 0;
    while ((1 << m) < n) ++m;
    if ((1 << m) != n)
        throw UnsupportedProvenance("matrix degree " + std::to_string(n) +
                                    " is not a power of two");
    // Normalize u_0 to 1 (scaling u does not change sigma) and require the
    // diagonal to be the subset-product expansion of its entries at the
    // power-of-two positions.
    std::vector<FieldElement> u;
    for (const auto& ui : mp.u_diag) u.push_back(ui / mp.u_diag[0]);
    for (int jj = 0; jj < n; ++jj) {
        FieldElement expect = a.field()->one();
        for (int p = 0; p < m; ++p)
            if (jj >> p & 1) expect *= u[1 << p];
        if (u[jj] != expect)
            throw UnsupportedProvenance("diagonal is not a Pfister expansion at index " +
                                        std::to_string(jj));
    }
    // One generator per bit: the embedded E_12 + gamma E_21 of the 2x2
    // factor acting on that bit.
    for (int p = 0; p < m; ++p) {
        const FieldElement gamma = u[1 << p];
        Vec v(static_cast<std::size_t>(n) * n, a.field()->zero());
        for (int r = 0; r < n; ++r) {
            const int c = r ^ (1 << p);
            v[r * n + c] = (r >> p & 1) ? gamma : a.field()->one();
        }
        gens.push_back(std::move(v));
        alphas.push_back(gamma);
    }
}

void collect_generators(const InvolutionAlgebra& a, std::vector<Vec>& gens,
                        std::vector<FieldElement>& alphas) {
    if (std::holds_alternative<QuaternionProvenance>(a.provenance())) {
        leaf_generator(a, gens, alphas);
    } else if (const auto* mp = std::get_if<MatrixProvenance>(&a.provenance())) {
        matrix_generators(a, *mp, gens, alphas);
    } else if (const auto* tp = std::get_if<TensorProvenance>(&a.provenance())) {
        std::vector<Vec> gl, gr;
        collect_generators(*tp->left, gl, alphas);
        collect_generators(*tp->right, gr, alphas);
        for (const auto& g : gl) gens.push_back(kron_vec(g, tp->right->unit()));
        for (const auto& g : gr) gens.push_back(kron_vec(tp->left->unit(), g));
    } else if (const auto* cp = std::get_if<ConjugateProvenance>(&a.provenance())) {
        std::vector<Vec> gb;
        collect_generators(*cp->base, gb, alphas);
        const Vec ginv = *cp->base->inverse(cp->g);
        for (const auto& v : gb)
            gens.push_back(cp->base->multiply(cp->base->multiply(cp->g, v), ginv));
    } else {
        throw UnsupportedProvenance("unrecognized provenance");
    }
}

}  // namespace

PhiData phi_and_pfister(const InvolutionAlgebra& a, Exec exec) {
    std::vector<Vec> gens;
    std::vector<FieldElement> alphas;
    collect_generators(a, gens, alphas);
    const std::size_t n = gens.size();
    if (n == 0) throw UnsupportedProvenance("no quaternion factors in the provenance tree");
    if (n > 6) throw UnsupportedProvenance("too many tensor factors");

    const FieldPtr& field = a.field();
    const Subspace& alt = a.alt_sym().alt;

    for (std::size_t i = 0; i < n; ++i) {
        if (!alt.contains(gens[i]))
            throw PhiConstructionFailed("generator " + std::to_string(i) + " is not alternating");
        if (a.multiply(gens[i], gens[i]) != a.scalar_vec(alphas[i]))
            throw PhiConstructionFailed("generator " + std::to_string(i) +
                                        " square differs from its slot");
        if (alphas[i].is_zero()) throw PhiConstructionFailed("slot " + std::to_string(i) + " is zero");
        for (std::size_t j = i + 1; j < n; ++j)
            if (a.multiply(gens[i], gens[j]) != a.multiply(gens[j], gens[i]))
                throw PhiConstructionFailed("generators " + std::to_string(i) + " and " +
                                            std::to_string(j) + " do not commute");
    }

    std::vector<Vec> prods(std::size_t{1} << n);
    prods[0] = a.unit();
    for (std::size_t mask = 1; mask < prods.size(); ++mask) {
        const int low = std::countr_zero(mask);
        prods[mask] = a.multiply(prods[mask & (mask - 1)], gens[low]);
        if (!alt.contains(prods[mask]))
            throw PhiConstructionFailed("subset product " + std::to_string(mask) +
                                        " is not alternating");
    }
    Subspace span = Subspace::span(field, a.dim(), prods, exec);
    if (span.dim() != prods.size())
        throw PhiConstructionFailed("subset products span dimension " +
                                    std::to_string(span.dim()) + ", expected " +
                                    std::to_string(prods.size()));

    // self-centralizing: the solutions of [x, v_i] = 0 for all i are exactly
    // the subalgebra itself
    MatrixF comm(field, static_cast<std::size_t>(n) * a.dim(), a.dim());
    for (std::size_t i = 0; i < n; ++i)
        for (int j = 0; j < a.dim(); ++j) {
            const Vec e = a.basis_vec(j);
            const Vec c = vec_add(a.multiply(gens[i], e), a.multiply(e, gens[i]));
            for (int r = 0; r < a.dim(); ++r) comm(i * a.dim() + r, j) = c[r];
        }
    const Subspace centralizer = kernel_of(comm, exec);
    if (!(centralizer == span))
        throw PhiConstructionFailed("centralizer of the generators differs from their span");

    return PhiData{std::move(gens), alphas, PfisterForm(field, alphas), std::move(span)};
}

}  // namespace alternator
