#include <doctest.h>

#include <random>

#include "alternator/alternator.hpp"

using namespace alternator;

namespace {

FieldElement rand_elem(std::mt19937_64& rng, const FieldPtr& F, int max_deg = 2,
                       int max_terms = 2) {
    if (F->kind() == Field::Kind::gf2k)
        return F->from_bits(static_cast<std::uint32_t>(rng() % *F->cardinality()));
    auto rand_poly = [&](bool nonzero) {
        Poly2 p = Poly2::zero();
        do {
            std::vector<Monomial> ts;
            const int nt = static_cast<int>(rng() % (max_terms + 1));
            for (int t = 0; t < nt; ++t) {
                Monomial m;
                for (int i = 0; i < F->num_vars(); ++i)
                    m.e[i] = static_cast<std::uint16_t>(rng() % (max_deg + 1));
                ts.push_back(m);
            }
            p = Poly2::from_terms(std::move(ts));
        } while (nonzero && p.is_zero());
        return p;
    };
    return F->fraction(rand_poly(false), rand_poly(true));
}

Vec rand_vec(std::mt19937_64& rng, const FieldPtr& F, int d) {
    Vec v;
    for (int i = 0; i < d; ++i) v.push_back(rand_elem(rng, F, 1, 2));
    return v;
}

// random element of a subspace, together with its coordinates
std::pair<Vec, Vec> rand_member(std::mt19937_64& rng, const Subspace& sub) {
    Vec coords, x(sub.ambient(), sub.field()->zero());
    for (const auto& b : sub.basis()) {
        const FieldElement c = rand_elem(rng, sub.field(), 1, 2);
        coords.push_back(c);
        x = vec_add(x, vec_scale(c, b));
    }
    return {std::move(x), std::move(coords)};
}

MatrixF unflatten(const FieldPtr& F, const Vec& v, int n) {
    MatrixF m(F, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = v[i * n + j];
    return m;
}

Vec flatten(const MatrixF& m) {
    Vec v;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

std::vector<FieldElement> ones(const FieldPtr& F, int n) {
    return std::vector<FieldElement>(n, F->one());
}

// the 4x4 anisotropic example: u = diag(1, a, b, ab+1) with a known element
// of S that is not fixed by the involution
struct Rank4Instance {
    FieldPtr F;
    FieldElement a, b;
    AlgebraPtr A;
    Vec x;
};

Rank4Instance remark_instance() {
    Rank4Instance r;
    r.F = Field::rationals({"a", "b"});
    r.a = r.F->variable(0);
    r.b = r.F->variable(1);
    const FieldElement one = r.F->one();
    r.A = InvolutionAlgebra::matrix_algebra(r.F, 4, {one, r.a, r.b, r.a * r.b + one});
    const FieldElement ab1 = (r.a * r.b + one).inv();
    MatrixF m(r.F, 4, 4);
    m(0, 1) = (r.a * r.b).inv();
    m(0, 2) = r.b.inv();
    m(1, 3) = r.a * ab1;
    m(2, 0) = one;
    m(2, 3) = ab1;
    m(3, 1) = one + (r.a * r.b).inv();
    r.x = flatten(m);
    return r;
}

}  // namespace

TEST_CASE("alternator subalgebra: transpose on 2x2 matrices over GF(2)") {
    auto F = Field::gf2k(1);
    auto A = InvolutionAlgebra::matrix_algebra(F, 2, ones(F, 2));
    const AlternatorData data = alternator_subalgebra(*A);

    CHECK(data.s_basis.dim() == 3);
    CHECK(data.q_form().isometric(TSQForm(F, {F->one(), F->zero(), F->zero()})));
    CHECK(data.q_form().matches_transpose_profile(2));

    // S' = S n Alt is all of Alt here, and E12 + E21 squares to the identity
    CHECK(data.s_prime_basis.dim() == 1);
    CHECK(data.s_prime_basis == A->alt_sym().alt);
    CHECK(data.q_prime_coeffs == std::vector<FieldElement>{F->one()});

    CHECK(psi_kernel(*A).dim() == 2);
    CHECK_FALSE(is_direct(*A));
}

TEST_CASE("alternator subalgebra: diagonal twist (1, t) on 2x2 matrices") {
    auto F = Field::rationals({"t"});
    const FieldElement t = F->variable(0), one = F->one(), zero = F->zero();
    auto A = InvolutionAlgebra::matrix_algebra(F, 2, {one, t});
    const AlternatorData data = alternator_subalgebra(*A);

    // S = {[[p, q], [tq, p]]} = F 1 + F (E12 + t E21)
    const Vec j{zero, one, t, zero};
    CHECK(data.s_basis == Subspace::span(F, 4, {A->unit(), j}));
    CHECK(data.q_coeffs == std::vector<FieldElement>({one, t}));
    CHECK_FALSE(data.q_form().matches_transpose_profile(2));

    CHECK(data.s_prime_basis == Subspace::span(F, 4, {j}));
    CHECK(data.q_prime_coeffs == std::vector<FieldElement>{t});

    CHECK(psi_kernel(*A).dim() == 0);
    CHECK(is_direct(*A));
    CHECK(s_field_test(data, *A).verdict == SFieldVerdict::field);
}

TEST_CASE("alternator subalgebra: anisotropic diagonal on 3x3 matrices") {
    auto F = Field::rationals({"t1", "t2", "t3"});
    auto A = InvolutionAlgebra::matrix_algebra(
        F, 3, {F->variable(0), F->variable(1), F->variable(2)});
    const AlternatorData data = alternator_subalgebra(*A);

    CHECK(data.s_basis.dim() == 1);
    CHECK(data.s_basis.contains(A->unit()));
    CHECK(data.q_coeffs == std::vector<FieldElement>{F->one()});
    CHECK(data.s_prime_basis.dim() == 0);
    CHECK(is_direct(*A));
    CHECK(s_field_test(data, *A).verdict == SFieldVerdict::field);
}

TEST_CASE("alternator subalgebra: transpose profile for higher rank") {
    for (auto F : {Field::gf2k(1), Field::rationals({"t"})}) {
        for (int n : {2, 3}) {
            auto A = InvolutionAlgebra::matrix_algebra(F, n, ones(F, n));
            const AlternatorData data = alternator_subalgebra(*A);
            CHECK(data.s_basis.dim() == static_cast<std::size_t>(n * n - n + 1));
            CHECK(data.q_form().matches_transpose_profile(n));
        }
    }
}

TEST_CASE("alternator data: membership, closure and semilinearity invariants") {
    auto Fq = Field::rationals({"t1", "t2"});
    auto Ft = Field::rationals({"t"});
    const Rank4Instance rem = remark_instance();
    std::vector<AlgebraPtr> instances = {
        InvolutionAlgebra::matrix_algebra(Field::gf2k(1), 2, ones(Field::gf2k(1), 2)),
        InvolutionAlgebra::matrix_algebra(Ft, 2, {Ft->one(), Ft->variable(0)}),
        InvolutionAlgebra::quaternion_algebra(Fq->variable(0), Fq->variable(1),
                                              Vec{Fq->zero(), Fq->zero(), Fq->one(), Fq->zero()}),
        rem.A,
    };
    std::mt19937_64 rng(7);

    for (const auto& A : instances) {
        const int d = A->dim();
        CAPTURE(d);
        const FieldPtr& F = A->field();
        const AlternatorData data = alternator_subalgebra(*A);
        const Subspace& alt = A->alt_sym().alt;

        CHECK(data.s_basis.contains(A->unit()));
        CHECK(q_value(*A, A->unit()) == F->one());
        CHECK(data.s_prime_basis == data.s_basis.intersect(alt));

        // defining membership holds exactly on each basis vector
        const auto& basis = data.s_basis.basis();
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const Vec diff = vec_add(A->multiply(A->apply_invol(basis[i]), basis[i]),
                                     A->scalar_vec(data.q_coeffs[i]));
            CHECK(alt.contains(diff));
        }

        // S is closed under products and q is multiplicative on them
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j) {
                const Vec p = A->multiply(basis[i], basis[j]);
                CHECK(data.s_basis.contains(p));
                CHECK(q_value(*A, p) == data.q_coeffs[i] * data.q_coeffs[j]);
            }

        // q(sum c_i f_i) = sum c_i^2 q_i, and q(c x) = c^2 q(x)
        for (int trial = 0; trial < 20; ++trial) {
            auto [x, coords] = rand_member(rng, data.s_basis);
            FieldElement expect = F->zero();
            for (std::size_t i = 0; i < coords.size(); ++i)
                expect += coords[i].square() * data.q_coeffs[i];
            CHECK(q_value(*A, x) == expect);
            const FieldElement c = rand_elem(rng, F, 1, 2);
            CHECK(q_value(*A, vec_scale(c, x)) == c.square() * expect);
        }
    }
}

TEST_CASE("pointwise q values and membership decisions") {
    const Rank4Instance rem = remark_instance();
    CHECK(q_value(*rem.A, rem.x) == rem.b.inv());
    CHECK(rem.A->apply_invol(rem.x) != rem.x);  // in S but not fixed
    CHECK(is_direct(*rem.A));

    auto F = Field::rationals({"t"});
    auto A = InvolutionAlgebra::matrix_algebra(F, 2, {F->one(), F->variable(0)});
    CHECK_FALSE(q_value(*A, A->basis_vec(1)).has_value());  // E12 is outside S
    CHECK(q_value(*A, A->zero_vec()) == F->zero());
}

TEST_CASE("split membership shortcut agrees with the generic computation") {
    auto F = Field::rationals({"t"});
    const FieldElement t = F->variable(0), one = F->one();

    const Rank4Instance rem = remark_instance();
    const std::vector<FieldElement> rem_u = {rem.F->one(), rem.a, rem.b,
                                             rem.a * rem.b + rem.F->one()};
    CHECK(split_fast_membership(4, rem_u, unflatten(rem.F, rem.x, 4), rem.b.inv()));
    CHECK_FALSE(split_fast_membership(4, rem_u, unflatten(rem.F, rem.x, 4), rem.b));
    CHECK(split_fast_membership(4, rem_u, MatrixF::identity(rem.F, 4), rem.F->one()));

    const std::vector<FieldElement> u2 = {one, t};
    auto A2 = InvolutionAlgebra::matrix_algebra(F, 2, u2);
    MatrixF e12(F, 2, 2);
    e12(0, 1) = one;
    for (const auto& lam : {F->zero(), one, t})
        CHECK_FALSE(split_fast_membership(2, u2, e12, lam));

    const std::vector<FieldElement> u3 = {one, t, t + one};
    auto A3 = InvolutionAlgebra::matrix_algebra(F, 3, u3);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const bool big = trial % 2;
        const auto& A = big ? A3 : A2;
        const auto& u = big ? u3 : u2;
        const int n = big ? 3 : 2;
        Vec x = trial % 3 == 0 ? rand_vec(rng, F, n * n)
                               : rand_member(rng, alternator_subalgebra(*A).s_basis).first;
        const auto lam = q_value(*A, x);
        if (lam) {
            CHECK(split_fast_membership(n, u, unflatten(F, x, n), *lam));
            CHECK_FALSE(split_fast_membership(n, u, unflatten(F, x, n), *lam + one));
        } else {
            for (const auto& guess : {F->zero(), one, t, rand_elem(rng, F)})
                CHECK_FALSE(split_fast_membership(n, u, unflatten(F, x, n), guess));
        }
    }
}

TEST_CASE("elements of S scale the diagonal form by their q value") {
    auto F = Field::rationals({"t"});
    const FieldElement t = F->variable(0), one = F->one();
    std::mt19937_64 rng(13);

    for (const auto& u : {std::vector<FieldElement>{one, t},
                          std::vector<FieldElement>{one, t, t + one},
                          std::vector<FieldElement>{t, t * t + t, one}}) {
        const int n = static_cast<int>(u.size());
        auto A = InvolutionAlgebra::matrix_algebra(F, n, u);
        const AlternatorData data = alternator_subalgebra(*A);
        std::vector<FieldElement> uinv;
        for (const auto& ui : u) uinv.push_back(ui.inv());
        const BilinDiagForm b(F, uinv);

        for (int trial = 0; trial < 25; ++trial) {
            const Vec x = rand_member(rng, data.s_basis).first;
            const Vec v = rand_vec(rng, F, n);
            const Vec xv = unflatten(F, x, n).mul_vec(v);
            CHECK(b.diag_value(xv) == *q_value(*A, x) * b.diag_value(v));
        }
    }
}

TEST_CASE("conjugation transports S and preserves q values") {
    auto F = Field::rationals({"t"});
    const FieldElement t = F->variable(0), one = F->one(), zero = F->zero();
    auto A = InvolutionAlgebra::matrix_algebra(F, 2, {one, t});
    const Vec g{one, one, zero, one};  // [[1, 1], [0, 1]]
    auto B = InvolutionAlgebra::conjugate(A, g);

    const AlternatorData da = alternator_subalgebra(*A);
    const AlternatorData db = alternator_subalgebra(*B);
    CHECK(da.s_basis.dim() == db.s_basis.dim());
    CHECK(da.q_form().isometric(db.q_form()));
    CHECK(da.q_prime_form().isometric(db.q_prime_form()));
    CHECK(is_direct(*A) == is_direct(*B));

    const Vec ginv = *A->inverse(g);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const Vec x = rand_member(rng, da.s_basis).first;
        const Vec y = A->multiply(A->multiply(g, x), ginv);
        CHECK(db.s_basis.contains(y));
        CHECK(q_value(*B, y) == q_value(*A, x));
    }
}

TEST_CASE("field test: the four decision paths") {
    auto Ft = Field::rationals({"t"});
    const FieldElement t = Ft->variable(0), one = Ft->one();

    SUBCASE("quadratic field extension inside 2x2 matrices") {
        auto A = InvolutionAlgebra::matrix_algebra(Ft, 2, {one, t});
        const auto res = s_field_test(alternator_subalgebra(*A), *A);
        CHECK(res.verdict == SFieldVerdict::field);
    }

    SUBCASE("noncommutative S") {
        auto F = Field::gf2k(1);
        auto A = InvolutionAlgebra::matrix_algebra(F, 2, ones(F, 2));
        const auto res = s_field_test(alternator_subalgebra(*A), *A);
        CHECK(res.verdict == SFieldVerdict::not_field);
        CHECK(res.detail.find("noncommutative") != std::string::npos);
        REQUIRE(res.witness.has_value());
        CHECK_FALSE(vec_is_zero(*res.witness));
    }

    SUBCASE("split quaternion algebra: S is not a field") {
        // [t, 1) is split (j^2 = 1), and S grows past F + Fj
        auto A = InvolutionAlgebra::quaternion_algebra(
            t, one, Vec{Ft->zero(), Ft->zero(), one, Ft->zero()});
        const AlternatorData data = alternator_subalgebra(*A);
        CHECK(data.s_basis.dim() == 3);
        CHECK(s_field_test(data, *A).verdict == SFieldVerdict::not_field);
    }

    SUBCASE("scalar squares with dependent values yield a nilpotent") {
        // span{1, t 1 + E12}: both squares are scalar but 1, t^2 are
        // F^2-dependent, so t 1 + (t 1 + E12) = E12 squares to zero
        auto A = InvolutionAlgebra::matrix_algebra(Ft, 2, {one, one});
        MatrixF m(Ft, 2, 2);
        m(0, 0) = m(1, 1) = t;
        m(0, 1) = one;
        const Subspace sub = Subspace::span(Ft, 4, {A->unit(), flatten(m)});
        const auto res = commutative_field_test(*A, sub);
        CHECK(res.verdict == SFieldVerdict::not_field);
        CHECK(res.detail.find("nilpotent") != std::string::npos);
        REQUIRE(res.witness.has_value());
        CHECK_FALSE(vec_is_zero(*res.witness));
        CHECK(vec_is_zero(A->multiply(*res.witness, *res.witness)));
    }

    SUBCASE("nilpotents found only after iterating the square map") {
        auto A = InvolutionAlgebra::matrix_algebra(Ft, 4, ones(Ft, 4));
        MatrixF N(Ft, 4, 4);
        N(0, 1) = N(1, 2) = N(2, 3) = one;
        const MatrixF N2 = N * N;
        const Subspace sub = Subspace::span(
            Ft, 16, {A->unit(), flatten(N), flatten(N2), flatten(N2 * N)});
        const auto res = commutative_field_test(*A, sub);
        CHECK(res.verdict == SFieldVerdict::not_field);
        CHECK(res.detail.find("nilpotent") != std::string::npos);
        REQUIRE(res.witness.has_value());
        const Vec& w = *res.witness;
        CHECK_FALSE(vec_is_zero(w));
        const Vec w2 = A->multiply(w, w);
        CHECK(vec_is_zero(A->multiply(w2, w2)));
    }

    SUBCASE("purely inseparable quartic extension stays inconclusive") {
        // companion of x^4 - t: a field F(t^(1/4)), but no basis square is
        // scalar and no nilpotents exist, so the test reports neither
        auto A = InvolutionAlgebra::matrix_algebra(Ft, 4, ones(Ft, 4));
        MatrixF C(Ft, 4, 4);
        C(1, 0) = C(2, 1) = C(3, 2) = one;
        C(0, 3) = t;
        const MatrixF C2 = C * C;
        const Subspace sub = Subspace::span(
            Ft, 16, {A->unit(), flatten(C), flatten(C2), flatten(C2 * C)});
        CHECK(commutative_field_test(*A, sub).verdict == SFieldVerdict::inconclusive);
    }

    SUBCASE("subspace without the unit") {
        auto A = InvolutionAlgebra::matrix_algebra(Ft, 2, {one, t});
        const Subspace sub = Subspace::span(Ft, 4, {A->basis_vec(1)});
        CHECK(commutative_field_test(*A, sub).verdict == SFieldVerdict::not_field);
    }
}

TEST_CASE("pfister invariant: single split factor") {
    auto F = Field::rationals({"t"});
    const FieldElement t = F->variable(0), one = F->one(), zero = F->zero();
    auto A = InvolutionAlgebra::matrix_algebra(F, 2, {one, t});
    const PhiData pd = phi_and_pfister(*A);

    REQUIRE(pd.generators.size() == 1);
    CHECK(pd.generators[0] == Vec{zero, one, t, zero});  // E12 + t E21
    CHECK(pd.alphas == std::vector<FieldElement>{t});
    CHECK(pd.pf.expand().coeffs() == std::vector<FieldElement>({one, t}));

    // determinant oracle: the invariant of Int(diag(u)) o transpose is
    // <<det u>>
    CHECK(pd.pf.isometric(PfisterForm(F, {one * t})));
    CHECK(pd.phi_subalgebra.dim() == 2);

    const AlternatorData data = alternator_subalgebra(*A);
    CHECK(pd.phi_subalgebra == data.s_basis);  // pf anisotropic here
}

TEST_CASE("pfister invariant: quaternion leaf") {
    auto F = Field::rationals({"t1", "t2"});
    const FieldElement t1 = F->variable(0), t2 = F->variable(1);
    auto A = InvolutionAlgebra::quaternion_algebra(
        t1, t2, Vec{F->zero(), F->zero(), F->one(), F->zero()});
    const PhiData pd = phi_and_pfister(*A);

    REQUIRE(pd.generators.size() == 1);
    CHECK(pd.generators[0] == A->basis_vec(2));  // j itself
    CHECK(pd.alphas == std::vector<FieldElement>{t2});
    CHECK(pd.pf.is_anisotropic());

    const AlternatorData data = alternator_subalgebra(*A);
    CHECK(data.s_basis == pd.phi_subalgebra);
    CHECK(data.q_form().isometric(TSQForm(F, pd.pf.expand().coeffs())));
}

TEST_CASE("pfister invariant: tensor products and diagonal recognition") {
    auto F = Field::rationals({"t1", "t2"});
    const FieldElement t1 = F->variable(0), t2 = F->variable(1), one = F->one();

    auto L = InvolutionAlgebra::matrix_algebra(F, 2, {one, t1});
    auto R = InvolutionAlgebra::matrix_algebra(F, 2, {one, t2});
    auto T = InvolutionAlgebra::tensor(L, R);
    const PhiData pt = phi_and_pfister(*T);
    CHECK(pt.alphas == std::vector<FieldElement>({t1, t2}));
    CHECK(pt.pf.expand().coeffs() == std::vector<FieldElement>({one, t1, t2, t1 * t2}));
    CHECK(pt.phi_subalgebra.dim() == 4);

    // the same involution presented as a 4x4 diagonal
    auto M = InvolutionAlgebra::matrix_algebra(F, 4, {one, t1, t2, t1 * t2});
    const PhiData pm = phi_and_pfister(*M);
    CHECK(pm.alphas == std::vector<FieldElement>({t1, t2}));
    CHECK(pm.pf.isometric(pt.pf));

    // anisotropic invariant forces S = Phi, and q is squaring on Phi
    CHECK(pt.pf.is_anisotropic());
    const AlternatorData data = alternator_subalgebra(*T);
    CHECK(data.s_basis == pt.phi_subalgebra);
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 15; ++trial) {
        const Vec x = rand_member(rng, pt.phi_subalgebra).first;
        const Vec sq = T->multiply(x, x);
        CHECK(q_value(*T, x) == T->as_scalar(sq));
    }
}

TEST_CASE("pfister invariant: factor order does not matter") {
    auto F = Field::rationals({"t1", "t2"});
    const Vec uj{F->zero(), F->zero(), F->one(), F->zero()};
    auto Q1 = InvolutionAlgebra::quaternion_algebra(F->variable(0), F->variable(1), uj);
    auto Q2 = InvolutionAlgebra::quaternion_algebra(F->variable(1), F->variable(0), uj);
    const PhiData p12 = phi_and_pfister(*InvolutionAlgebra::tensor(Q1, Q2));
    const PhiData p21 = phi_and_pfister(*InvolutionAlgebra::tensor(Q2, Q1));
    CHECK(p12.alphas == std::vector<FieldElement>({F->variable(1), F->variable(0)}));
    CHECK(p21.alphas == std::vector<FieldElement>({F->variable(0), F->variable(1)}));
    CHECK(p12.pf.isometric(p21.pf));
}

TEST_CASE("pfister invariant: conjugation transports the generators") {
    auto F = Field::rationals({"t"});
    const FieldElement t = F->variable(0), one = F->one(), zero = F->zero();
    auto A = InvolutionAlgebra::matrix_algebra(F, 2, {one, t});
    auto B = InvolutionAlgebra::conjugate(A, Vec{one, one, zero, one});
    const PhiData pd = phi_and_pfister(*B);
    CHECK(pd.alphas == std::vector<FieldElement>{t});
    CHECK(B->alt_sym().alt.contains(pd.generators[0]));
    CHECK(pd.phi_subalgebra == alternator_subalgebra(*B).s_basis);
}

TEST_CASE("pfister invariant: unsupported shapes are rejected") {
    const Rank4Instance rem = remark_instance();
    CHECK_THROWS_AS(phi_and_pfister(*rem.A), UnsupportedProvenance);

    auto F = Field::rationals({"t1", "t2", "t3"});
    auto M3 = InvolutionAlgebra::matrix_algebra(
        F, 3, {F->variable(0), F->variable(1), F->variable(2)});
    CHECK_THROWS_AS(phi_and_pfister(*M3), UnsupportedProvenance);
}

TEST_CASE("symmetric alternator subalgebras are direct, but not conversely") {
    auto Ft = Field::rationals({"t"});
    auto F3 = Field::rationals({"t1", "t2", "t3"});
    std::vector<AlgebraPtr> instances = {
        InvolutionAlgebra::matrix_algebra(Ft, 2, {Ft->one(), Ft->variable(0)}),
        InvolutionAlgebra::matrix_algebra(
            F3, 3, {F3->variable(0), F3->variable(1), F3->variable(2)}),
        InvolutionAlgebra::matrix_algebra(Field::gf2k(1), 2, ones(Field::gf2k(1), 2)),
    };
    for (const auto& A : instances) {
        const AlternatorData data = alternator_subalgebra(*A);
        if (A->alt_sym().sym.contains_subspace(data.s_basis)) CHECK(is_direct(*A));
    }

    // the 4x4 anisotropic example is direct although S contains a
    // non-symmetric element
    const Rank4Instance rem = remark_instance();
    CHECK(alternator_subalgebra(*rem.A).s_basis.contains(rem.x));
    CHECK(rem.A->apply_invol(rem.x) != rem.x);
    CHECK(is_direct(*rem.A));
}
