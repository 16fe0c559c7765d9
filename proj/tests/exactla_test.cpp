#include <doctest.h>

#include <random>

#include "alternator/linalg.hpp"
#include "oracle_helpers.hpp"

using namespace alternator;

namespace {

FieldElement rand_elem(std::mt19937_64& rng, const FieldPtr& F, int max_deg = 2, int max_terms = 2) {
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

MatrixF rand_matrix(std::mt19937_64& rng, const FieldPtr& F, std::size_t r, std::size_t c) {
    MatrixF m(F, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rand_elem(rng, F);
    return m;
}

}  // namespace

TEST_CASE("kernel of small matrices") {
    auto F2 = Field::gf2k(1);
    CHECK(kernel_of(MatrixF::identity(F2, 3)).dim() == 0);
    CHECK(kernel_of(MatrixF(F2, 2, 3)).dim() == 3);
    CHECK(kernel_of(MatrixF(F2, 2, 3)) == Subspace::full(F2, 3));

    auto F = Field::rationals({"t"});
    const auto t = F->variable(0);
    const auto one = F->one();
    MatrixF m = MatrixF::from_rows(F, {{one, t}, {t, t * t}});
    const Subspace k = kernel_of(m);
    REQUIRE(k.dim() == 1);
    CHECK(k == Subspace::span(F, 2, {{t, one}}));
    CHECK(k.contains({t, one}));
    // oracle: multiply out
    CHECK(vec_is_zero(m.mul_vec(k.basis()[0])));
}

TEST_CASE("kernel rank-nullity and exactness on random matrices") {
    std::mt19937_64 rng(43);
    for (const auto& F : {Field::gf2k(1), Field::gf2k(2), Field::rationals({"t"}),
                          Field::rationals({"t1", "t2"})}) {
        for (int it = 0; it < 40; ++it) {
            const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
            const MatrixF m = rand_matrix(rng, F, r, c);
            MatrixF red = m;
            const auto pivots = rref_in_place(red, Exec::serial);
            const Subspace k = kernel_of(m);
            CHECK(pivots.size() + k.dim() == c);
            for (const auto& v : k.basis()) CHECK(vec_is_zero(m.mul_vec(v)));
        }
    }
}

TEST_CASE("serial and parallel elimination agree exactly") {
    std::mt19937_64 rng(47);
    for (const auto& F : {Field::gf2k(4), Field::rationals({"t"})}) {
        for (int it = 0; it < 10; ++it) {
            const MatrixF m = rand_matrix(rng, F, 24, 20);
            MatrixF a = m, b = m;
            const auto pa = rref_in_place(a, Exec::serial);
            const auto pb = rref_in_place(b, Exec::parallel);
            CHECK(pa == pb);
            CHECK(a == b);
        }
    }
    // above the size threshold as well
    const auto F = Field::gf2k(3);
    const MatrixF m = rand_matrix(rng, F, 64, 48);
    MatrixF a = m, b = m;
    CHECK(rref_in_place(a, Exec::serial) == rref_in_place(b, Exec::parallel));
    CHECK(a == b);
}

TEST_CASE("span examples") {
    auto F2 = Field::gf2k(1);
    const auto o = F2->one(), z = F2->zero();
    CHECK(Subspace::span(F2, 2, {{o, z}, {o, z}}).dim() == 1);
    CHECK(Subspace::span(F2, 2, {}).dim() == 0);

    auto F = Field::rationals({"t"});
    const auto t = F->variable(0);
    const auto one = F->one(), zero = F->zero();
    // (t, t^2) = t * (1, t); (0,1) independent; det[[1,0],[t,1]]... oracle:
    // determinant of first and third generators is 1*1 + t*0 = 1, nonzero
    const Subspace s = Subspace::span(F, 2, {{one, t}, {t, t * t}, {zero, one}});
    CHECK(s.dim() == 2);
    CHECK(one * one + t * zero == one);
    CHECK(s == Subspace::full(F, 2));
}

TEST_CASE("subspace membership and coordinates") {
    auto F = Field::rationals({"t"});
    const auto t = F->variable(0);
    const auto one = F->one(), zero = F->zero();
    const Subspace s = Subspace::span(F, 3, {{one, t, zero}, {zero, zero, one}});
    CHECK(s.contains({one, t, one}));
    CHECK(s.contains({t, t * t, zero}));
    CHECK(!s.contains({one, one, zero}));
    CHECK(!s.contains({zero, one, zero}));

    const auto co = s.coordinates({t, t * t, t + one});
    REQUIRE(co.has_value());
    REQUIRE(co->size() == 2);
    CHECK((*co)[0] == t);
    CHECK((*co)[1] == t + one);
    CHECK(!s.coordinates({zero, one, zero}).has_value());
}

TEST_CASE("subspace set operations") {
    auto F2 = Field::gf2k(1);
    const auto o = F2->one(), z = F2->zero();
    const Subspace ex = Subspace::span(F2, 2, {{o, z}});
    const Subspace ey = Subspace::span(F2, 2, {{z, o}});
    CHECK(ex.intersect(ex) == ex);
    CHECK(ex.intersect(ey).dim() == 0);
    CHECK(ex.sum(ey) == Subspace::full(F2, 2));

    auto F = Field::rationals({"t"});
    const auto t = F->variable(0);
    const auto one = F->one(), zero = F->zero();
    const Subspace a = Subspace::span(F, 2, {{one, t}});
    const Subspace b = Subspace::span(F, 2, {{one, t}, {zero, one}});
    const Subspace i = a.intersect(b);
    CHECK(i == a);
    // oracle: membership
    CHECK(b.contains({one, t}));
    CHECK(b.contains_subspace(a));
    CHECK(!a.contains_subspace(b));

    CHECK_THROWS_AS(ex.intersect(Subspace::zero(F2, 3)), DimensionMismatch);
}

TEST_CASE("subspace equality is an equivalence relation") {
    std::mt19937_64 rng(53);
    auto F = Field::gf2k(2);
    for (int it = 0; it < 30; ++it) {
        std::vector<Subspace> s;
        for (int j = 0; j < 3; ++j) {
            std::vector<Vec> gens;
            const std::size_t ng = rng() % 4;
            for (std::size_t g = 0; g < ng; ++g) {
                Vec v;
                for (int c = 0; c < 3; ++c) v.push_back(rand_elem(rng, F));
                gens.push_back(std::move(v));
            }
            s.push_back(Subspace::span(F, 3, gens));
        }
        for (const auto& x : s) CHECK(x == x);
        if (s[0] == s[1]) CHECK((s[1] == s[0]));
        if (s[0] == s[1] && s[1] == s[2]) CHECK(s[0] == s[2]);
        // canonical-form equality agrees with mutual containment
        CHECK((s[0] == s[1]) == (s[0].contains_subspace(s[1]) && s[1].contains_subspace(s[0])));
    }
}

TEST_CASE("semilinear kernel: hand-worked instances") {
    auto F = Field::rationals({"t"});
    const auto t = F->variable(0);
    const auto one = F->one();

    // {1, t} is F^2-independent, so the kernel is trivial
    CHECK(semilinear_kernel(F, {{one}, {t}}).dim() == 0);
    // lambda1^2 + lambda2^2 = (lambda1 + lambda2)^2
    const Subspace k = semilinear_kernel(F, {{one}, {one}});
    REQUIRE(k.dim() == 1);
    CHECK(k.basis()[0] == Vec{one, one});

    // oracle for the first: frob_decompose of lambda1^2 + t*lambda2^2 has
    // coordinates (lambda1, lambda2), which vanish only together
    const auto co = (one + t).frobenius_coords();
    CHECK(co[0].is_one());
    CHECK(co[1].is_one());
}

TEST_CASE("semilinear kernel over GF(2) degenerates to the linear kernel") {
    std::mt19937_64 rng(59);
    auto F = Field::gf2k(1);
    for (int it = 0; it < 30; ++it) {
        const std::size_t k = 1 + rng() % 5, d = 1 + rng() % 4;
        std::vector<Vec> images;
        for (std::size_t i = 0; i < k; ++i) {
            Vec v;
            for (std::size_t c = 0; c < d; ++c) v.push_back(rand_elem(rng, F));
            images.push_back(std::move(v));
        }
        MatrixF m(F, d, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t c = 0; c < d; ++c) m(c, i) = images[i][c];
        CHECK(semilinear_kernel(F, images) == kernel_of(m));
    }
}

TEST_CASE("semilinear kernel agrees with exhaustive enumeration") {
    std::mt19937_64 rng(61);
    for (int kk : {1, 2}) {
        auto F = Field::gf2k(kk);
        const auto elems = oracle::all_elements(F);
        for (int it = 0; it < 25; ++it) {
            const std::size_t k = 1 + rng() % 6, d = 1 + rng() % 3;
            std::vector<Vec> images;
            for (std::size_t i = 0; i < k; ++i) {
                Vec v;
                for (std::size_t c = 0; c < d; ++c) v.push_back(rand_elem(rng, F));
                images.push_back(std::move(v));
            }
            const Subspace ker = semilinear_kernel(F, images);

            std::uint64_t solutions = 0;
            const std::size_t q = elems.size();
            std::uint64_t total = 1;
            for (std::size_t i = 0; i < k; ++i) total *= q;
            for (std::uint64_t code = 0; code < total; ++code) {
                // decode a lambda-vector
                Vec lambda;
                std::uint64_t c2 = code;
                for (std::size_t i = 0; i < k; ++i) {
                    lambda.push_back(elems[c2 % q]);
                    c2 /= q;
                }
                Vec sum(d, F->zero());
                for (std::size_t i = 0; i < k; ++i)
                    sum = vec_add(sum, vec_scale(lambda[i] * lambda[i], images[i]));
                if (vec_is_zero(sum)) {
                    ++solutions;
                    CHECK(ker.contains(lambda));
                }
            }
            // |kernel| = q^dim: the enumerated solution set is exactly the kernel
            std::uint64_t expect = 1;
            for (std::size_t i = 0; i < ker.dim(); ++i) expect *= q;
            CHECK(solutions == expect);
        }
    }
}

TEST_CASE("semilinear kernel solutions close under scaling") {
    std::mt19937_64 rng(67);
    auto F = Field::rationals({"t1", "t2"});
    for (int it = 0; it < 10; ++it) {
        const std::size_t k = 2 + rng() % 4, d = 1 + rng() % 3;
        std::vector<Vec> images;
        for (std::size_t i = 0; i < k; ++i) {
            Vec v;
            for (std::size_t c = 0; c < d; ++c) v.push_back(rand_elem(rng, F, 1, 2));
            images.push_back(std::move(v));
        }
        const Subspace ker = semilinear_kernel(F, images);
        for (const auto& lambda : ker.basis()) {
            for (int s = 0; s < 10; ++s) {
                const FieldElement c = rand_elem(rng, F, 1, 2);
                Vec sum(d, F->zero());
                for (std::size_t i = 0; i < k; ++i) {
                    const FieldElement cl = c * lambda[i];
                    sum = vec_add(sum, vec_scale(cl * cl, images[i]));
                }
                CHECK(vec_is_zero(sum));
            }
        }
    }
}

TEST_CASE("f2 span dimension") {
    auto F = Field::rationals({"t"});
    const auto t = F->variable(0);
    const auto one = F->one();
    CHECK(f2span_dim(F, {one, t}) == 2);
    CHECK(!t.sqrt().has_value());  // oracle: t is not a square
    CHECK(f2span_dim(F, {one, one}) == 1);
    CHECK(f2span_dim(F, {}) == 0);
    CHECK(f2span_dim(F, {F->zero()}) == 0);

    auto F2 = Field::rationals({"t1", "t2"});
    const auto t1 = F2->variable(0), t2 = F2->variable(1);
    CHECK(f2span_dim(F2, {F2->one(), t1, t2, t1 * t2}) == 4);

    // perfect field: every nonzero list spans the 1-dimensional F^2-space F
    auto G = Field::gf2k(3);
    CHECK(f2span_dim(G, {G->one(), G->variable(0)}) == 1);

    // invariance under F^2-scaling
    std::mt19937_64 rng(71);
    for (int it = 0; it < 25; ++it) {
        std::vector<FieldElement> vals;
        const std::size_t n = 1 + rng() % 4;
        for (std::size_t i = 0; i < n; ++i) vals.push_back(rand_elem(rng, F2, 1, 2));
        const std::size_t base = f2span_dim(F2, vals);
        FieldElement c = F2->zero();
        while (c.is_zero()) c = rand_elem(rng, F2, 1, 2);
        std::vector<FieldElement> scaled;
        for (const auto& v : vals) scaled.push_back(c * c * v);
        CHECK(f2span_dim(F2, scaled) == base);
    }
}

TEST_CASE("quotient map: kernel, rank and linearity") {
    auto F = Field::rationals({"t"});
    const auto t = F->variable(0);
    const auto one = F->one();
    std::mt19937_64 rng(1207);

    for (int it = 0; it < 20; ++it) {
        const std::size_t n = 3 + rng() % 4;
        std::vector<Vec> gens;
        for (std::size_t g = 0; g < 1 + rng() % 3; ++g) {
            Vec v;
            for (std::size_t i = 0; i < n; ++i) v.push_back(rand_elem(rng, F));
            gens.push_back(std::move(v));
        }
        const Subspace w = Subspace::span(F, n, gens);
        const QuotientMap q(w);
        CHECK(q.codim() == n - w.dim());

        // members map to zero, and only members do
        for (const auto& g : gens) CHECK(vec_is_zero(q.project(g)));
        for (int trial = 0; trial < 10; ++trial) {
            Vec v;
            for (std::size_t i = 0; i < n; ++i) v.push_back(rand_elem(rng, F));
            const Vec pv = q.project(v);
            CHECK(pv.size() == q.codim());
            CHECK(vec_is_zero(pv) == w.contains(v));

            // linearity: project(v + c*u) = project(v) + c*project(u)
            Vec u;
            for (std::size_t i = 0; i < n; ++i) u.push_back(rand_elem(rng, F));
            const FieldElement c = rand_elem(rng, F);
            const Vec lhs = q.project(vec_add(v, vec_scale(c, u)));
            const Vec rhs = vec_add(pv, vec_scale(c, q.project(u)));
            CHECK(lhs == rhs);
        }
    }

    // a full-space quotient is the zero map; a zero-space quotient is bijective
    const Subspace full = Subspace::full(F, 3);
    CHECK(QuotientMap(full).codim() == 0);
    const QuotientMap qz{Subspace::zero(F, 3)};
    CHECK(qz.codim() == 3);
    CHECK(qz.project({one, t, one * t}) == Vec{one, t, t});
}
