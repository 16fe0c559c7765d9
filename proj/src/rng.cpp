#include "alternator/rng.hpp"

namespace alternator {

FieldElement Sampler::elem(const FieldPtr& F, int max_deg, int max_terms) {
    if (F->kind() == Field::Kind::gf2k)
        return F->from_bits(static_cast<std::uint32_t>(pick(*F->cardinality())));
    auto rand_poly = [&](bool want_nonzero) {
        Poly2 p = Poly2::zero();
        do {
            std::vector<Monomial> ts;
            const int nt = static_cast<int>(pick(static_cast<std::uint64_t>(max_terms) + 1));
            for (int t = 0; t < nt; ++t) {
                Monomial m;
                for (int i = 0; i < F->num_vars(); ++i)
                    m.e[i] = static_cast<std::uint16_t>(pick(static_cast<std::uint64_t>(max_deg) + 1));
                ts.push_back(m);
            }
            p = Poly2::from_terms(std::move(ts));
        } while (want_nonzero && p.is_zero());
        return p;
    };
    // denominators stay low-degree to keep downstream gcds cheap
    return F->fraction(rand_poly(false), pick(4) == 0 ? rand_poly(true) : Poly2::one());
}

FieldElement Sampler::nonzero(const FieldPtr& F, int max_deg, int max_terms) {
    FieldElement e = F->zero();
    while (e.is_zero()) e = elem(F, max_deg, max_terms);
    return e;
}

Vec Sampler::vec(const FieldPtr& F, int d, int max_deg) {
    Vec v;
    v.reserve(d);
    for (int i = 0; i < d; ++i) v.push_back(elem(F, max_deg, 2));
    return v;
}

}  // namespace alternator
