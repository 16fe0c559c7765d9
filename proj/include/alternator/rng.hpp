#ifndef ALTERNATOR_RNG_HPP
#define ALTERNATOR_RNG_HPP

#include <cstdint>
#include <random>

#include "alternator/field.hpp"
#include "alternator/linalg.hpp"

namespace alternator {

/// Deterministic element sampler.  mt19937_64 has a fully specified output
/// sequence and draws are reduced with %, so a seed reproduces the same
/// instances on every platform.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t pick(std::uint64_t n) { return eng_() % n; }
    bool coin() { return eng_() & 1; }

    FieldElement elem(const FieldPtr& F, int max_deg = 2, int max_terms = 2);
    FieldElement nonzero(const FieldPtr& F, int max_deg = 2, int max_terms = 2);
    Vec vec(const FieldPtr& F, int d, int max_deg = 1);

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

}  // namespace alternator

#endif
