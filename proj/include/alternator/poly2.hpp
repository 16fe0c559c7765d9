#ifndef ALTERNATOR_POLY2_HPP
#define ALTERNATOR_POLY2_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alternator/errors.hpp"

namespace alternator {

/// Hard cap on the number of rational-function variables.  Monomials are
/// fixed-size arrays so they stay trivially copyable and comparable.
inline constexpr int kMaxVars = 4;

/// Exponent vector of a monomial t1^e1 * ... * tm^em.  Unused slots are zero.
struct Monomial {
    std::array<std::uint16_t, kMaxVars> e{};

    bool operator==(const Monomial&) const = default;

    /// Lexicographic order with variable 0 most significant.
    bool lex_less(const Monomial& o) const { return e < o.e; }

    bool divides(const Monomial& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] + o.e[i]);
        return r;
    }
    /// Quotient of exponents; caller must ensure divisibility.
    Monomial operator/(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] - o.e[i]);
        return r;
    }
    int degree(int var) const { return e[var]; }
    int total_degree() const {
        int d = 0;
        for (int i = 0; i < kMaxVars; ++i) d += e[i];
        return d;
    }
    bool is_one() const { return total_degree() == 0; }
};

/// Multivariate polynomial over GF(2): a set of monomials, each with the
/// (only possible) nonzero coefficient 1.  Terms are kept sorted in
/// descending lex order, so the leading monomial is terms().front() and two
/// equal polynomials are structurally identical.  Addition is symmetric
/// difference of the term sets; in particular p + p = 0.
class Poly2 {
public:
    Poly2() = default;
    static Poly2 zero() { return Poly2(); }
    static Poly2 one() { return monomial(Monomial{}); }
    static Poly2 monomial(const Monomial& m);
    static Poly2 variable(int var, int exponent = 1);
    /// Builds from an arbitrary term list; duplicate monomials cancel in pairs.
    static Poly2 from_terms(std::vector<Monomial> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].is_one(); }
    const std::vector<Monomial>& terms() const { return terms_; }
    const Monomial& leading() const { return terms_.front(); }
    int degree(int var) const;
    int max_var() const;  // largest variable index that occurs, -1 if constant

    bool operator==(const Poly2&) const = default;

    Poly2 operator+(const Poly2& o) const;
    Poly2 operator*(const Poly2& o) const;
    Poly2 times_monomial(const Monomial& m) const;

    /// Exact division: p = q * d with remainder zero, else nullopt.
    std::optional<Poly2> divided_by(const Poly2& d) const;

    /// In characteristic two squaring just doubles every exponent.
    Poly2 square() const;
    /// True iff every exponent is even; then the square root is unique.
    bool is_square() const;
    Poly2 sqrt() const;

    /// Splits into 2^m classes by exponent parity in the first m variables:
    /// p = sum over eps of t^eps * part[eps]^2, with eps read as a bit
    /// pattern (variable 0 the most significant bit).
    std::vector<Poly2> parity_split(int nvars) const;

    std::string str(const std::vector<std::string>& var_names) const;

private:
    std::vector<Monomial> terms_;  // descending lex, no duplicates
    void normalize();
};

/// GCD by primitive pseudo-remainder sequences.  The highest occurring
/// variable is treated as the main variable, contents are extracted
/// recursively.  gcd(p, 0) = p; gcd of two nonzero constants is 1.
Poly2 poly_gcd(const Poly2& p, const Poly2& q);

}  // namespace alternator

#endif
