#ifndef ALTERNATOR_FIELD_HPP
#define ALTERNATOR_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alternator/errors.hpp"
#include "alternator/poly2.hpp"

namespace alternator {

class FieldElement;
class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A supported coefficient field of characteristic two: either the finite
/// field GF(2^k) given by an irreducible modulus, or the rational function
/// field GF(2)(t1,...,tm).  All arithmetic is exact.
///
/// Fields are immutable and shared by pointer; two Field objects compare
/// equal iff they describe the same field, so independently parsed
/// descriptors interoperate.
class Field : public std::enable_shared_from_this<Field> {
public:
    enum class Kind { gf2k, ratfunc };

    /// GF(2^k) with a default modulus from a built-in table (k <= 8).
    static FieldPtr gf2k(int k);
    /// GF(2^k), modulus given as bits [c0, c1, ..., ck] of an irreducible
    /// degree-k polynomial; irreducibility is verified by trial division.
    static FieldPtr gf2k(int k, const std::vector<int>& modulus_bits);
    /// GF(2)(t1,...,tm), m >= 1.  Variable names must be distinct and match
    /// [a-zA-Z][a-zA-Z0-9]*.
    static FieldPtr rationals(std::vector<std::string> vars);

    Kind kind() const { return kind_; }
    bool is_perfect() const { return kind_ == Kind::gf2k; }
    int extension_degree() const { return k_; }            // gf2k only
    std::uint32_t modulus_bits() const { return modulus_; }  // gf2k only
    int num_vars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }

    bool operator==(const Field& o) const;
    bool operator!=(const Field& o) const { return !(*this == o); }

    FieldElement zero() const;
    FieldElement one() const;
    /// gf2k element from its power-basis coordinate bits.
    FieldElement from_bits(std::uint32_t bits) const;
    /// ratfunc element num/den; the fraction is reduced on construction.
    FieldElement fraction(Poly2 num, Poly2 den) const;
    FieldElement from_poly(Poly2 num) const;
    FieldElement variable(int i) const;

    /// Parses the canonical element grammar: monomials `t1^2*t2`, `+`, `/`,
    /// parentheses; the only literals are 0 and 1.  For GF(2^k) the single
    /// variable `g` denotes the power-basis generator.
    FieldElement parse(std::string_view text) const;

    /// A basis of F as a vector space over its subfield of squares: [1] for
    /// GF(2^k), the 2^m multilinear monomials t^eps (eps in lex order, t1
    /// the most significant bit) for rational function fields.
    std::vector<FieldElement> frobenius_basis() const;
    /// [F : F^2] = size of the Frobenius basis.
    std::size_t frobenius_rank() const;

    /// Number of elements for gf2k, nullopt for infinite fields.  Useful
    /// for exhaustive checks.
    std::optional<std::uint64_t> cardinality() const;

private:
    Field() = default;
    Kind kind_ = Kind::gf2k;
    int k_ = 1;
    std::uint32_t modulus_ = 0;  // bit i = coefficient of x^i, degree k_
    std::vector<std::string> vars_;

    friend class FieldElement;
};

/// An element of a Field.  Immutable value type; every operation returns a
/// result in reduced canonical form (for fractions: gcd(num, den) = 1), so
/// operator== is structural equality.
class FieldElement {
public:
    FieldElement() = default;  // detached zero; usable only after assignment

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const { return *this + o; }
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const { return *this * o.inv(); }
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement inv() const;
    FieldElement pow(std::uint64_t e) const;
    FieldElement square() const { return *this * *this; }

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    bool is_zero() const;
    bool is_one() const;

    /// Coefficients (w_eps) over the Frobenius basis (b_eps) with
    /// v = sum b_eps * w_eps^2.  The decomposition is unique.
    std::vector<FieldElement> frobenius_coords() const;
    /// The unique square root if v is a square in F, else nullopt.  Over
    /// GF(2^k) every element is a square.
    std::optional<FieldElement> sqrt() const;

    std::string str() const;

    const FieldPtr& field() const { return field_; }
    std::uint32_t bits() const { return bits_; }  // gf2k payload
    const Poly2& num() const { return num_; }     // ratfunc payload
    const Poly2& den() const { return den_; }

private:
    FieldPtr field_;
    std::uint32_t bits_ = 0;
    Poly2 num_;
    Poly2 den_;

    void reduce();
    static void require_same_field(const FieldElement& a, const FieldElement& b);
    friend class Field;
};

}  // namespace alternator

#endif
