#include "alternator/field.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace alternator {
namespace {

// --- GF(2)[x] bit-polynomials (modulus handling) ---------------------------

int bit_degree(std::uint64_t p) {
    if (p == 0) return -1;
    int d = 0;
    while (p >> (d + 1)) ++d;
    return d;
}

// Remainder of a mod b over GF(2), b != 0.
std::uint64_t bit_mod(std::uint64_t a, std::uint64_t b) {
    const int db = bit_degree(b);
    for (int i = bit_degree(a); i >= db; --i)
        if (a >> i & 1) a ^= b << (i - db);
    return a;
}

bool bit_irreducible(std::uint64_t f) {
    const int d = bit_degree(f);
    if (d < 1) return false;
    // A reducible polynomial of degree d has a factor of degree <= d/2.
    for (int j = 1; 2 * j <= d; ++j)
        for (std::uint64_t cand = 1ull << j; cand < (2ull << j); ++cand)
            if (bit_mod(f, cand) == 0) return false;
    return true;
}

// x^i coefficients of the default modulus for GF(2^k), k = 1..8.
constexpr std::uint32_t kDefaultModulus[9] = {
    0,
    0b11,         // x + 1
    0b111,        // x^2 + x + 1
    0b1011,       // x^3 + x + 1
    0b10011,      // x^4 + x + 1
    0b100101,     // x^5 + x^2 + 1
    0b1000011,    // x^6 + x + 1
    0b10000011,   // x^7 + x + 1
    0b100011011,  // x^8 + x^4 + x^3 + x + 1
};

std::uint32_t gf_mul(std::uint32_t a, std::uint32_t b, std::uint32_t mod, int k) {
    std::uint64_t acc = 0;
    std::uint64_t aa = a;
    for (std::uint32_t bb = b; bb; bb >>= 1, aa <<= 1)
        if (bb & 1) acc ^= aa;
    for (int i = 2 * k - 2; i >= k; --i)
        if (acc >> i & 1) acc ^= static_cast<std::uint64_t>(mod) << (i - k);
    return static_cast<std::uint32_t>(acc);
}

bool valid_var_name(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin() + 1, s.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)); });
}

}  // namespace

// --- Field -----------------------------------------------------------------

FieldPtr Field::gf2k(int k) {
    if (k < 1 || k > 8)
        throw InvalidField("no default modulus for GF(2^" + std::to_string(k) +
                           "); supply one explicitly (defaults cover k = 1..8)");
    std::vector<int> bits(k + 1);
    for (int i = 0; i <= k; ++i) bits[i] = kDefaultModulus[k] >> i & 1;
    return gf2k(k, bits);
}

FieldPtr Field::gf2k(int k, const std::vector<int>& modulus_bits) {
    if (k < 1 || k > 16)
        throw InvalidField("extension degree must be in 1..16, got " + std::to_string(k));
    if (static_cast<int>(modulus_bits.size()) != k + 1)
        throw InvalidField("modulus for GF(2^" + std::to_string(k) + ") needs " +
                           std::to_string(k + 1) + " coefficient bits");
    std::uint32_t m = 0;
    for (int i = 0; i <= k; ++i) {
        if (modulus_bits[i] != 0 && modulus_bits[i] != 1)
            throw InvalidField("modulus coefficients must be 0 or 1");
        m |= static_cast<std::uint32_t>(modulus_bits[i]) << i;
    }
    if (!(m >> k & 1)) throw InvalidField("modulus must have degree exactly k");
    if (!bit_irreducible(m)) throw InvalidField("modulus polynomial is reducible");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::gf2k;
    f->k_ = k;
    f->modulus_ = m;
    return f;
}

FieldPtr Field::rationals(std::vector<std::string> vars) {
    if (vars.empty() || static_cast<int>(vars.size()) > kMaxVars)
        throw InvalidField("rational function field needs 1.." + std::to_string(kMaxVars) +
                           " variables");
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (!valid_var_name(v))
            throw InvalidField("invalid variable name '" + v + "'");
        if (!seen.insert(v).second)
            throw InvalidField("duplicate variable name '" + v + "'");
    }
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::ratfunc;
    f->vars_ = std::move(vars);
    return f;
}

bool Field::operator==(const Field& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ == Kind::gf2k) return k_ == o.k_ && modulus_ == o.modulus_;
    return vars_ == o.vars_;
}

FieldElement Field::zero() const {
    FieldElement e;
    e.field_ = shared_from_this();
    e.den_ = Poly2::one();
    return e;
}

FieldElement Field::one() const {
    FieldElement e = zero();
    if (kind_ == Kind::gf2k)
        e.bits_ = 1;
    else
        e.num_ = Poly2::one();
    return e;
}

FieldElement Field::from_bits(std::uint32_t bits) const {
    if (kind_ != Kind::gf2k) throw InvalidField("from_bits applies to GF(2^k) only");
    if (bits >> k_) throw InvalidField("element bits exceed field size");
    FieldElement e = zero();
    e.bits_ = bits;
    return e;
}

FieldElement Field::fraction(Poly2 num, Poly2 den) const {
    if (kind_ != Kind::ratfunc) throw InvalidField("fraction applies to rational fields only");
    if (den.is_zero()) throw DivisionByZero();
    if (num.max_var() >= num_vars() || den.max_var() >= num_vars())
        throw InvalidField("polynomial uses an undeclared variable");
    FieldElement e;
    e.field_ = shared_from_this();
    e.num_ = std::move(num);
    e.den_ = std::move(den);
    e.reduce();
    return e;
}

FieldElement Field::from_poly(Poly2 num) const { return fraction(std::move(num), Poly2::one()); }

FieldElement Field::variable(int i) const {
    if (kind_ == Kind::gf2k) {
        if (i != 0) throw InvalidField("GF(2^k) has a single generator");
        FieldElement e = zero();
        e.bits_ = k_ == 1 ? bit_mod(0b10, modulus_) : 0b10;
        return e;
    }
    if (i < 0 || i >= num_vars()) throw InvalidField("variable index out of range");
    return from_poly(Poly2::variable(i));
}

std::vector<FieldElement> Field::frobenius_basis() const {
    if (kind_ == Kind::gf2k) return {one()};
    const int m = num_vars();
    std::vector<FieldElement> basis;
    basis.reserve(std::size_t{1} << m);
    for (std::uint32_t eps = 0; eps < (1u << m); ++eps) {
        Monomial mono;
        for (int i = 0; i < m; ++i)
            if (eps >> (m - 1 - i) & 1) mono.e[i] = 1;
        basis.push_back(from_poly(Poly2::monomial(mono)));
    }
    return basis;
}

std::size_t Field::frobenius_rank() const {
    return kind_ == Kind::gf2k ? 1 : std::size_t{1} << num_vars();
}

std::optional<std::uint64_t> Field::cardinality() const {
    if (kind_ == Kind::gf2k) return std::uint64_t{1} << k_;
    return std::nullopt;
}

// --- FieldElement ----------------------------------------------------------

void FieldElement::reduce() {
    if (num_.is_zero()) {
        den_ = Poly2::one();
        return;
    }
    const Poly2 g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = *num_.divided_by(g);
        den_ = *den_.divided_by(g);
    }
}

void FieldElement::require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!a.field_ || !b.field_) throw FieldMismatch("operation on a detached element");
    if (!(*a.field_ == *b.field_)) throw FieldMismatch();
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_field(*this, o);
    FieldElement r = *this;
    if (field_->kind() == Field::Kind::gf2k) {
        r.bits_ ^= o.bits_;
        return r;
    }
    if (num_.is_zero()) return o;
    if (o.num_.is_zero()) return *this;
    // a/b + c/d with g = gcd(b, d), b = g*b1, d = g*d1:
    // the sum is (a*d1 + c*b1) / (g*b1*d1), and because the operands are
    // reduced the numerator is already coprime to b1*d1 - only the gcd with
    // g remains to cancel.
    const Poly2 g = poly_gcd(den_, o.den_);
    if (g.is_one()) {
        r.num_ = num_ * o.den_ + o.num_ * den_;
        r.den_ = den_ * o.den_;
        return r;
    }
    const Poly2 b1 = *den_.divided_by(g);
    const Poly2 d1 = *o.den_.divided_by(g);
    const Poly2 t = num_ * d1 + o.num_ * b1;
    if (t.is_zero()) return field_->zero();
    const Poly2 h = poly_gcd(t, g);
    if (h.is_one()) {
        r.num_ = t;
        r.den_ = g * b1 * d1;
    } else {
        r.num_ = *t.divided_by(h);
        r.den_ = *g.divided_by(h) * b1 * d1;
    }
    return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_field(*this, o);
    FieldElement r = *this;
    if (field_->kind() == Field::Kind::gf2k) {
        r.bits_ = gf_mul(bits_, o.bits_, field_->modulus_bits(), field_->extension_degree());
        return r;
    }
    if (num_.is_zero() || o.num_.is_zero()) return field_->zero();
    // Cross-reduce: both operands are reduced, so the result comes out
    // reduced without a gcd over the full products.
    Poly2 a = num_, b = den_, c = o.num_, d = o.den_;
    const Poly2 g1 = poly_gcd(a, d);
    if (!g1.is_one()) {
        a = *a.divided_by(g1);
        d = *d.divided_by(g1);
    }
    const Poly2 g2 = poly_gcd(c, b);
    if (!g2.is_one()) {
        c = *c.divided_by(g2);
        b = *b.divided_by(g2);
    }
    r.num_ = a * c;
    r.den_ = b * d;
    return r;
}

FieldElement FieldElement::inv() const {
    if (!field_) throw FieldMismatch("operation on a detached element");
    if (is_zero()) throw DivisionByZero();
    if (field_->kind() == Field::Kind::ratfunc) {
        FieldElement r = *this;
        std::swap(r.num_, r.den_);
        return r;
    }
    // a^(2^k - 2) by square-and-multiply.
    const int k = field_->extension_degree();
    return pow((std::uint64_t{1} << k) - 2);
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    if (!field_) throw FieldMismatch("operation on a detached element");
    FieldElement acc = field_->one();
    FieldElement base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (!field_ || !o.field_) return !field_ && !o.field_;
    if (!(*field_ == *o.field_)) return false;
    if (field_->kind() == Field::Kind::gf2k) return bits_ == o.bits_;
    return num_ == o.num_ && den_ == o.den_;
}

bool FieldElement::is_zero() const {
    if (!field_) return true;
    return field_->kind() == Field::Kind::gf2k ? bits_ == 0 : num_.is_zero();
}

bool FieldElement::is_one() const {
    if (!field_) return false;
    if (field_->kind() == Field::Kind::gf2k) return bits_ == 1;
    return num_.is_one() && den_.is_one();
}

std::vector<FieldElement> FieldElement::frobenius_coords() const {
    if (!field_) throw FieldMismatch("operation on a detached element");
    if (field_->kind() == Field::Kind::gf2k) return {*sqrt()};
    // v = n/d = (n*d)/d^2; split n*d by exponent parity, divide the square
    // roots of the parts by d.
    const int m = field_->num_vars();
    const FieldElement d = field_->from_poly(den_);
    std::vector<Poly2> parts = (num_ * den_).parity_split(m);
    std::vector<FieldElement> coords;
    coords.reserve(parts.size());
    for (auto& p : parts) coords.push_back(field_->from_poly(std::move(p)) / d);
    return coords;
}

std::optional<FieldElement> FieldElement::sqrt() const {
    if (!field_) throw FieldMismatch("operation on a detached element");
    if (field_->kind() == Field::Kind::gf2k) {
        // Frobenius is bijective: sqrt(a) = a^(2^(k-1)).
        FieldElement r = *this;
        for (int i = 1; i < field_->extension_degree(); ++i) r = r * r;
        return r;
    }
    // A reduced fraction is a square iff numerator and denominator are.
    if (!num_.is_square() || !den_.is_square()) return std::nullopt;
    FieldElement r = *this;
    r.num_ = num_.sqrt();
    r.den_ = den_.sqrt();
    return r;
}

std::string FieldElement::str() const {
    if (!field_) return "0";
    if (field_->kind() == Field::Kind::gf2k) {
        if (bits_ == 0) return "0";
        std::string out;
        for (int i = field_->extension_degree() - 1; i >= 0; --i) {
            if (!(bits_ >> i & 1)) continue;
            if (!out.empty()) out += "+";
            if (i == 0)
                out += "1";
            else if (i == 1)
                out += "g";
            else
                out += "g^" + std::to_string(i);
        }
        return out;
    }
    const auto& names = field_->vars();
    if (den_.is_one()) return num_.str(names);
    const bool num_parens = num_.terms().size() > 1;
    // The denominator needs parentheses unless it is a power of a single
    // variable ("a/t^2" reads correctly, "a/t1*t2" would not).
    int den_vars = 0;
    for (int i = 0; i < kMaxVars; ++i)
        if (den_.leading().e[i] > 0) ++den_vars;
    const bool den_parens = den_.terms().size() > 1 || den_vars != 1;
    std::string out = num_parens ? "(" + num_.str(names) + ")" : num_.str(names);
    out += "/";
    out += den_parens ? "(" + den_.str(names) + ")" : den_.str(names);
    return out;
}

// --- element parser --------------------------------------------------------

namespace {

class ElementParser {
public:
    ElementParser(const Field& f, std::string_view s) : f_(f), s_(s) {}

    FieldElement run() {
        FieldElement v = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    const Field& f_;
    std::string_view s_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

    void advance() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        advance();
        return true;
    }

    FieldElement parse_expr() {
        FieldElement v = parse_term();
        while (accept('+')) v = v + parse_term();
        return v;
    }

    FieldElement parse_term() {
        FieldElement v = parse_factor();
        for (;;) {
            if (accept('*')) {
                v = v * parse_factor();
            } else if (accept('/')) {
                const int l = line_, c = col_;
                FieldElement d = parse_factor();
                if (d.is_zero()) throw ParseError("division by zero", l, c);
                v = v / d;
            } else {
                return v;
            }
        }
    }

    FieldElement parse_factor() {
        FieldElement v = parse_base();
        if (accept('^')) {
            const std::uint64_t e = parse_exponent();
            v = v.pow(e);
        }
        return v;
    }

    std::uint64_t parse_exponent() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected an exponent");
        std::uint64_t e = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            e = e * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
            if (e > 4096) fail("exponent too large");
            advance();
        }
        return e;
    }

    FieldElement parse_base() {
        const char c = peek();
        // Diagnostics point at the start of the offending token.
        const int l = line_, co = col_;
        if (c == '(') {
            advance();
            FieldElement v = parse_expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string lit;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                lit += s_[pos_];
                advance();
            }
            if (lit == "0") return f_.zero();
            if (lit == "1") return f_.one();
            throw ParseError("coefficients must be 0 or 1, got '" + lit + "'", l, co);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (pos_ < s_.size() &&
                   std::isalnum(static_cast<unsigned char>(s_[pos_]))) {
                name += s_[pos_];
                advance();
            }
            if (f_.kind() == Field::Kind::gf2k) {
                if (name == "g") return f_.variable(0);
                throw ParseError("unknown symbol '" + name + "' (the GF(2^k) generator is 'g')", l,
                                 co);
            }
            const auto& vars = f_.vars();
            for (int i = 0; i < static_cast<int>(vars.size()); ++i)
                if (vars[i] == name) return f_.variable(i);
            throw ParseError("unknown variable '" + name + "'", l, co);
        }
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

FieldElement Field::parse(std::string_view text) const {
    return ElementParser(*this, text).run();
}

}  // namespace alternator
