#include "alternator/poly2.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>

namespace alternator {

namespace {

// Descending lex: leading term first.
bool term_before(const Monomial& a, const Monomial& b) { return b.lex_less(a); }

}  // namespace

void Poly2::normalize() {
    std::sort(terms_.begin(), terms_.end(), term_before);
    // Coefficients live in GF(2): a monomial that appears an even number of
    // times cancels.
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    std::size_t i = 0;
    while (i < terms_.size()) {
        std::size_t j = i;
        while (j < terms_.size() && terms_[j] == terms_[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(terms_[i]);
        i = j;
    }
    terms_ = std::move(out);
}

Poly2 Poly2::monomial(const Monomial& m) {
    Poly2 p;
    p.terms_.push_back(m);
    return p;
}

Poly2 Poly2::variable(int var, int exponent) {
    assert(var >= 0 && var < kMaxVars);
    Monomial m;
    m.e[var] = static_cast<std::uint16_t>(exponent);
    return monomial(m);
}

Poly2 Poly2::from_terms(std::vector<Monomial> terms) {
    Poly2 p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

int Poly2::degree(int var) const {
    int d = 0;
    for (const auto& m : terms_) d = std::max(d, m.degree(var));
    return d;
}

int Poly2::max_var() const {
    int v = -1;
    for (const auto& m : terms_)
        for (int i = 0; i < kMaxVars; ++i)
            if (m.e[i] > 0) v = std::max(v, i);
    return v;
}

Poly2 Poly2::operator+(const Poly2& o) const {
    // Merge of two sorted term lists; equal monomials cancel.
    Poly2 r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i] == o.terms_[j]) {
            ++i;
            ++j;
        } else if (term_before(terms_[i], o.terms_[j])) {
            r.terms_.push_back(terms_[i++]);
        } else {
            r.terms_.push_back(o.terms_[j++]);
        }
    }
    r.terms_.insert(r.terms_.end(), terms_.begin() + i, terms_.end());
    r.terms_.insert(r.terms_.end(), o.terms_.begin() + j, o.terms_.end());
    return r;
}

Poly2 Poly2::operator*(const Poly2& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<Monomial> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) prod.push_back(a * b);
    return from_terms(std::move(prod));
}

Poly2 Poly2::times_monomial(const Monomial& m) const {
    Poly2 r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(t * m);
    // Multiplying by a monomial preserves the descending lex order.
    return r;
}

std::optional<Poly2> Poly2::divided_by(const Poly2& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (is_zero()) return zero();
    if (d.is_one()) return *this;
    // Single-divisor lex division; the division is exact iff the remainder
    // stays empty, and any term not divisible by the leading monomial of d
    // already certifies failure.
    Poly2 rem = *this;
    std::vector<Monomial> quot;
    const Monomial& lead = d.leading();
    while (!rem.is_zero()) {
        const Monomial& lm = rem.leading();
        if (!lead.divides(lm)) return std::nullopt;
        Monomial q = lm / lead;
        quot.push_back(q);
        rem = rem + d.times_monomial(q);
    }
    return from_terms(std::move(quot));
}

Poly2 Poly2::square() const {
    Poly2 r;
    r.terms_.reserve(terms_.size());
    for (const auto& m : terms_) r.terms_.push_back(m * m);
    return r;  // order preserved, no cancellation possible
}

bool Poly2::is_square() const {
    for (const auto& m : terms_)
        for (int i = 0; i < kMaxVars; ++i)
            if (m.e[i] % 2 != 0) return false;
    return true;
}

Poly2 Poly2::sqrt() const {
    assert(is_square());
    Poly2 r;
    r.terms_.reserve(terms_.size());
    for (const auto& m : terms_) {
        Monomial h;
        for (int i = 0; i < kMaxVars; ++i) h.e[i] = static_cast<std::uint16_t>(m.e[i] / 2);
        r.terms_.push_back(h);
    }
    return r;
}

std::vector<Poly2> Poly2::parity_split(int nvars) const {
    std::vector<Poly2> parts(std::size_t{1} << nvars);
    std::vector<std::vector<Monomial>> buckets(parts.size());
    for (const auto& m : terms_) {
        std::size_t eps = 0;
        Monomial h;
        for (int i = 0; i < nvars; ++i) {
            eps = (eps << 1) | (m.e[i] & 1u);
            h.e[i] = static_cast<std::uint16_t>(m.e[i] / 2);
        }
        buckets[eps].push_back(h);
    }
    for (std::size_t eps = 0; eps < parts.size(); ++eps)
        parts[eps] = from_terms(std::move(buckets[eps]));
    return parts;
}

std::string Poly2::str(const std::vector<std::string>& var_names) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (const auto& m : terms_) {
        if (!first_term) os << "+";
        first_term = false;
        if (m.is_one()) {
            os << "1";
            continue;
        }
        bool first_factor = true;
        for (int i = 0; i < kMaxVars; ++i) {
            if (m.e[i] == 0) continue;
            if (!first_factor) os << "*";
            first_factor = false;
            os << var_names[i];
            if (m.e[i] > 1) os << "^" << m.e[i];
        }
    }
    return os.str();
}

namespace {

// Coefficient of x^k where x is the main variable; a polynomial in the
// remaining variables.
Poly2 coefficient_of(const Poly2& p, int var, int k) {
    std::vector<Monomial> terms;
    for (const auto& m : p.terms()) {
        if (m.degree(var) == k) {
            Monomial c = m;
            c.e[var] = 0;
            terms.push_back(c);
        }
    }
    return Poly2::from_terms(std::move(terms));
}

Poly2 content_in(const Poly2& p, int var) {
    Poly2 c = Poly2::zero();
    for (int k = p.degree(var); k >= 0; --k) {
        Poly2 ck = coefficient_of(p, var, k);
        if (!ck.is_zero()) c = poly_gcd(c, ck);
        if (c.is_one()) break;
    }
    return c;
}

// Pseudo-remainder of p by d in the main variable.  The result is only
// defined up to factors of lc(d); callers take primitive parts anyway.
Poly2 pseudo_rem(const Poly2& p, const Poly2& d, int var) {
    const int dd = d.degree(var);
    const Poly2 lead = coefficient_of(d, var, dd);
    Poly2 r = p;
    while (!r.is_zero() && r.degree(var) >= dd) {
        const int rd = r.degree(var);
        Poly2 lr = coefficient_of(r, var, rd);
        Monomial shift;
        shift.e[var] = static_cast<std::uint16_t>(rd - dd);
        // lead * r + lr * x^(rd-dd) * d kills the degree-rd coefficient.
        r = r * lead + (lr * d).times_monomial(shift);
    }
    return r;
}

// Componentwise minimum of all exponent vectors: the largest monomial
// dividing every term.
Monomial monomial_content(const Poly2& p) {
    Monomial m = p.terms().front();
    for (const auto& t : p.terms())
        for (int i = 0; i < kMaxVars; ++i) m.e[i] = std::min(m.e[i], t.e[i]);
    return m;
}

// Divides every term by m; m must divide the monomial content.
Poly2 shift_down(const Poly2& p, const Monomial& m) {
    std::vector<Monomial> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) terms.push_back(t / m);
    return Poly2::from_terms(std::move(terms));
}

bool univariate_in(const Poly2& p, int var) {
    for (const auto& m : p.terms())
        for (int i = 0; i < kMaxVars; ++i)
            if (i != var && m.e[i] != 0) return false;
    return true;
}

// Dense univariate GF(2)[x] polynomials as bit vectors (bit i of word i/64 =
// coefficient of x^i); no degree cap.
using BitPoly = std::vector<std::uint64_t>;

int bp_deg(const BitPoly& p) {
    for (std::size_t w = p.size(); w-- > 0;)
        if (p[w])
            return static_cast<int>(w) * 64 + 63 - std::countl_zero(p[w]);
    return -1;
}

bool bp_bit(const BitPoly& p, int i) { return p[static_cast<std::size_t>(i) >> 6] >> (i & 63) & 1; }

// a ^= b << shift; a must be sized for the result.
void bp_xor_shifted(BitPoly& a, const BitPoly& b, int shift) {
    const std::size_t w = static_cast<std::size_t>(shift) >> 6;
    const int r = shift & 63;
    for (std::size_t i = 0; i < b.size(); ++i) {
        const std::uint64_t x = b[i];
        if (!x) continue;
        a[i + w] ^= x << r;
        if (r && i + w + 1 < a.size()) a[i + w + 1] ^= x >> (64 - r);
    }
}

BitPoly bp_mod(BitPoly a, const BitPoly& b) {
    const int db = bp_deg(b);
    for (int da = bp_deg(a); da >= db; --da)
        if (bp_bit(a, da)) bp_xor_shifted(a, b, da - db);
    return a;
}

BitPoly bp_gcd(BitPoly a, BitPoly b) {
    while (bp_deg(b) >= 0) {
        BitPoly r = bp_mod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BitPoly to_bitpoly(const Poly2& p, int var) {
    BitPoly bits(static_cast<std::size_t>(p.degree(var)) / 64 + 1, 0);
    for (const auto& m : p.terms()) bits[m.e[var] >> 6] ^= std::uint64_t{1} << (m.e[var] & 63);
    return bits;
}

Poly2 from_bitpoly(const BitPoly& bits, int var) {
    std::vector<Monomial> terms;
    for (std::size_t w = 0; w < bits.size(); ++w)
        for (int i = 0; i < 64; ++i)
            if (bits[w] >> i & 1) {
                Monomial m;
                m.e[var] = static_cast<std::uint16_t>(w * 64 + i);
                terms.push_back(m);
            }
    return Poly2::from_terms(std::move(terms));
}

// --- GF(2^16) scalar and univariate-polynomial arithmetic, used only by the
// coprimality certificate below ------------------------------------------

constexpr std::uint32_t kG16Mod = 0x1100B;  // x^16 + x^12 + x^3 + x + 1, irreducible

std::uint32_t g16_mul(std::uint32_t a, std::uint32_t b) {
    std::uint32_t acc = 0;
    while (b) {
        if (b & 1) acc ^= a;
        a <<= 1;
        b >>= 1;
    }
    for (int i = 30; i >= 16; --i)
        if (acc >> i & 1) acc ^= kG16Mod << (i - 16);
    return acc;
}

std::uint32_t g16_pow(std::uint32_t base, unsigned e) {
    std::uint32_t r = 1;
    while (e) {
        if (e & 1) r = g16_mul(r, base);
        base = g16_mul(base, base);
        e >>= 1;
    }
    return r;
}

std::uint32_t g16_inv(std::uint32_t a) { return g16_pow(a, 0xFFFE); }

using G16Poly = std::vector<std::uint32_t>;  // coeff[i] of x^i, back() != 0

void g16_trim(G16Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

G16Poly g16_mod(G16Poly a, const G16Poly& b) {
    const std::uint32_t binv = g16_inv(b.back());
    while (a.size() >= b.size()) {
        const std::uint32_t f = g16_mul(a.back(), binv);
        if (f) {
            const std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i + 1 < b.size(); ++i) a[off + i] ^= g16_mul(b[i], f);
        }
        a.pop_back();
        g16_trim(a);
    }
    return a;
}

bool g16_coprime(G16Poly a, G16Poly b) {
    while (!b.empty()) {
        G16Poly r = g16_mod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.size() == 1;
}

// Deterministic nonzero evaluation points (splitmix-style hash); fixed for
// reproducibility.
std::uint32_t eval_point(int var, int attempt) {
    std::uint64_t z = (static_cast<std::uint64_t>(var) << 8 | static_cast<unsigned>(attempt)) +
                      0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    z ^= z >> 31;
    const std::uint32_t v = static_cast<std::uint32_t>(z) & 0xFFFF;
    return v ? v : 1;
}

// Evaluates every variable except `main` at the given points, producing a
// univariate polynomial over GF(2^16).
G16Poly eval_keep_main(const Poly2& p, int main_var, const std::array<std::uint32_t, kMaxVars>& pts) {
    G16Poly c(static_cast<std::size_t>(p.degree(main_var)) + 1, 0);
    for (const auto& m : p.terms()) {
        std::uint32_t v = 1;
        for (int i = 0; i < kMaxVars; ++i)
            if (i != main_var && m.e[i]) v = g16_mul(v, g16_pow(pts[i], m.e[i]));
        c[m.degree(main_var)] ^= v;
    }
    g16_trim(c);
    return c;
}

// gcd of nonzero polynomials with trivial common monomial content.
Poly2 gcd_stripped(Poly2 a, Poly2 b) {
    if (a.is_one() || b.is_one()) return Poly2::one();
    if (a == b) return a;
    const int var = std::max(a.max_var(), b.max_var());
    if (var < 0) return Poly2::one();  // both nonzero constants

    // Dense Euclid on bit vectors when both are univariate in the same
    // variable; this is the common leaf of the recursion.
    if (univariate_in(a, var) && univariate_in(b, var))
        return from_bitpoly(bp_gcd(to_bitpoly(a, var), to_bitpoly(b, var)), var);

    // When one argument divides the other it is the gcd; the failure case is
    // cheap (first indivisible leading monomial).
    if (b.divided_by(a).has_value()) return a;
    if (a.divided_by(b).has_value()) return b;

    // Coprimality certificate: evaluate all other variables at fixed points
    // of GF(2^16).  If the leading coefficients survive and the univariate
    // images are coprime, the gcd has main-degree zero and equals the gcd of
    // the contents.  A failed certificate only means we fall through to the
    // pseudo-remainder sequence, so unlucky points cost time, not soundness.
    const int da = a.degree(var), db = b.degree(var);
    if (da > 0 && db > 0) {
        for (int attempt = 0; attempt < 3; ++attempt) {
            std::array<std::uint32_t, kMaxVars> pts{};
            for (int i = 0; i < kMaxVars; ++i) pts[i] = eval_point(i, attempt);
            const G16Poly ea = eval_keep_main(a, var, pts);
            const G16Poly eb = eval_keep_main(b, var, pts);
            if (static_cast<int>(ea.size()) != da + 1 || static_cast<int>(eb.size()) != db + 1)
                continue;  // an evaluated leading coefficient vanished
            if (g16_coprime(ea, eb))
                return poly_gcd(content_in(a, var), content_in(b, var));
            break;  // likely a genuine common factor: run the real PRS
        }
    }

    if (a.degree(var) < b.degree(var)) std::swap(a, b);

    const Poly2 ca = content_in(a, var);
    const Poly2 cb = content_in(b, var);
    const Poly2 c = poly_gcd(ca, cb);
    a = *a.divided_by(ca);
    b = *b.divided_by(cb);

    // Primitive PRS on the primitive parts.
    while (true) {
        if (b.degree(var) == 0) {
            // b is primitive of main degree zero, hence 1; the primitive
            // part of the gcd is trivial.
            return c;
        }
        Poly2 r = pseudo_rem(a, b, var);
        if (r.is_zero()) {
            Poly2 g = *b.divided_by(content_in(b, var));
            return c * g;
        }
        a = b;
        b = *r.divided_by(content_in(r, var));
    }
}

}  // namespace

Poly2 poly_gcd(const Poly2& p, const Poly2& q) {
    if (p.is_zero()) return q;
    if (q.is_zero()) return p;
    if (p.is_one() || q.is_one()) return Poly2::one();
    if (p == q) return p;

    // Split off the common monomial factor first; afterwards neither
    // argument is divisible by any variable the other lacks, and unique
    // factorization gives gcd(p, q) = t^min * gcd(stripped parts).
    const Monomial mp = monomial_content(p);
    const Monomial mq = monomial_content(q);
    Monomial mg;
    bool trivial = true;
    for (int i = 0; i < kMaxVars; ++i) {
        mg.e[i] = std::min(mp.e[i], mq.e[i]);
        trivial = trivial && mg.e[i] == 0;
    }
    Poly2 g = gcd_stripped(shift_down(p, mp), shift_down(q, mq));
    return trivial ? g : g.times_monomial(mg);
}

}  // namespace alternator
