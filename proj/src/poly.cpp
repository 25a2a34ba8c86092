/*
   Copyright 2026 the ffdp authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "ffdp/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "ffdp/rng.hpp"

namespace ffdp {

char var_letter(Var v) { return v == Var::T ? 't' : 'x'; }

Poly::Poly(FieldPtr ctx, Var var, std::vector<Fe> coeffs)
    : ctx_(std::move(ctx)), var_(var), c_(std::move(coeffs)) {
    normalize();
}

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(FieldPtr ctx, Var var, Fe c) {
    return Poly(std::move(ctx), var, std::vector<Fe>{c});
}

Poly Poly::variable(FieldPtr ctx, Var var) {
    return Poly(std::move(ctx), var, std::vector<Fe>{0, 1});
}

Poly Poly::monomial(FieldPtr ctx, Var var, std::size_t deg, Fe c) {
    std::vector<Fe> v(deg + 1, 0);
    v[deg] = c;
    return Poly(std::move(ctx), var, std::move(v));
}

void require_same_ctx(const Poly& a, const Poly& b) {
    if (!a.ctx() || !b.ctx() || !a.ctx()->same_as(*b.ctx()))
        throw Error(Errc::MixedFieldContexts, "operands from different fields");
}

Poly Poly::operator+(const Poly& rhs) const {
    require_same_ctx(*this, rhs);
    std::vector<Fe> r(std::max(c_.size(), rhs.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = ctx_->add(coeff(i), rhs.coeff(i));
    return Poly(ctx_, var_, std::move(r));
}

Poly Poly::operator-() const {
    std::vector<Fe> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = ctx_->neg(c_[i]);
    return Poly(ctx_, var_, std::move(r));
}

Poly Poly::operator-(const Poly& rhs) const { return *this + (-rhs); }

Poly Poly::operator*(const Poly& rhs) const {
    require_same_ctx(*this, rhs);
    if (is_zero() || rhs.is_zero()) return Poly(ctx_, var_);
    std::vector<Fe> r(c_.size() + rhs.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j)
            r[i + j] = ctx_->add(r[i + j], ctx_->mul(c_[i], rhs.c_[j]));
    }
    return Poly(ctx_, var_, std::move(r));
}

Poly Poly::operator*(Fe scalar) const {
    std::vector<Fe> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = ctx_->mul(c_[i], scalar);
    return Poly(ctx_, var_, std::move(r));
}

bool Poly::operator<(const Poly& rhs) const {
    if (c_.size() != rhs.c_.size()) return c_.size() < rhs.c_.size();
    return std::lexicographical_compare(c_.begin(), c_.end(), rhs.c_.begin(), rhs.c_.end());
}

Poly Poly::monic() const {
    if (is_zero() || lead() == 1) return *this;
    return *this * ctx_->inv(lead());
}

Fe Poly::eval(Fe x) const {
    Fe r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = ctx_->add(ctx_->mul(r, x), c_[i]);
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(ctx_, var_);
    std::vector<Fe> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        Fe k = ctx_->from_int(i % ctx_->p());
        r[i - 1] = ctx_->mul(c_[i], k);
    }
    return Poly(ctx_, var_, std::move(r));
}

Poly Poly::shift_var_scale(Fe b) const {
    std::vector<Fe> r(c_.size());
    Fe bp = 1;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        r[i] = ctx_->mul(c_[i], bp);
        bp = ctx_->mul(bp, b);
    }
    return Poly(ctx_, var_, std::move(r));
}

std::uint64_t Poly::code() const {
    std::uint64_t q = ctx_->q(), r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (r > (UINT64_MAX - c_[i]) / q)
            throw Error(Errc::EnumerationBoundExceeded, "polynomial code overflows 64 bits");
        r = r * q + c_[i];
    }
    return r;
}

Poly Poly::from_code(const FieldPtr& ctx, Var var, std::uint64_t code) {
    std::vector<Fe> c;
    std::uint64_t q = ctx->q();
    while (code > 0) {
        c.push_back(static_cast<Fe>(code % q));
        code /= q;
    }
    return Poly(ctx, var, std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    require_same_ctx(a, b);
    if (b.is_zero()) throw Error(Errc::DivisionByZeroPoly, "division by zero polynomial");
    const auto& ctx = a.ctx();
    if (a.deg() < b.deg()) return {Poly(ctx, a.var()), a};
    std::vector<Fe> rem(a.coeffs());
    std::vector<Fe> quo(a.deg() - b.deg() + 1, 0);
    Fe inv_lead = ctx->inv(b.lead());
    for (int i = a.deg(); i >= b.deg(); --i) {
        Fe c = rem[i];
        if (c == 0) continue;
        Fe qc = ctx->mul(c, inv_lead);
        quo[i - b.deg()] = qc;
        for (int j = 0; j <= b.deg(); ++j)
            rem[i - b.deg() + j] = ctx->sub(rem[i - b.deg() + j], ctx->mul(qc, b.coeff(j)));
    }
    return {Poly(ctx, a.var(), std::move(quo)), Poly(ctx, a.var(), std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

Poly gcd(const Poly& a, const Poly& b) {
    require_same_ctx(a, b);
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = y;
        y = r;
    }
    return x.monic();
}

XGcd xgcd(const Poly& a, const Poly& b) {
    require_same_ctx(a, b);
    const auto& ctx = a.ctx();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(ctx, a.var(), 1), s1 = Poly(ctx, a.var());
    Poly t0 = Poly(ctx, a.var()), t1 = Poly::constant(ctx, a.var(), 1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = r1;
        r1 = r;
        Poly s = s0 - q * s1;
        s0 = s1;
        s1 = s;
        Poly t = t0 - q * t1;
        t0 = t1;
        t1 = t;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Fe scale = ctx->inv(r0.lead());
    return {r0 * scale, s0 * scale, t0 * scale};
}

Poly pow_mod(const Poly& base, std::uint64_t k, const Poly& modulus) {
    require_same_ctx(base, modulus);
    Poly r = Poly::constant(base.ctx(), base.var(), 1) % modulus;
    Poly b = base % modulus;
    while (k > 0) {
        if (k & 1) r = (r * b) % modulus;
        b = (b * b) % modulus;
        k >>= 1;
    }
    return r;
}

Poly compose(const Poly& a, const Poly& b) {
    require_same_ctx(a, b);
    Poly r(a.ctx(), b.var());
    for (std::size_t i = a.coeffs().size(); i-- > 0;)
        r = r * b + Poly::constant(a.ctx(), b.var(), a.coeff(i));
    return r;
}

Poly compose_mod(const Poly& a, const Poly& b, const Poly& m) {
    require_same_ctx(a, b);
    Poly r(a.ctx(), b.var());
    Poly br = b % m;
    for (std::size_t i = a.coeffs().size(); i-- > 0;)
        r = (r * br + Poly::constant(a.ctx(), b.var(), a.coeff(i))) % m;
    return r;
}

Poly Factorization::product(const FieldPtr& ctx, Var var) const {
    Poly r = Poly::constant(ctx, var, unit);
    for (const auto& [f, m] : factors)
        for (int i = 0; i < m; ++i) r = r * f;
    return r;
}

bool Factorization::squarefree() const {
    for (const auto& [f, m] : factors)
        if (m > 1) return false;
    return true;
}

// ---------------------------------------------------------------------------
// factorization

namespace {

std::vector<Poly> all_monic_of_degree(const FieldPtr& ctx, Var var, int d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= ctx->q();
    std::vector<Poly> out;
    out.reserve(count);
    for (std::uint64_t code = 0; code < count; ++code) {
        Poly p = Poly::from_code(ctx, var, code) + Poly::monomial(ctx, var, d);
        out.push_back(std::move(p));
    }
    return out;
}

// f = g(x^p) -> g with coefficients a^(1/p); valid for F_{p^e} since the
// Frobenius is an automorphism (a^(1/p) = a^(p^(e-1))).
Poly pth_root(const Poly& f) {
    const auto& ctx = f.ctx();
    std::uint32_t p = ctx->p();
    std::uint64_t root_exp = 1;
    for (std::uint32_t i = 0; i + 1 < ctx->e(); ++i) root_exp *= p;
    std::vector<Fe> r(f.deg() / p + 1, 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = ctx->pow(f.coeff(i * p), root_exp);
    return Poly(ctx, f.var(), std::move(r));
}

void squarefree_decompose(const Poly& input, int outer_mult,
                          std::vector<std::pair<Poly, int>>& out) {
    Poly f = input;
    if (f.deg() < 1) return;
    Poly d = f.derivative();
    std::uint32_t p = f.ctx()->p();
    if (d.is_zero()) {
        squarefree_decompose(pth_root(f), outer_mult * static_cast<int>(p), out);
        return;
    }
    Poly c = gcd(f, d);
    Poly w = f / c;
    int i = 1;
    while (!w.is_one()) {
        Poly y = gcd(w, c);
        Poly z = w / y;
        if (!z.is_one()) out.emplace_back(z, i * outer_mult);
        w = y;
        c = c / y;
        ++i;
    }
    if (!c.is_one()) squarefree_decompose(pth_root(c), outer_mult * static_cast<int>(p), out);
}

std::uint64_t checked_pow_u64(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (r > UINT64_MAX / base)
            throw Error(Errc::EnumerationBoundExceeded, "q^d exceeds 64 bits");
        r *= base;
    }
    return r;
}

// Equal-degree splitting (Cantor-Zassenhaus; trace construction for p = 2).
void equal_degree_factor(const Poly& f, int d, Rng& rng, std::vector<Poly>& out) {
    if (f.deg() == d) {
        out.push_back(f.monic());
        return;
    }
    const auto& ctx = f.ctx();
    Var var = f.var();
    std::uint64_t q = ctx->q();
    Poly one = Poly::constant(ctx, var, 1);
    while (true) {
        // random nonconstant poly of degree < deg f
        std::vector<Fe> rc(f.deg());
        for (auto& c : rc) c = static_cast<Fe>(rng.below(q));
        Poly r(ctx, var, std::move(rc));
        if (r.deg() < 1) continue;
        Poly split;
        if (ctx->p() == 2) {
            // trace map over F_2: sum of r^(2^i), i < e*d
            Poly s(ctx, var);
            Poly t = r % f;
            std::uint32_t bits = ctx->e() * static_cast<std::uint32_t>(d);
            for (std::uint32_t i = 0; i < bits; ++i) {
                s = (s + t) % f;
                t = (t * t) % f;
            }
            split = gcd(s, f);
        } else {
            std::uint64_t exp = (checked_pow_u64(q, d) - 1) / 2;
            Poly s = pow_mod(r, exp, f);
            split = gcd(s - one, f);
        }
        if (split.deg() > 0 && split.deg() < f.deg()) {
            equal_degree_factor(split, d, rng, out);
            equal_degree_factor(f / split, d, rng, out);
            return;
        }
    }
}

// Distinct-degree then equal-degree, for a squarefree monic input.
std::vector<Poly> factor_squarefree_large(const Poly& input) {
    const auto& ctx = input.ctx();
    Var var = input.var();
    std::uint64_t q = ctx->q();
    Rng rng(0x0ddfacedc0ffeeULL);  // internal; output order is normalized below
    std::vector<Poly> out;
    Poly f = input;
    Poly x = Poly::variable(ctx, var);
    Poly h = x;
    int d = 0;
    while (f.deg() > 2 * (d + 1) - 1 && f.deg() > 0) {
        ++d;
        h = pow_mod(h, q, f);
        Poly g = gcd(h - x, f);
        if (g.deg() > 0) {
            equal_degree_factor(g, d, rng, out);
            f = f / g;
            h = h % f;
        }
    }
    if (f.deg() > 0) out.push_back(f.monic());
    return out;
}

}  // namespace

std::vector<Poly> monic_irreducibles(const FieldPtr& ctx, Var var, int max_deg) {
    std::vector<Poly> out;
    for (int d = 1; d <= max_deg; ++d) {
        for (auto& p : all_monic_of_degree(ctx, var, d)) {
            bool divisible = false;
            for (const auto& irr : out) {
                if (irr.deg() > d / 2) break;
                if ((p % irr).is_zero()) {
                    divisible = true;
                    break;
                }
            }
            if (!divisible) out.push_back(std::move(p));
        }
    }
    // out is grouped by degree and lexicographic within a degree already
    return out;
}

Factorization factor(const Poly& f) {
    if (f.deg() < 1) throw Error(Errc::ConstantPolynomial, "cannot factor a constant");
    Factorization result;
    result.unit = f.lead();
    Poly g = f.monic();

    std::map<Poly, int> acc;
    if (g.deg() <= 16) {
        // trial division against the irreducibility sieve
        auto sieve = monic_irreducibles(g.ctx(), g.var(), g.deg() / 2);
        for (const auto& irr : sieve) {
            while (g.deg() >= irr.deg() && (g % irr).is_zero()) {
                acc[irr]++;
                g = g / irr;
            }
            if (g.deg() < 2 * irr.deg()) break;
        }
        if (g.deg() >= 1) acc[g]++;
    } else {
        std::vector<std::pair<Poly, int>> parts;
        squarefree_decompose(g, 1, parts);
        for (const auto& [part, mult] : parts)
            for (const auto& irr : factor_squarefree_large(part)) acc[irr] += mult;
    }
    for (auto& [p, m] : acc) result.factors.emplace_back(p, m);
    return result;
}

bool is_irreducible(const Poly& f) {
    if (f.deg() < 1) throw Error(Errc::ConstantPolynomial, "irreducibility of a constant");
    auto fac = factor(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

std::uint64_t euler_phi(const Poly& M) {
    if (M.deg() < 1) throw Error(Errc::ConstantPolynomial, "phi of a constant");
    std::uint64_t q = M.ctx()->q();
    std::uint64_t phi = 1;
    for (const auto& [p, m] : factor(M).factors) {
        std::uint64_t qd = checked_pow_u64(q, p.deg());
        std::uint64_t term = qd - 1;
        for (int i = 1; i < m; ++i) term *= qd;
        phi *= term;
    }
    return phi;
}

std::uint64_t mult_order(const Poly& Q, const Poly& M) {
    if (M.deg() < 1) throw Error(Errc::ConstantPolynomial, "order modulo a constant");
    if (gcd(Q, M).deg() != 0 || Q.is_zero())
        throw Error(Errc::NotCoprime, "mult_order requires gcd(Q, M) = 1");
    std::uint64_t n = euler_phi(M);
    Poly one = Poly::constant(M.ctx(), M.var(), 1);
    // shrink the group order by its prime divisors while Q^(n/l) stays 1
    std::uint64_t order = n;
    std::uint64_t rest = n;
    for (std::uint64_t l = 2; l * l <= rest; ++l) {
        if (rest % l != 0) continue;
        while (rest % l == 0) rest /= l;
        while (order % l == 0 && pow_mod(Q, order / l, M) == one) order /= l;
    }
    if (rest > 1)
        while (order % rest == 0 && pow_mod(Q, order / rest, M) == one) order /= rest;
    return order;
}

std::vector<Poly> unit_group(const Poly& M, std::uint64_t bound) {
    if (M.deg() < 1) throw Error(Errc::ConstantPolynomial, "unit group of a constant ring");
    std::uint64_t q = M.ctx()->q();
    std::uint64_t size = 1;
    for (int i = 0; i < M.deg(); ++i) {
        if (size > bound / q + 1) throw Error(Errc::EnumerationBoundExceeded, "q^deg(M) too large");
        size *= q;
    }
    if (size > bound) throw Error(Errc::EnumerationBoundExceeded, "q^deg(M) exceeds bound");
    std::vector<Poly> out;
    for (std::uint64_t code = 1; code < size; ++code) {
        Poly a = Poly::from_code(M.ctx(), M.var(), code);
        if (gcd(a, M).deg() == 0) out.push_back(std::move(a));
    }
    return out;
}

std::vector<Poly> monic_divisors(const Poly& M) {
    auto fac = factor(M.monic());
    std::vector<Poly> out{Poly::constant(M.ctx(), M.var(), 1)};
    for (const auto& [p, m] : fac.factors) {
        std::vector<Poly> next;
        Poly power = Poly::constant(M.ctx(), M.var(), 1);
        for (int i = 0; i <= m; ++i) {
            for (const auto& d : out) next.push_back(d * power);
            power = power * p;
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// text format

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    const auto& ctx = p.ctx();
    char letter = var_letter(p.var());
    std::ostringstream os;
    bool first = true;
    for (int i = p.deg(); i >= 0; --i) {
        Fe c = p.coeff(i);
        if (c == 0) continue;
        if (!first) os << "+";
        first = false;
        std::string coef;
        if (ctx->e() == 1) {
            coef = std::to_string(c);
        } else {
            auto d = ctx->digits(c);
            std::ostringstream cs;
            cs << "[";
            for (std::size_t k = 0; k < d.size(); ++k) cs << (k ? "," : "") << d[k];
            cs << "]";
            coef = cs.str();
        }
        if (i == 0) {
            os << coef;
        } else {
            if (c != 1) os << coef << "*";
            os << letter;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const FieldPtr& ctx;
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw Error(Errc::ParseError, msg + " at position " + std::to_string(pos) + " in \"" + s + "\"");
    }

    std::uint64_t parse_uint() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected integer");
        std::uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > (1ULL << 40)) fail("integer too large");
            ++pos;
        }
        return v;
    }

    Fe parse_coef() {
        skip_ws();
        if (pos < s.size() && s[pos] == '[') {
            ++pos;
            std::vector<std::uint32_t> digits;
            while (true) {
                digits.push_back(static_cast<std::uint32_t>(parse_uint() % ctx->p()));
                skip_ws();
                if (pos < s.size() && s[pos] == ',') {
                    ++pos;
                    continue;
                }
                break;
            }
            skip_ws();
            if (pos >= s.size() || s[pos] != ']') fail("expected ']'");
            ++pos;
            if (digits.size() > ctx->e()) fail("coefficient vector longer than extension degree");
            return ctx->from_digits(digits);
        }
        return ctx->from_int(parse_uint());
    }
};

}  // namespace

Poly parse_poly(const FieldPtr& ctx, const std::string& text) {
    Parser p{ctx, text};
    p.skip_ws();
    if (p.pos >= text.size()) p.fail("empty polynomial");

    bool saw_var = false;
    Var var = Var::T;
    std::map<std::size_t, Fe> terms;

    bool negate = false;
    while (true) {
        p.skip_ws();
        if (p.pos < text.size() && (text[p.pos] == '+' || text[p.pos] == '-')) {
            negate = text[p.pos] == '-';
            ++p.pos;
            p.skip_ws();
        }
        Fe coef = 1;
        bool have_coef = false;
        if (p.pos < text.size() &&
            (std::isdigit(static_cast<unsigned char>(text[p.pos])) || text[p.pos] == '[')) {
            coef = p.parse_coef();
            have_coef = true;
            p.skip_ws();
            if (p.pos < text.size() && text[p.pos] == '*') {
                ++p.pos;
                p.skip_ws();
            }
        }
        std::size_t exp = 0;
        if (p.pos < text.size() &&
            (text[p.pos] == 't' || text[p.pos] == 'T' || text[p.pos] == 'x' || text[p.pos] == 'X')) {
            Var this_var = (text[p.pos] == 't' || text[p.pos] == 'T') ? Var::T : Var::X;
            if (saw_var && this_var != var) p.fail("mixed variable letters");
            var = this_var;
            saw_var = true;
            ++p.pos;
            exp = 1;
            p.skip_ws();
            if (p.pos < text.size() && text[p.pos] == '^') {
                ++p.pos;
                exp = static_cast<std::size_t>(p.parse_uint());
            }
        } else if (!have_coef) {
            p.fail("expected term");
        }
        if (negate) coef = ctx->neg(coef);
        auto [it, inserted] = terms.emplace(exp, coef);
        if (!inserted) it->second = ctx->add(it->second, coef);
        negate = false;
        p.skip_ws();
        if (p.pos >= text.size()) break;
        if (text[p.pos] != '+' && text[p.pos] != '-') p.fail("expected '+' or '-'");
    }

    std::size_t max_deg = terms.empty() ? 0 : terms.rbegin()->first;
    std::vector<Fe> coeffs(max_deg + 1, 0);
    for (const auto& [e, c] : terms) coeffs[e] = c;
    return Poly(ctx, var, std::move(coeffs));
}

}  // namespace ffdp
