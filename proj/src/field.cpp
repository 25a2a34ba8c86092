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

#include "ffdp/field.hpp"

#include <algorithm>

namespace ffdp {

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomial arithmetic over F_p on raw digit vectors (low first),
// used only for extension-field element arithmetic.
using Digits = std::vector<std::uint32_t>;

void trim(Digits& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Digits mul_mod_p(const Digits& a, const Digits& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Digits r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>(
                (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
    trim(r);
    return r;
}

// Reduce a mod m (m monic) in place.
void reduce_mod(Digits& a, const Digits& m, std::uint32_t p) {
    while (a.size() >= m.size()) {
        std::uint32_t lead = a.back();
        std::size_t shift = a.size() - m.size();
        if (lead != 0) {
            for (std::size_t i = 0; i + 1 < m.size(); ++i) {
                std::uint64_t sub = static_cast<std::uint64_t>(lead) * m[i] % p;
                a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
            }
        }
        a.pop_back();
        trim(a);
        if (a.size() < m.size()) break;
    }
    trim(a);
}

bool irreducible_over_fp(const Digits& f, std::uint32_t p) {
    // Rabin test: x^{p^e} == x mod f and gcd-free at proper prime divisors of e.
    // Degrees here are tiny, so plain trial division is enough.
    std::size_t deg = f.size() - 1;
    // trial divide by all monic polys of degree 1..deg/2
    std::vector<Digits> divisors;
    for (std::size_t d = 1; d * 2 <= deg; ++d) {
        // iterate over all monic polys of degree d
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Digits g(d + 1, 0);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            g[d] = 1;
            // does g divide f?
            Digits r = f;
            reduce_mod(r, g, p);
            if (r.empty()) return false;
        }
    }
    return true;
}

Digits default_irreducible(std::uint32_t p, std::uint32_t e) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < e; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
        Digits f(e + 1, 0);
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < e; ++i) {
            f[i] = static_cast<std::uint32_t>(c % p);
            c /= p;
        }
        f[e] = 1;
        if (irreducible_over_fp(f, p)) return f;
    }
    throw Error(Errc::ReducibleModulus, "no irreducible of requested degree");
}

constexpr std::uint64_t kTableLimit = 1024;  // mul/inv tables up to 4 MiB

}  // namespace

std::shared_ptr<const FieldCtx> FieldCtx::make(std::uint32_t p, std::uint32_t e,
                                               std::vector<std::uint32_t> modulus) {
    if (!is_prime_u32(p)) throw Error(Errc::NonPrimeCharacteristic, "p = " + std::to_string(p));
    if (e < 1) throw Error(Errc::InvalidParameters, "extension degree must be >= 1");
    if (e > 1) {
        if (modulus.empty()) {
            modulus = default_irreducible(p, e);
        } else {
            for (auto& c : modulus) c %= p;
            trim(modulus);
            if (modulus.size() != e + 1 || modulus.back() != 1)
                throw Error(Errc::ReducibleModulus, "modulus must be monic of degree e");
            if (!irreducible_over_fp(modulus, p))
                throw Error(Errc::ReducibleModulus, "modulus is reducible over F_p");
        }
    } else {
        modulus.clear();
    }
    return std::shared_ptr<const FieldCtx>(new FieldCtx(p, e, std::move(modulus)));
}

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
    q_ = 1;
    for (std::uint32_t i = 0; i < e_; ++i) q_ *= p_;
    if (e_ > 1 && q_ <= kTableLimit) {
        mul_table_.resize(q_ * q_);
        for (std::uint64_t a = 0; a < q_; ++a)
            for (std::uint64_t b = a; b < q_; ++b) {
                Fe v = mul_nocache(static_cast<Fe>(a), static_cast<Fe>(b));
                mul_table_[a * q_ + b] = v;
                mul_table_[b * q_ + a] = v;
            }
        inv_table_.assign(q_, 0);
        for (std::uint64_t a = 1; a < q_; ++a) {
            if (inv_table_[a] != 0) continue;
            for (std::uint64_t b = 1; b < q_; ++b)
                if (mul_table_[a * q_ + b] == 1) {
                    inv_table_[a] = static_cast<Fe>(b);
                    inv_table_[b] = static_cast<Fe>(a);
                    break;
                }
        }
    }
}

std::vector<std::uint32_t> FieldCtx::digits(Fe a) const {
    std::vector<std::uint32_t> d(e_, 0);
    for (std::uint32_t i = 0; i < e_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

Fe FieldCtx::from_digits(const std::vector<std::uint32_t>& d) const {
    Fe a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = static_cast<Fe>(a * p_ + d[i] % p_);
    return a;
}

Fe FieldCtx::add(Fe a, Fe b) const {
    if (e_ == 1) return (a + b) % p_;
    Fe r = 0, mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        r += mult * ((a % p_ + b % p_) % p_);
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

Fe FieldCtx::neg(Fe a) const {
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    Fe r = 0, mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        std::uint32_t d = a % p_;
        r += mult * (d == 0 ? 0 : p_ - d);
        a /= p_;
        mult *= p_;
    }
    return r;
}

Fe FieldCtx::sub(Fe a, Fe b) const { return add(a, neg(b)); }

Fe FieldCtx::mul_nocache(Fe a, Fe b) const {
    if (e_ == 1) return static_cast<Fe>(static_cast<std::uint64_t>(a) * b % p_);
    Digits da = digits(a), db = digits(b);
    trim(da);
    trim(db);
    Digits r = mul_mod_p(da, db, p_);
    reduce_mod(r, modulus_, p_);
    r.resize(e_, 0);
    return from_digits(r);
}

Fe FieldCtx::mul(Fe a, Fe b) const {
    if (!mul_table_.empty()) return mul_table_[static_cast<std::uint64_t>(a) * q_ + b];
    return mul_nocache(a, b);
}

Fe FieldCtx::pow(Fe a, std::uint64_t k) const {
    Fe r = 1;
    while (k > 0) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

Fe FieldCtx::inv(Fe a) const {
    if (a == 0) throw Error(Errc::ZeroInField, "inverse of zero");
    if (!inv_table_.empty()) return inv_table_[a];
    if (e_ == 1) {
        // extended Euclid on integers
        std::int64_t t = 0, newt = 1, r = p_, newr = a;
        while (newr != 0) {
            std::int64_t quot = r / newr;
            std::int64_t tmp = t - quot * newt;
            t = newt;
            newt = tmp;
            tmp = r - quot * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0) t += p_;
        return static_cast<Fe>(t);
    }
    return pow(a, q_ - 2);
}

}  // namespace ffdp
