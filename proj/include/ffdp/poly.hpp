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

#ifndef FFDP_POLY_HPP
#define FFDP_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ffdp/field.hpp"

namespace ffdp {

/// Variable role tag. Metadata only: T-variable polynomials live in F_q[T]
/// (conductors, moduli), X-variable ones in F_q[X] (ring moduli, residues).
enum class Var : std::uint8_t { T, X };

char var_letter(Var v);

/// Dense univariate polynomial over F_q, coefficients low degree first,
/// normalized (no trailing zero coefficient). Immutable value type.
class Poly {
   public:
    Poly() = default;
    Poly(FieldPtr ctx, Var var) : ctx_(std::move(ctx)), var_(var) {}
    Poly(FieldPtr ctx, Var var, std::vector<Fe> coeffs);

    static Poly zero(FieldPtr ctx, Var var) { return Poly(std::move(ctx), var); }
    static Poly constant(FieldPtr ctx, Var var, Fe c);
    static Poly variable(FieldPtr ctx, Var var);  // T or X itself
    static Poly monomial(FieldPtr ctx, Var var, std::size_t deg, Fe c = 1);

    const FieldPtr& ctx() const { return ctx_; }
    Var var() const { return var_; }
    const std::vector<Fe>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    int deg() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Fe coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Fe lead() const { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const { return lead() == 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator-() const;
    Poly operator*(const Poly& rhs) const;
    Poly operator*(Fe scalar) const;

    bool operator==(const Poly& rhs) const { return c_ == rhs.c_; }
    bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

    /// Ordering used everywhere factor/component indices must be stable:
    /// by degree, then lexicographic on the coefficient codes, low first.
    bool operator<(const Poly& rhs) const;

    Poly monic() const;
    Fe eval(Fe x) const;
    Poly derivative() const;
    Poly shift_var_scale(Fe b) const;  // p(X) -> p(bX)

    /// Canonical integer code: sum coeff_i * q^i. Requires q^(deg+1) to fit.
    std::uint64_t code() const;
    static Poly from_code(const FieldPtr& ctx, Var var, std::uint64_t code);

   private:
    void normalize();

    FieldPtr ctx_;
    Var var_ = Var::T;
    std::vector<Fe> c_;
};

void require_same_ctx(const Poly& a, const Poly& b);

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);  // exact or truncating division
Poly gcd(const Poly& a, const Poly& b);        // monic gcd
Poly pow_mod(const Poly& base, std::uint64_t k, const Poly& modulus);
/// Extended gcd: returns (g, u, v) monic g with u*a + v*b = g.
struct XGcd {
    Poly g, u, v;
};
XGcd xgcd(const Poly& a, const Poly& b);

/// Substitute: a(b(X)) for same-context polynomials.
Poly compose(const Poly& a, const Poly& b);
/// Substitute then reduce mod m (Horner, reducing as it goes).
Poly compose_mod(const Poly& a, const Poly& b, const Poly& m);

struct Factorization {
    Fe unit = 1;
    std::vector<std::pair<Poly, int>> factors;  // monic irreducible, multiplicity

    Poly product(const FieldPtr& ctx, Var var) const;
    bool squarefree() const;
};

bool is_irreducible(const Poly& f);
Factorization factor(const Poly& f);

/// Smallest f >= 1 with Q^f = 1 mod M. Requires gcd(Q, M) = 1.
std::uint64_t mult_order(const Poly& Q, const Poly& M);

/// Phi(M) = #(F_q[T]/(M))^x, from the factorization of M.
std::uint64_t euler_phi(const Poly& M);

/// All canonical residues mod M coprime to M, in increasing code order.
std::vector<Poly> unit_group(const Poly& M, std::uint64_t bound = 1ULL << 20);

/// Monic divisors of M (including 1 and M), with the Moebius value mu(M/D)
/// available via the factorization; helper for cyclotomic products.
std::vector<Poly> monic_divisors(const Poly& M);

std::vector<Poly> monic_irreducibles(const FieldPtr& ctx, Var var, int max_deg);

// --- text format -----------------------------------------------------------
// Terms like "x^63+x^7+1" or "t^6+t^3+1"; prime-field coefficients as decimal
// integers, extension-field coefficients as bracketed digit vectors "[1,0,1]".
// The variable letter fixes the role tag. parse/print round-trip.

std::string to_string(const Poly& p);
Poly parse_poly(const FieldPtr& ctx, const std::string& text);

}  // namespace ffdp

#endif
