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

#ifndef FFDP_CARLITZ_HPP
#define FFDP_CARLITZ_HPP

#include <map>
#include <memory>
#include <vector>

#include "ffdp/residue.hpp"

namespace ffdp {

/// Additive q-polynomial c_0 X + c_1 X^q + ... + c_r X^{q^r} with
/// coefficients in F_q[T]; coefficient i belongs to the X^{q^i} term.
class QPoly {
   public:
    QPoly(FieldPtr ctx, std::vector<Poly> coeffs);

    const FieldPtr& ctx() const { return ctx_; }
    const std::vector<Poly>& coeffs() const { return c_; }
    /// q-degree: largest i with c_i nonzero (so X-degree is q^i).
    int qdeg() const { return static_cast<int>(c_.size()) - 1; }
    const Poly& coeff(std::size_t i) const { return c_[i]; }

    bool operator==(const QPoly& rhs) const { return c_ == rhs.c_; }

    /// The plain polynomial in X over F_q[T] (coefficients low first).
    std::vector<Poly> to_bipoly() const;

   private:
    FieldPtr ctx_;
    std::vector<Poly> c_;  // Poly values in the T variable
};

/// The Carlitz polynomial [M](X), built by [T](X) = X^q + TX, the recurrence
/// [T^n] = [T] o [T^(n-1)], and F_q-linear combination.
QPoly carlitz_poly(const Poly& M);

/// [M] o [N] = [MN]; composition of additive polynomials.
QPoly carlitz_compose(const QPoly& A, const QPoly& B);

/// Polynomials in X with F_q[T] coefficients, just enough structure for the
/// cyclotomic Moebius product (multiply and exact division by monic-in-X).
class BiPoly {
   public:
    BiPoly(FieldPtr ctx, std::vector<Poly> coeffs);
    static BiPoly one(const FieldPtr& ctx);

    const std::vector<Poly>& coeffs() const { return c_; }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_monic() const;

    BiPoly operator*(const BiPoly& rhs) const;
    /// Exact division by a divisor monic in X; throws InexactDivision if a
    /// nonzero remainder is left.
    BiPoly exact_div(const BiPoly& d) const;
    bool operator==(const BiPoly& rhs) const { return c_ == rhs.c_; }

    /// Evaluate every T-coefficient at c, yielding a Poly in X over the
    /// (possibly larger) field `target`; `embed` maps F_q[T] -> target.
    Poly specialize(const FieldPtr& target, Fe c) const;

   private:
    FieldPtr ctx_;
    std::vector<Poly> c_;  // X-coefficients, each a Poly in T
};

/// Carlitz cyclotomic polynomial Phi_M(T, X) = prod_{D | M} [D](X)^{mu(M/D)},
/// monic in X of degree Phi(M); for M irreducible this is [M](X)/X.
BiPoly carlitz_cyclotomic(const Poly& M);

struct SplitPrediction {
    bool ramified;
    std::uint64_t f;  // inertia degree (0 when ramified)
    std::uint64_t r;  // number of primes (0 when ramified)
};

/// Splitting of Q in O_M: ramified iff Q | M; otherwise f = mult_order(Q, M)
/// and r = Phi(M)/f.
SplitPrediction predict_splitting(const Poly& M, const Poly& Q);

/// O_M/QO_M as a residue ring F_{q'}[X]/(Phi_M(c, X)) with the explicit
/// action of (F_q[T]/(M))^x given by sigma_A(x)(X) = x([A](c, X)).
/// Immutable after construction; action tables precomputed for every unit.
class CarlitzRing {
   public:
    /// Requires Q monic irreducible and coprime to M. deg Q = 1 specializes
    /// T to c = -Q(0) in F_q; deg Q > 1 (experimental flag, prime base field
    /// only) specializes into F_{q^deg Q}.
    static std::shared_ptr<const CarlitzRing> make(const Poly& M, const Poly& Q,
                                                   bool experimental = false);

    const RingPtr& base() const { return base_; }
    const Poly& conductor() const { return M_; }
    const Poly& modulus_prime() const { return Q_; }
    Fe t_image() const { return c_; }

    std::uint64_t n() const { return n_; }
    int e() const { return 1; }
    std::uint64_t f() const { return f_; }
    std::uint64_t r() const { return r_; }

    /// Canonical residues of the Galois group (F_q[T]/(M))^x, |G| = n.
    const std::vector<Poly>& galois_group() const { return units_; }

    /// sigma_A as the reduced substitution polynomial [A](c, X) mod Phi.
    const Poly& action_poly(const Poly& A) const;
    /// sigma_A(x); throws NotAUnit when gcd(A, M) != 1.
    Poly apply(const Poly& A, const Poly& x) const;
    /// Permutation pi with sigma_A(e_i) = e_{pi(i)} on CRT idempotents.
    const std::vector<int>& prime_permutation(const Poly& A) const;
    /// All units fixing component i; size equals f.
    std::vector<Poly> decomposition_group(int i) const;
    /// Inverse of a unit mod M.
    Poly unit_inverse(const Poly& A) const;

   private:
    CarlitzRing() = default;
    std::size_t unit_index(const Poly& A) const;

    RingPtr base_;
    FieldPtr base_field_;
    Poly M_, Q_;
    Fe c_ = 0;
    std::uint64_t n_ = 0, f_ = 0, r_ = 0;
    std::vector<Poly> units_;
    std::map<std::uint64_t, std::size_t> unit_by_code_;
    std::vector<Poly> action_;
    std::vector<std::vector<int>> perm_;
};

using CarlitzPtr = std::shared_ptr<const CarlitzRing>;

/// The subgroup case: F_q[X]/(prod_{a in bH}(X - a)) with h acting by
/// m(X) -> m(hX). H must be a subgroup of F_q^x; shift b picks the coset bH.
struct SubgroupRing {
    RingPtr ring;
    std::vector<Fe> subgroup;  // H, sorted
    std::vector<Fe> roots;     // bH, sorted

    Poly apply(Fe h, const Poly& x) const;
    std::vector<int> prime_permutation(Fe h) const;
};

SubgroupRing subgroup_split_ring(const FieldPtr& ctx, std::vector<Fe> H, Fe shift = 1);

}  // namespace ffdp

#endif
