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

#ifndef FFDP_RESIDUE_HPP
#define FFDP_RESIDUE_HPP

#include <memory>
#include <vector>

#include "ffdp/poly.hpp"
#include "ffdp/rng.hpp"

namespace ffdp {

/// The quotient ring F_q[X]/(f(X)) with its Chinese Remainder decomposition
/// along the irreducible factors of f. Elements are polynomials of degree
/// < deg f; all operations take and return reduced representatives.
/// Immutable after construction and safe to share across threads.
class ResidueRing {
   public:
    static std::shared_ptr<const ResidueRing> make(const Poly& modulus);

    const FieldPtr& ctx() const { return ctx_; }
    const Poly& modulus() const { return modulus_; }
    const Factorization& factorization() const { return fac_; }
    bool squarefree() const { return squarefree_; }

    int n() const { return modulus_.deg(); }
    /// Number of CRT components (only meaningful when squarefree).
    int r() const { return static_cast<int>(components_.size()); }
    /// The i-th monic irreducible factor, in the canonical factor order.
    const Poly& component(int i) const { return components_[i]; }
    /// CRT idempotent e_i: 1 mod component(i), 0 mod the others.
    const Poly& idempotent(int i) const { return idempotents_[i]; }

    Poly reduce(const Poly& a) const { return a % modulus_; }
    Poly add(const Poly& a, const Poly& b) const { return a + b; }
    Poly sub(const Poly& a, const Poly& b) const { return a - b; }
    Poly neg(const Poly& a) const { return -a; }
    Poly mul(const Poly& a, const Poly& b) const { return (a * b) % modulus_; }
    Poly zero() const { return Poly::zero(ctx_, Var::X); }
    Poly one() const { return Poly::constant(ctx_, Var::X, 1); }

    /// Uniform element: iid uniform coefficients of degree < n.
    Poly uniform(Rng& rng) const;

    /// Residues mod each component, in component order. Requires squarefree.
    std::vector<Poly> crt_split(const Poly& a) const;
    /// Unique x with x = c_i mod component(i); inverse of crt_split.
    Poly crt_combine(const std::vector<Poly>& components) const;

    /// Inverse of a nonzero residue in the field F_q[X]/(component(i)).
    Poly component_inverse(const Poly& c, int i) const;

    /// Hamming weight of the coefficient vector of the representative.
    int weight(const Poly& a) const;

    /// q^n if it fits in 64 bits, else throws RingTooLarge.
    std::uint64_t size() const;
    /// Enumeration by canonical element code (coefficients base q).
    Poly element(std::uint64_t code) const { return Poly::from_code(ctx_, Var::X, code); }

   private:
    explicit ResidueRing(const Poly& modulus);

    FieldPtr ctx_;
    Poly modulus_;
    Factorization fac_;
    bool squarefree_;
    std::vector<Poly> components_;
    std::vector<Poly> idempotents_;
};

using RingPtr = std::shared_ptr<const ResidueRing>;

}  // namespace ffdp

#endif
