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

#ifndef FFDP_FIELD_HPP
#define FFDP_FIELD_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "ffdp/errors.hpp"

namespace ffdp {

/// Canonical code of a field element: the base-p digit vector of its
/// coefficient representation, packed little-endian. Codes are canonical,
/// so element equality is code equality.
using Fe = std::uint32_t;

/// The finite field F_q with q = p^e, built as F_p[y]/(modulus) when e > 1.
/// Immutable after construction and safe to share across threads.
class FieldCtx {
   public:
    /// If e > 1 and no modulus is given, the lexicographically least monic
    /// irreducible of degree e over F_p is used (reproducible cross-run).
    static std::shared_ptr<const FieldCtx> make(std::uint32_t p, std::uint32_t e,
                                                std::vector<std::uint32_t> modulus = {});

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint64_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    bool same_as(const FieldCtx& other) const {
        return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
    }

    Fe zero() const { return 0; }
    Fe one() const { return 1; }

    Fe add(Fe a, Fe b) const;
    Fe sub(Fe a, Fe b) const;
    Fe neg(Fe a) const;
    Fe mul(Fe a, Fe b) const;
    Fe inv(Fe a) const;
    Fe pow(Fe a, std::uint64_t k) const;

    /// Embed an integer 0..p-1 (constant subfield F_p).
    Fe from_int(std::uint64_t v) const { return static_cast<Fe>(v % p_); }

    std::vector<std::uint32_t> digits(Fe a) const;
    Fe from_digits(const std::vector<std::uint32_t>& d) const;

   private:
    FieldCtx(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);

    Fe mul_nocache(Fe a, Fe b) const;

    std::uint32_t p_, e_;
    std::uint64_t q_;
    std::vector<std::uint32_t> modulus_;  // monic, degree e, coeffs low first; empty when e == 1
    std::vector<Fe> mul_table_;           // q*q entries when q small, else empty
    std::vector<Fe> inv_table_;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

}  // namespace ffdp

#endif
