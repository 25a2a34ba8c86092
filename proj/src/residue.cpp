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

#include "ffdp/residue.hpp"

namespace ffdp {

std::shared_ptr<const ResidueRing> ResidueRing::make(const Poly& modulus) {
    if (modulus.deg() < 1 || !modulus.is_monic())
        throw Error(Errc::InvalidParameters, "ring modulus must be monic of degree >= 1");
    return std::shared_ptr<const ResidueRing>(new ResidueRing(modulus));
}

ResidueRing::ResidueRing(const Poly& modulus)
    : ctx_(modulus.ctx()), modulus_(modulus), fac_(factor(modulus)) {
    squarefree_ = fac_.squarefree();
    if (!squarefree_) return;
    for (const auto& [p, m] : fac_.factors) components_.push_back(p);
    if (components_.size() == 1) {
        idempotents_.push_back(one());
        return;
    }
    for (const auto& fi : components_) {
        Poly h = modulus_ / fi;
        auto [g, u, v] = xgcd(h, fi);
        if (!g.is_one()) throw Error(Errc::NotCoprime, "cofactor not coprime to component");
        idempotents_.push_back((u * h) % modulus_);
    }
}

Poly ResidueRing::uniform(Rng& rng) const {
    std::vector<Fe> c(static_cast<std::size_t>(n()));
    for (auto& x : c) x = static_cast<Fe>(rng.below(ctx_->q()));
    return Poly(ctx_, Var::X, std::move(c));
}

std::vector<Poly> ResidueRing::crt_split(const Poly& a) const {
    if (!squarefree_)
        throw Error(Errc::RamifiedRing, "CRT split requires a squarefree modulus");
    std::vector<Poly> out;
    out.reserve(components_.size());
    for (const auto& fi : components_) out.push_back(a % fi);
    return out;
}

Poly ResidueRing::crt_combine(const std::vector<Poly>& comps) const {
    if (!squarefree_)
        throw Error(Errc::RamifiedRing, "CRT combine requires a squarefree modulus");
    if (comps.size() != components_.size())
        throw Error(Errc::ComponentDegreeOverflow, "wrong number of components");
    Poly x = zero();
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (comps[i].deg() >= components_[i].deg())
            throw Error(Errc::ComponentDegreeOverflow,
                        "component " + std::to_string(i) + " not reduced");
        x = (x + comps[i] * idempotents_[i]) % modulus_;
    }
    return x;
}

Poly ResidueRing::component_inverse(const Poly& c, int i) const {
    const Poly& fi = components_[static_cast<std::size_t>(i)];
    Poly cr = c % fi;
    if (cr.is_zero()) throw Error(Errc::ZeroInField, "inverse of zero in a component field");
    auto [g, u, v] = xgcd(cr, fi);
    if (!g.is_one()) throw Error(Errc::ZeroInField, "residue not invertible in component");
    return u % fi;
}

int ResidueRing::weight(const Poly& a) const {
    int w = 0;
    for (Fe c : a.coeffs())
        if (c != 0) ++w;
    return w;
}

std::uint64_t ResidueRing::size() const {
    std::uint64_t s = 1;
    for (int i = 0; i < n(); ++i) {
        if (s > UINT64_MAX / ctx_->q())
            throw Error(Errc::RingTooLarge, "q^n exceeds 64 bits");
        s *= ctx_->q();
    }
    return s;
}

}  // namespace ffdp
