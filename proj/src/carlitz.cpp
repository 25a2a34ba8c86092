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

#include "ffdp/carlitz.hpp"

#include <algorithm>

namespace ffdp {

namespace {

void trim_polys(std::vector<Poly>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// b^(q^i) for b in F_q[T]: the Frobenius just spreads exponents, since every
// coefficient of b is fixed by x -> x^q.
Poly frobenius_power(const Poly& b, std::uint64_t qi) {
    if (b.is_zero() || qi == 1) return b;
    std::vector<Fe> out(static_cast<std::size_t>(b.deg()) * qi + 1, 0);
    for (std::size_t k = 0; k < b.coeffs().size(); ++k) out[k * qi] = b.coeff(k);
    return Poly(b.ctx(), b.var(), std::move(out));
}

}  // namespace

QPoly::QPoly(FieldPtr ctx, std::vector<Poly> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    trim_polys(c_);
}

std::vector<Poly> QPoly::to_bipoly() const {
    if (c_.empty()) return {};
    std::uint64_t q = ctx_->q();
    std::uint64_t top = 1;
    for (int i = 0; i < qdeg(); ++i) top *= q;
    std::vector<Poly> out(top + 1, Poly::zero(ctx_, Var::T));
    std::uint64_t e = 1;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        out[e] = c_[i];
        e *= q;
    }
    return out;
}

QPoly carlitz_compose(const QPoly& A, const QPoly& B) {
    const auto& ctx = A.ctx();
    if (A.coeffs().empty() || B.coeffs().empty()) return QPoly(ctx, {});
    std::vector<Poly> out(A.coeffs().size() + B.coeffs().size() - 1, Poly::zero(ctx, Var::T));
    std::uint64_t qi = 1;
    for (std::size_t i = 0; i < A.coeffs().size(); ++i) {
        if (!A.coeff(i).is_zero()) {
            for (std::size_t j = 0; j < B.coeffs().size(); ++j) {
                if (B.coeff(j).is_zero()) continue;
                out[i + j] = out[i + j] + A.coeff(i) * frobenius_power(B.coeff(j), qi);
            }
        }
        qi *= ctx->q();
    }
    return QPoly(ctx, std::move(out));
}

QPoly carlitz_poly(const Poly& M) {
    if (M.is_zero()) throw Error(Errc::ZeroConductor, "Carlitz polynomial of zero");
    const auto& ctx = M.ctx();
    Poly one_t = Poly::constant(ctx, Var::T, 1);
    QPoly identity(ctx, {one_t});
    QPoly bracket_t(ctx, {Poly::variable(ctx, Var::T), one_t});

    // [T^j] by the recurrence, then the F_q-linear combination sum m_j [T^j]
    std::vector<Poly> acc;
    QPoly power = identity;
    for (std::size_t j = 0; j < M.coeffs().size(); ++j) {
        if (j > 0) power = carlitz_compose(bracket_t, power);
        Fe mj = M.coeff(j);
        if (mj == 0) continue;
        if (acc.size() < power.coeffs().size()) acc.resize(power.coeffs().size(), Poly::zero(ctx, Var::T));
        for (std::size_t i = 0; i < power.coeffs().size(); ++i)
            acc[i] = acc[i] + power.coeff(i) * mj;
    }
    return QPoly(ctx, std::move(acc));
}

// --- BiPoly ------------------------------------------------------------------

BiPoly::BiPoly(FieldPtr ctx, std::vector<Poly> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    trim_polys(c_);
}

BiPoly BiPoly::one(const FieldPtr& ctx) {
    return BiPoly(ctx, {Poly::constant(ctx, Var::T, 1)});
}

bool BiPoly::is_monic() const {
    return !c_.empty() && c_.back().deg() == 0 && c_.back().coeff(0) == 1;
}

BiPoly BiPoly::operator*(const BiPoly& rhs) const {
    if (c_.empty() || rhs.c_.empty()) return BiPoly(ctx_, {});
    std::vector<Poly> out(c_.size() + rhs.c_.size() - 1, Poly::zero(ctx_, Var::T));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j)
            out[i + j] = out[i + j] + c_[i] * rhs.c_[j];
    }
    return BiPoly(ctx_, std::move(out));
}

BiPoly BiPoly::exact_div(const BiPoly& d) const {
    if (!d.is_monic())
        throw Error(Errc::InexactDivision, "divisor must be monic in X");
    if (c_.empty()) return BiPoly(ctx_, {});
    if (deg() < d.deg()) throw Error(Errc::InexactDivision, "degree too small");
    std::vector<Poly> rem = c_;
    std::vector<Poly> quo(c_.size() - d.c_.size() + 1, Poly::zero(ctx_, Var::T));
    for (std::size_t shift = quo.size(); shift-- > 0;) {
        Poly lead = rem[shift + d.c_.size() - 1];
        if (lead.is_zero()) continue;
        quo[shift] = lead;
        for (std::size_t j = 0; j < d.c_.size(); ++j)
            rem[shift + j] = rem[shift + j] - lead * d.c_[j];
    }
    for (const auto& r : rem)
        if (!r.is_zero()) throw Error(Errc::InexactDivision, "nonzero remainder");
    return BiPoly(ctx_, std::move(quo));
}

Poly BiPoly::specialize(const FieldPtr& target, Fe c) const {
    bool same = target->same_as(*ctx_);
    if (!same && ctx_->e() != 1)
        throw Error(Errc::UnsupportedModulusDegree,
                    "specialization into a larger field needs a prime base field");
    std::vector<Fe> out(c_.size(), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        // evaluate the T-coefficient at c inside the target field
        Fe v = 0;
        for (std::size_t k = c_[i].coeffs().size(); k-- > 0;)
            v = target->add(target->mul(v, c), c_[i].coeff(k));  // F_p codes embed as-is
        out[i] = v;
    }
    return Poly(target, Var::X, std::move(out));
}

BiPoly carlitz_cyclotomic(const Poly& M) {
    if (M.is_zero()) throw Error(Errc::ZeroConductor, "cyclotomic of zero");
    if (!M.is_monic()) throw Error(Errc::NonMonicConductor, "conductor must be monic");
    const auto& ctx = M.ctx();
    BiPoly num = BiPoly::one(ctx), den = BiPoly::one(ctx);
    for (const auto& D : monic_divisors(M)) {
        Poly cof = M / D;  // mu(M/D)
        int mu;
        if (cof.is_one()) {
            mu = 1;
        } else {
            auto fac = factor(cof);
            mu = fac.squarefree() ? (fac.factors.size() % 2 ? -1 : 1) : 0;
        }
        if (mu == 0) continue;
        BiPoly bracket(ctx, carlitz_poly(D).to_bipoly());
        if (mu == 1)
            num = num * bracket;
        else
            den = den * bracket;
    }
    return num.exact_div(den);
}

SplitPrediction predict_splitting(const Poly& M, const Poly& Q) {
    if (Q.deg() < 1 || !Q.is_monic() || !is_irreducible(Q))
        throw Error(Errc::InvalidParameters, "Q must be monic irreducible");
    if (M.deg() < 1) throw Error(Errc::ZeroConductor, "conductor must be nonconstant");
    if ((M % Q).is_zero()) return {true, 0, 0};
    std::uint64_t f = mult_order(Q, M);
    return {false, f, euler_phi(M) / f};
}

// --- CarlitzRing --------------------------------------------------------------

std::shared_ptr<const CarlitzRing> CarlitzRing::make(const Poly& M, const Poly& Q,
                                                     bool experimental) {
    const auto& ctx = M.ctx();
    require_same_ctx(M, Q);
    if (!M.is_monic() || M.deg() < 1)
        throw Error(Errc::NonMonicConductor, "conductor must be monic nonconstant");
    if (Q.deg() < 1 || !Q.is_monic() || !is_irreducible(Q))
        throw Error(Errc::InvalidParameters, "Q must be monic irreducible");
    if ((M % Q).is_zero())
        throw Error(Errc::RamifiedModulus, "Q divides M: totally ramified");

    FieldPtr target;
    Fe c;
    if (Q.deg() == 1) {
        target = ctx;
        c = ctx->neg(Q.coeff(0));
    } else {
        if (!experimental)
            throw Error(Errc::UnsupportedModulusDegree,
                        "deg Q > 1 requires the experimental flag");
        if (ctx->e() != 1)
            throw Error(Errc::UnsupportedModulusDegree,
                        "deg Q > 1 supported over prime base fields only");
        std::vector<std::uint32_t> mod(Q.coeffs().begin(), Q.coeffs().end());
        target = FieldCtx::make(ctx->p(), static_cast<std::uint32_t>(Q.deg()), mod);
        c = target->from_digits({0, 1});  // the class of T, a root of Q
    }

    auto ring = std::shared_ptr<CarlitzRing>(new CarlitzRing());
    ring->M_ = M;
    ring->Q_ = Q;
    ring->c_ = c;
    ring->base_field_ = target;

    BiPoly phi = carlitz_cyclotomic(M);
    Poly phi_c = phi.specialize(target, c);
    ring->base_ = ResidueRing::make(phi_c);
    ring->n_ = static_cast<std::uint64_t>(phi_c.deg());

    auto pred = predict_splitting(M, Q);
    ring->f_ = pred.f;
    ring->r_ = pred.r;
    if (!ring->base_->squarefree() ||
        ring->base_->r() != static_cast<int>(pred.r))
        throw Error(Errc::InvalidParameters, "splitting mismatch against prediction");
    for (int i = 0; i < ring->base_->r(); ++i)
        if (ring->base_->component(i).deg() != static_cast<int>(pred.f))
            throw Error(Errc::InvalidParameters, "component degree mismatch");

    ring->units_ = unit_group(M);
    if (ring->units_.size() != ring->n_)
        throw Error(Errc::InvalidParameters, "Galois group order mismatch");

    const Poly& mod = ring->base_->modulus();
    for (std::size_t idx = 0; idx < ring->units_.size(); ++idx) {
        const Poly& A = ring->units_[idx];
        ring->unit_by_code_[A.code()] = idx;
        BiPoly bracket(ctx, carlitz_poly(A).to_bipoly());
        ring->action_.push_back(bracket.specialize(target, c) % mod);
    }

    // permutation of CRT idempotents under each sigma_A
    for (std::size_t idx = 0; idx < ring->units_.size(); ++idx) {
        std::vector<int> perm(ring->base_->r(), -1);
        for (int i = 0; i < ring->base_->r(); ++i) {
            Poly image = compose_mod(ring->base_->idempotent(i), ring->action_[idx], mod);
            for (int j = 0; j < ring->base_->r(); ++j)
                if (image == ring->base_->idempotent(j)) {
                    perm[i] = j;
                    break;
                }
            if (perm[i] < 0)
                throw Error(Errc::InvalidParameters, "action does not permute idempotents");
        }
        ring->perm_.push_back(std::move(perm));
    }
    return ring;
}

std::size_t CarlitzRing::unit_index(const Poly& A) const {
    Poly a = A % M_;
    if (a.is_zero() || gcd(a, M_).deg() != 0)
        throw Error(Errc::NotAUnit, "residue is not a unit mod the conductor");
    auto it = unit_by_code_.find(a.code());
    if (it == unit_by_code_.end()) throw Error(Errc::NotAUnit, "unit not in table");
    return it->second;
}

const Poly& CarlitzRing::action_poly(const Poly& A) const { return action_[unit_index(A)]; }

Poly CarlitzRing::apply(const Poly& A, const Poly& x) const {
    return compose_mod(x, action_[unit_index(A)], base_->modulus());
}

const std::vector<int>& CarlitzRing::prime_permutation(const Poly& A) const {
    return perm_[unit_index(A)];
}

std::vector<Poly> CarlitzRing::decomposition_group(int i) const {
    std::vector<Poly> out;
    for (std::size_t idx = 0; idx < units_.size(); ++idx)
        if (perm_[idx][static_cast<std::size_t>(i)] == i) out.push_back(units_[idx]);
    return out;
}

Poly CarlitzRing::unit_inverse(const Poly& A) const {
    Poly a = A % M_;
    auto [g, u, v] = xgcd(a, M_);
    if (!g.is_one()) throw Error(Errc::NotAUnit, "residue is not a unit mod the conductor");
    return u % M_;
}

// --- subgroup rings -----------------------------------------------------------

SubgroupRing subgroup_split_ring(const FieldPtr& ctx, std::vector<Fe> H, Fe shift) {
    if (H.empty()) throw Error(Errc::NotASubgroup, "empty subgroup");
    std::sort(H.begin(), H.end());
    H.erase(std::unique(H.begin(), H.end()), H.end());
    auto contains = [&H](Fe x) { return std::binary_search(H.begin(), H.end(), x); };
    if (!contains(1)) throw Error(Errc::NotASubgroup, "missing identity");
    for (Fe a : H) {
        if (a == 0) throw Error(Errc::NotASubgroup, "zero is not a unit");
        for (Fe b : H)
            if (!contains(ctx->mul(a, b))) throw Error(Errc::NotASubgroup, "not closed");
    }
    if (shift == 0) throw Error(Errc::NotASubgroup, "shift must be a unit");

    std::vector<Fe> roots;
    for (Fe a : H) roots.push_back(ctx->mul(shift, a));
    std::sort(roots.begin(), roots.end());

    Poly modulus = Poly::constant(ctx, Var::X, 1);
    for (Fe a : roots)
        modulus = modulus * (Poly::variable(ctx, Var::X) - Poly::constant(ctx, Var::X, a));

    return SubgroupRing{ResidueRing::make(modulus), std::move(H), std::move(roots)};
}

Poly SubgroupRing::apply(Fe h, const Poly& x) const {
    if (!std::binary_search(subgroup.begin(), subgroup.end(), h))
        throw Error(Errc::NotAUnit, "element not in the subgroup");
    return x.shift_var_scale(h) % ring->modulus();
}

std::vector<int> SubgroupRing::prime_permutation(Fe h) const {
    std::vector<int> perm(ring->r(), -1);
    for (int i = 0; i < ring->r(); ++i) {
        Poly image = apply(h, ring->idempotent(i));
        for (int j = 0; j < ring->r(); ++j)
            if (image == ring->idempotent(j)) {
                perm[i] = j;
                break;
            }
        if (perm[i] < 0) throw Error(Errc::NotASubgroup, "action does not permute components");
    }
    return perm;
}

}  // namespace ffdp
