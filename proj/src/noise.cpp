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

#include "ffdp/noise.hpp"

#include <algorithm>

namespace ffdp {

namespace {

void check_rate(double p) {
    if (!(p >= 0.0 && p < 0.5))
        throw Error(Errc::InvalidNoiseRate, "rate must satisfy 0 <= p < 1/2");
}

// Invert an n x n matrix over F_q by Gauss-Jordan; nullopt when singular.
std::optional<std::vector<std::vector<Fe>>> invert_matrix(const FieldCtx& F,
                                                          std::vector<std::vector<Fe>> m) {
    std::size_t n = m.size();
    std::vector<std::vector<Fe>> inv(n, std::vector<Fe>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        Fe scale = F.inv(m[col][col]);
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] = F.mul(m[col][j], scale);
            inv[col][j] = F.mul(inv[col][j], scale);
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            Fe factor = m[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[row][j] = F.sub(m[row][j], F.mul(factor, m[col][j]));
                inv[row][j] = F.sub(inv[row][j], F.mul(factor, inv[col][j]));
            }
        }
    }
    return inv;
}

std::vector<Fe> mat_vec(const FieldCtx& F, const std::vector<std::vector<Fe>>& m,
                        const std::vector<Fe>& v) {
    std::vector<Fe> out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            out[i] = F.add(out[i], F.mul(m[i][j], v[j]));
    return out;
}

}  // namespace

NoiseSpec NoiseSpec::bernoulli(double p) {
    check_rate(p);
    return {Kind::Bernoulli, p, 0};
}

NoiseSpec NoiseSpec::fixed_weight(int t) {
    if (t < 0) throw Error(Errc::WeightOutOfRange, "negative weight");
    return {Kind::FixedWeight, 0.0, t};
}

NoiseSpec NoiseSpec::normal(double p) {
    check_rate(p);
    return {Kind::Normal, p, 0};
}

NoiseSpec NoiseSpec::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw Error(Errc::ParseError, "noise spec must look like kind:value");
    std::string kind = text.substr(0, colon);
    std::string value = text.substr(colon + 1);
    try {
        if (kind == "bernoulli") return bernoulli(std::stod(value));
        if (kind == "normal") return normal(std::stod(value));
        if (kind == "weight") return fixed_weight(std::stoi(value));
    } catch (const std::logic_error&) {
        throw Error(Errc::ParseError, "bad noise value: " + value);
    }
    throw Error(Errc::ParseError, "unknown noise kind: " + kind);
}

std::string NoiseSpec::to_string() const {
    switch (kind) {
        case Kind::Bernoulli: return "bernoulli:" + std::to_string(p);
        case Kind::FixedWeight: return "weight:" + std::to_string(t);
        case Kind::Normal: return "normal:" + std::to_string(p);
    }
    return "";
}

Poly sample_bernoulli(const ResidueRing& ring, double p, Rng& rng) {
    check_rate(p);
    const auto& F = ring.ctx();
    std::vector<Fe> c(static_cast<std::size_t>(ring.n()), 0);
    for (auto& x : c)
        if (rng.bernoulli(p)) x = static_cast<Fe>(1 + rng.below(F->q() - 1));
    return Poly(F, Var::X, std::move(c));
}

Poly sample_fixed_weight(const ResidueRing& ring, int t, Rng& rng) {
    int n = ring.n();
    if (t < 0 || t > n) throw Error(Errc::WeightOutOfRange, "weight exceeds ring degree");
    const auto& F = ring.ctx();
    // partial Fisher-Yates for a uniform t-subset of positions
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::vector<Fe> c(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < t; ++i) {
        std::size_t j = static_cast<std::size_t>(i) + rng.below(static_cast<std::uint64_t>(n - i));
        std::swap(idx[static_cast<std::size_t>(i)], idx[j]);
        c[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] =
            static_cast<Fe>(1 + rng.below(F->q() - 1));
    }
    return Poly(F, Var::X, std::move(c));
}

std::optional<NormalBasis> try_normal_basis(const CarlitzPtr& ring, const Poly& candidate) {
    const auto& F = ring->base()->ctx();
    std::size_t n = static_cast<std::size_t>(ring->base()->n());
    const auto& G = ring->galois_group();
    if (G.size() != n) throw Error(Errc::InvalidParameters, "group order != ring degree");
    std::vector<std::vector<Fe>> cols(n, std::vector<Fe>(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        Poly img = ring->apply(G[j], candidate);
        for (std::size_t i = 0; i < n; ++i) cols[i][j] = img.coeff(i);
    }
    auto inv = invert_matrix(*F, cols);
    if (!inv) return std::nullopt;
    return NormalBasis{ring, candidate, std::move(cols), std::move(*inv), 0};
}

NormalBasis find_normal_basis(const CarlitzPtr& ring, Rng& rng, int max_tries) {
    for (int tries = 1; tries <= max_tries; ++tries) {
        Poly x = ring->base()->uniform(rng);
        if (x.is_zero()) continue;
        auto basis = try_normal_basis(ring, x);
        if (basis) {
            basis->tries = tries;
            return std::move(*basis);
        }
    }
    throw Error(Errc::MaxTriesExceeded, "no normal-basis generator found");
}

Poly NormalBasis::from_normal_coords(const std::vector<Fe>& coords) const {
    const auto& F = ring->base()->ctx();
    return Poly(F, Var::X, mat_vec(*F, to_monomial, coords));
}

std::vector<Fe> NormalBasis::normal_coords(const Poly& x) const {
    const auto& F = ring->base()->ctx();
    std::vector<Fe> v(static_cast<std::size_t>(ring->base()->n()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = x.coeff(i);
    return mat_vec(*F, to_normal, v);
}

Rational normal_basis_probability(const FieldPtr& ctx, std::uint64_t N) {
    if (N < 1 || N % ctx->p() == 0)
        throw Error(Errc::NonCoprimeOrder, "group order must be coprime to q");
    Poly xn_minus_1 =
        Poly::monomial(ctx, Var::X, static_cast<std::size_t>(N)) - Poly::constant(ctx, Var::X, 1);
    Rational out;
    out.num = 1;
    out.den = 1;
    for (const auto& [u, m] : factor(xn_minus_1).factors) {
        std::uint64_t qd = 1;
        for (int i = 0; i < u.deg(); ++i) {
            if (qd > UINT64_MAX / ctx->q())
                throw Error(Errc::EnumerationBoundExceeded, "q^deg too large");
            qd *= ctx->q();
        }
        if (out.num > UINT64_MAX / (qd - 1))
            throw Error(Errc::EnumerationBoundExceeded, "probability numerator overflow");
        out.num *= qd - 1;
    }
    for (std::uint64_t i = 0; i < N; ++i) {
        if (out.den > UINT64_MAX / ctx->q())
            throw Error(Errc::EnumerationBoundExceeded, "probability denominator overflow");
        out.den *= ctx->q();
    }
    return out;
}

Poly sample_normal_noise(const NormalBasis& basis, double p, Rng& rng) {
    check_rate(p);
    const auto& F = basis.ring->base()->ctx();
    std::vector<Fe> coords(static_cast<std::size_t>(basis.ring->base()->n()), 0);
    for (auto& x : coords)
        if (rng.bernoulli(p)) x = static_cast<Fe>(1 + rng.below(F->q() - 1));
    return basis.from_normal_coords(coords);
}

Poly NoiseModel::sample(Rng& rng) const {
    switch (spec.kind) {
        case NoiseSpec::Kind::Bernoulli: return sample_bernoulli(*ring, spec.p, rng);
        case NoiseSpec::Kind::FixedWeight: return sample_fixed_weight(*ring, spec.t, rng);
        case NoiseSpec::Kind::Normal:
            if (!basis) throw Error(Errc::InvalidParameters, "normal noise needs a basis");
            return sample_normal_noise(*basis, spec.p, rng);
    }
    throw Error(Errc::InvalidParameters, "unknown noise kind");
}

NoiseModel make_noise_model(const RingPtr& ring, const NoiseSpec& spec) {
    if (spec.kind == NoiseSpec::Kind::Normal)
        throw Error(Errc::InvalidParameters, "normal noise requires a Carlitz ring");
    if (spec.kind == NoiseSpec::Kind::FixedWeight && spec.t > ring->n())
        throw Error(Errc::WeightOutOfRange, "weight exceeds ring degree");
    return NoiseModel{ring, spec, nullptr};
}

NoiseModel make_noise_model(const CarlitzPtr& ring, const NoiseSpec& spec, Rng& basis_rng) {
    if (spec.kind != NoiseSpec::Kind::Normal) return make_noise_model(ring->base(), spec);
    auto basis = std::make_shared<NormalBasis>(find_normal_basis(ring, basis_rng));
    return NoiseModel{ring->base(), spec, std::move(basis)};
}

Sample ffdp_sample(const Poly& s, const NoiseModel& noise, Rng& rng) {
    Poly a = noise.ring->uniform(rng);
    Poly b = noise.ring->add(noise.ring->mul(a, s), noise.sample(rng));
    return {std::move(a), std::move(b)};
}

MSample mffdp_sample(const std::vector<Poly>& s, const NoiseModel& noise, Rng& rng) {
    if (s.empty()) throw Error(Errc::InvalidParameters, "module rank must be >= 1");
    MSample out;
    out.b = noise.sample(rng);
    out.a.reserve(s.size());
    for (const auto& si : s) {
        Poly ai = noise.ring->uniform(rng);
        out.b = noise.ring->add(out.b, noise.ring->mul(ai, si));
        out.a.push_back(std::move(ai));
    }
    return out;
}

}  // namespace ffdp
