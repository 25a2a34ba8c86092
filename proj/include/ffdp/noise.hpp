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

#ifndef FFDP_NOISE_HPP
#define FFDP_NOISE_HPP

#include <optional>
#include <string>
#include <vector>

#include "ffdp/carlitz.hpp"
#include "ffdp/residue.hpp"
#include "ffdp/rng.hpp"

namespace ffdp {

/// Declarative noise description, parseable from CLI strings
/// "bernoulli:0.1", "weight:3", "normal:0.1".
struct NoiseSpec {
    enum class Kind { Bernoulli, FixedWeight, Normal };
    Kind kind;
    double p = 0.0;  // rate for bernoulli/normal, in [0, 1/2)
    int t = 0;       // weight for fixed_weight

    static NoiseSpec bernoulli(double p);
    static NoiseSpec fixed_weight(int t);
    static NoiseSpec normal(double p);
    static NoiseSpec parse(const std::string& text);
    std::string to_string() const;
};

/// Each coefficient independently: 0 with probability 1-p, each nonzero
/// value with probability p/(q-1).
Poly sample_bernoulli(const ResidueRing& ring, double p, Rng& rng);

/// Uniform over coefficient vectors of Hamming weight exactly t.
Poly sample_fixed_weight(const ResidueRing& ring, int t, Rng& rng);

/// A generator x whose Galois orbit {sigma_A(x)} is an F_q-basis, with the
/// change-of-basis matrices between monomial and normal coordinates.
struct NormalBasis {
    CarlitzPtr ring;
    Poly generator;
    /// n x n over F_q; column j is the coefficient vector of
    /// sigma_{G[j]}(generator) in the monomial basis.
    std::vector<std::vector<Fe>> to_monomial;
    std::vector<std::vector<Fe>> to_normal;  // its inverse
    int tries = 0;

    Poly from_normal_coords(const std::vector<Fe>& coords) const;
    std::vector<Fe> normal_coords(const Poly& x) const;
};

/// Randomized search for a normal-basis generator (rejection sampling).
NormalBasis find_normal_basis(const CarlitzPtr& ring, Rng& rng, int max_tries = 256);

/// Check a candidate generator; returns the basis if its orbit is a basis.
std::optional<NormalBasis> try_normal_basis(const CarlitzPtr& ring, const Poly& candidate);

/// Probability that a uniform element generates a normal basis for a cyclic
/// group of order N coprime to q: prod over distinct irreducible factors u_i
/// of X^N - 1 of (q^deg u_i - 1), divided by q^N.
struct Rational {
    std::uint64_t num = 0, den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};
Rational normal_basis_probability(const FieldPtr& ctx, std::uint64_t N);

/// e = sum over the group of e_sigma sigma(x), e_sigma iid Bernoulli(p).
Poly sample_normal_noise(const NormalBasis& basis, double p, Rng& rng);

/// A ring plus a NoiseSpec, bound to a concrete sampler. For normal noise a
/// NormalBasis must be attached.
struct NoiseModel {
    RingPtr ring;
    NoiseSpec spec;
    std::shared_ptr<const NormalBasis> basis;  // required when spec.kind == Normal

    Poly sample(Rng& rng) const;
};

NoiseModel make_noise_model(const RingPtr& ring, const NoiseSpec& spec);
NoiseModel make_noise_model(const CarlitzPtr& ring, const NoiseSpec& spec, Rng& basis_rng);

struct Sample {
    Poly a, b;
};

struct MSample {
    std::vector<Poly> a;
    Poly b;
};

/// (a, a s + e) with a uniform and e from the noise model.
Sample ffdp_sample(const Poly& s, const NoiseModel& noise, Rng& rng);

/// (a_1..a_d, sum a_i s_i + e), the rank-d module variant.
MSample mffdp_sample(const std::vector<Poly>& s, const NoiseModel& noise, Rng& rng);

}  // namespace ffdp

#endif
