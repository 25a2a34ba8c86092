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

#ifndef FFDP_REDUCTION_HPP
#define FFDP_REDUCTION_HPP

#include <functional>

#include "ffdp/noise.hpp"

namespace ffdp {

/// Pull-based oracles: stateless given the generator handed to each call,
/// so independent workers can draw from independent streams.
using SampleSource = std::function<Sample(Rng&)>;
using MSampleSource = std::function<MSample(Rng&)>;

/// Black-box decision procedure. `vote` consumes at most queries_per_vote
/// samples from the source and returns 1 for "structured" (hybrid H_i), 0 for
/// "randomized" (hybrid H_{i+1}). pi_structured / pi_uniform are the declared
/// acceptance rates on the two hybrids; the majority test thresholds at their
/// midpoint, so the effective advantage is half their gap.
struct Distinguisher {
    std::function<int(const SampleSource&, Rng&)> vote;
    std::uint64_t queries_per_vote = 1;
    double pi_structured = 1.0;
    double pi_uniform = 0.0;

    double declared_advantage() const { return 0.5 * (pi_structured - pi_uniform); }
};

/// Same interface over module (rank-d) sample streams.
struct MDistinguisher {
    std::function<int(const MSampleSource&, Rng&)> vote;
    std::uint64_t queries_per_vote = 1;
    double pi_structured = 1.0;
    double pi_uniform = 0.0;

    double declared_advantage() const { return 0.5 * (pi_structured - pi_uniform); }
};

struct ReductionConfig {
    double delta = 0.0;  // advantage lower bound; 0 = use the declared one
    double mu = 0.01;    // per-vote failure probability
    int m = 0;           // repetitions; 0 = derive from (delta, mu), forced odd
    std::uint64_t max_samples = UINT64_MAX;
    int parallelism = 1;
    int validation_samples = 64;
};

struct PerPrime {
    int component;
    Poly residue;      // recovered secret mod that component
    Poly galois_unit;  // the unit used to transport the component
};

struct ReductionReport {
    Poly recovered_secret;
    std::vector<PerPrime> per_prime;
    int i0_found = -1;
    std::vector<std::uint64_t> votes;  // winning tally per component
    std::uint64_t samples_used = 0;
    double wall_time_sec = 0.0;
};

/// Step 1: (a, b) -> (a, b + a * mask), turning ffd(s) samples into
/// ffd(s + mask) samples.
Sample randomize_secret(const ResidueRing& ring, const Sample& s, const Poly& mask);

/// Step 2: (a, b) -> (a, b + h) with h uniform on components < i, 0 above.
/// i = 0 leaves the sample unchanged; i = r makes b uniform.
Sample hybridize(const ResidueRing& ring, const Sample& s, int i, Rng& rng);

/// Smallest odd m with m >= ln(1/mu) / (2 delta^2).
int repetitions(double delta, double mu);

/// Step 3: guess-and-search at boundary i0 (0-based component index).
/// Requires a distinguisher separating H_{i0} from H_{i0+1}. Returns the
/// secret residue mod component(i0). votes_out (optional) receives the
/// winning tally. samples_out (optional) accumulates oracle draws.
Poly guess_and_search(const SampleSource& oracle, const CarlitzPtr& ring, int i0,
                      const Distinguisher& dist, const ReductionConfig& cfg, Rng& rng,
                      std::uint64_t* votes_out = nullptr,
                      std::uint64_t* samples_out = nullptr);

/// A per-component solver: given a sample stream whose secret is to be read
/// at component i0, return that residue (guess_and_search bound to a
/// distinguisher is the canonical instance).
using ComponentSolver =
    std::function<Poly(const SampleSource&, int i0, Rng&, std::uint64_t* votes,
                       std::uint64_t* samples)>;

/// Step 4: recover every component by Galois transport through component i0
/// and combine by CRT.
ReductionReport galois_recover(const SampleSource& oracle, const CarlitzPtr& ring, int i0,
                               const ComponentSolver& solver, Rng& rng);

/// Builds the hybrid-boundary distinguisher for a given boundary. The Step-1
/// mask is passed so known-secret test rigs can track the effective secret;
/// secret-agnostic distinguishers may ignore it.
using DistinguisherFactory = std::function<Distinguisher(int boundary, const Poly& mask)>;

/// The full search-to-decision reduction: mask the secret, try every
/// boundary i0, validate candidates against fresh samples, subtract the mask.
ReductionReport full_reduction(const SampleSource& oracle, const CarlitzPtr& ring,
                               const NoiseModel& noise, const DistinguisherFactory& factory,
                               const ReductionConfig& cfg, Rng& rng);

using MDistinguisherFactory =
    std::function<MDistinguisher(int boundary, const std::vector<Poly>& masks, int target)>;

struct ModuleReport {
    std::vector<Poly> secrets;
    std::vector<ReductionReport> per_secret;
    std::uint64_t samples_used = 0;
    double wall_time_sec = 0.0;
};

/// Rank-d variant: recovers s_1..s_d one at a time; the Step-3 randomization
/// v is added only to the targeted coordinate of a.
ModuleReport module_reduction(const MSampleSource& oracle, const CarlitzPtr& ring, int d,
                              const NoiseModel& noise, const MDistinguisherFactory& factory,
                              const ReductionConfig& cfg, Rng& rng);

/// Test-rig distinguisher that knows the secret: inspects the residual
/// b - a s at the boundary component and votes on a zero-count threshold.
/// Acceptance rates are calibrated by Monte Carlo at construction.
Distinguisher planted_distinguisher(const CarlitzPtr& ring, const Poly& secret, int boundary,
                                    const NoiseModel& noise, std::uint64_t samples_per_vote,
                                    Rng& calibration_rng);

MDistinguisher planted_m_distinguisher(const CarlitzPtr& ring, const std::vector<Poly>& secrets,
                                       int boundary, const NoiseModel& noise,
                                       std::uint64_t samples_per_vote, Rng& calibration_rng);

/// Secret-agnostic distinguisher: exhaustive likelihood ratio over all
/// candidate residues at the boundary component, residual law learned from
/// the noise model. Component size q^f must stay within `bound`.
Distinguisher ml_distinguisher(const CarlitzPtr& ring, const NoiseModel& noise, int boundary,
                               std::uint64_t samples_per_vote, Rng& calibration_rng,
                               std::uint64_t bound = 6561);

struct AdvantageEstimate {
    double advantage;
    double lo, hi;  // 95% confidence interval
};

/// Plug-in estimate of Adv = 1/2 (P(A=1 | D1) - P(A=1 | D0)).
AdvantageEstimate estimate_advantage(const Distinguisher& dist, const SampleSource& dist0,
                                     const SampleSource& dist1, int trials, Rng& rng);

}  // namespace ffdp

#endif
