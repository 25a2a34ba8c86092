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

#include "ffdp/reduction.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <optional>
#include <thread>

namespace ffdp {

namespace {

Poly uniform_component_residue(const ResidueRing& ring, int i, Rng& rng) {
    int d = ring.component(i).deg();
    std::vector<Fe> c(static_cast<std::size_t>(d));
    for (auto& x : c) x = static_cast<Fe>(rng.below(ring.ctx()->q()));
    return Poly(ring.ctx(), Var::X, std::move(c));
}

/// Ring element uniform on components < i, zero on the rest.
Poly low_hybrid_mask(const ResidueRing& ring, int i, Rng& rng) {
    std::vector<Poly> comps;
    comps.reserve(static_cast<std::size_t>(ring.r()));
    for (int j = 0; j < ring.r(); ++j)
        comps.push_back(j < i ? uniform_component_residue(ring, j, rng) : ring.zero());
    return ring.crt_combine(comps);
}

/// Ring element equal to `res` on component i, zero elsewhere.
Poly embed_component(const ResidueRing& ring, int i, const Poly& res) {
    std::vector<Poly> comps(static_cast<std::size_t>(ring.r()), ring.zero());
    comps[static_cast<std::size_t>(i)] = res % ring.component(i);
    return ring.crt_combine(comps);
}

std::uint64_t component_size(const ResidueRing& ring, int i) {
    std::uint64_t s = 1;
    for (int k = 0; k < ring.component(i).deg(); ++k) {
        if (s > UINT64_MAX / ring.ctx()->q())
            throw Error(Errc::RingTooLarge, "component size exceeds 64 bits");
        s *= ring.ctx()->q();
    }
    return s;
}

// --- uniform treatment of plain and module samples ---------------------------

Sample apply_sigma(const CarlitzRing& ring, const Poly& A, const Sample& s) {
    return {ring.apply(A, s.a), ring.apply(A, s.b)};
}

MSample apply_sigma(const CarlitzRing& ring, const Poly& A, const MSample& s) {
    MSample out;
    out.a.reserve(s.a.size());
    for (const auto& ai : s.a) out.a.push_back(ring.apply(A, ai));
    out.b = ring.apply(A, s.b);
    return out;
}

// a' = a + v (on the targeted coordinate), b' = b + extra
void add_randomizer(const ResidueRing& ring, Sample& s, const Poly& v, const Poly& extra,
                    int /*target*/) {
    s.a = ring.add(s.a, v);
    s.b = ring.add(s.b, extra);
}

void add_randomizer(const ResidueRing& ring, MSample& s, const Poly& v, const Poly& extra,
                    int target) {
    auto& ak = s.a[static_cast<std::size_t>(target)];
    ak = ring.add(ak, v);
    s.b = ring.add(s.b, extra);
}

template <typename S, typename DistT>
std::vector<std::pair<Poly, std::uint64_t>> run_candidates(
    const std::function<S(Rng&)>& oracle, const CarlitzPtr& ring, int i0, const DistT& dist,
    int m, int target, Rng& rng, std::uint64_t* samples_out) {
    const auto& base = *ring->base();
    std::uint64_t cand_count = component_size(base, i0);
    double mid = 0.5 * (dist.pi_structured + dist.pi_uniform) * m;
    bool up = dist.pi_structured >= dist.pi_uniform;

    std::vector<std::pair<Poly, std::uint64_t>> accepted;
    for (std::uint64_t code = 0; code < cand_count; ++code) {
        Poly g_res = Poly::from_code(base.ctx(), Var::X, code);
        Poly g_full = embed_component(base, i0, g_res);
        std::function<S(Rng&)> transformed = [&](Rng& r) {
            S s = oracle(r);
            if (samples_out) ++*samples_out;
            Poly v = embed_component(base, i0, uniform_component_residue(base, i0, r));
            Poly h = low_hybrid_mask(base, i0, r);
            Poly extra = base.add(h, base.mul(v, g_full));
            add_randomizer(base, s, v, extra, target);
            return s;
        };
        Rng cand_rng = rng.split(code);
        std::uint64_t count = 0;
        for (int vote = 0; vote < m; ++vote)
            count += static_cast<std::uint64_t>(dist.vote(transformed, cand_rng));
        bool accept = up ? (static_cast<double>(count) > mid)
                         : (static_cast<double>(count) < mid);
        if (accept) accepted.emplace_back(std::move(g_res), count);
    }
    return accepted;
}

template <typename S, typename DistT>
Poly gas_generic(const std::function<S(Rng&)>& oracle, const CarlitzPtr& ring, int i0,
                 const DistT& dist, const ReductionConfig& cfg, Rng& rng, int target,
                 std::uint64_t* votes_out, std::uint64_t* samples_out) {
    double delta = cfg.delta > 0 ? cfg.delta : dist.declared_advantage();
    int m = cfg.m > 0 ? (cfg.m | 1) : repetitions(delta, cfg.mu);

    auto accepted = run_candidates<S>(oracle, ring, i0, dist, m, target, rng, samples_out);
    if (accepted.size() > 1) {
        // one retry with the repetition count doubled
        Rng retry = rng.split(0x52455452u);
        accepted = run_candidates<S>(oracle, ring, i0, dist, 2 * m + 1, target, retry,
                                     samples_out);
    }
    if (accepted.empty())
        throw Error(Errc::NoGuessAccepted, "no candidate passed the majority vote");
    if (accepted.size() > 1)
        throw Error(Errc::MultipleGuessesAccepted,
                    std::to_string(accepted.size()) + " candidates accepted");
    if (votes_out) *votes_out = accepted[0].second;
    return accepted[0].first;
}

// find a unit transporting component j to component i0
const Poly& transport_unit(const CarlitzRing& ring, int j, int i0) {
    for (const auto& A : ring.galois_group())
        if (ring.prime_permutation(A)[static_cast<std::size_t>(j)] == i0) return A;
    throw Error(Errc::InvalidParameters, "no unit maps the component (non-transitive?)");
}

template <typename S, typename SolverT>
ReductionReport recover_generic(const std::function<S(Rng&)>& oracle, const CarlitzPtr& ring,
                                int i0, const SolverT& solver, Rng& rng) {
    auto start = std::chrono::steady_clock::now();
    const auto& base = *ring->base();
    ReductionReport report;
    report.i0_found = i0;
    report.votes.assign(static_cast<std::size_t>(base.r()), 0);

    std::vector<Poly> residues;
    for (int j = 0; j < base.r(); ++j) {
        const Poly& A = transport_unit(*ring, j, i0);
        std::function<S(Rng&)> transported = [&](Rng& r) { return apply_sigma(*ring, A, oracle(r)); };
        Rng comp_rng = rng.split(static_cast<std::uint64_t>(j));
        Poly res_at_i0 = solver(transported, i0, comp_rng,
                                &report.votes[static_cast<std::size_t>(j)],
                                &report.samples_used);
        Poly pulled = ring->apply(ring->unit_inverse(A), embed_component(base, i0, res_at_i0));
        residues.push_back(base.crt_split(pulled)[static_cast<std::size_t>(j)]);
        report.per_prime.push_back({j, residues.back(), A});
    }
    report.recovered_secret = base.crt_combine(residues);
    report.wall_time_sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

double mean_noise_weight(const NoiseModel& noise, Rng& rng, int draws = 256) {
    double total = 0;
    for (int i = 0; i < draws; ++i) total += noise.ring->weight(noise.sample(rng));
    return total / draws;
}

}  // namespace

Sample randomize_secret(const ResidueRing& ring, const Sample& s, const Poly& mask) {
    return {s.a, ring.add(s.b, ring.mul(s.a, mask))};
}

Sample hybridize(const ResidueRing& ring, const Sample& s, int i, Rng& rng) {
    if (i == 0) return s;
    return {s.a, ring.add(s.b, low_hybrid_mask(ring, i, rng))};
}

int repetitions(double delta, double mu) {
    if (!(delta > 0 && delta <= 0.5) || !(mu > 0 && mu < 1))
        throw Error(Errc::InvalidParameters, "need 0 < delta <= 1/2 and 0 < mu < 1");
    double bound = std::log(1.0 / mu) / (2.0 * delta * delta);
    int m = static_cast<int>(std::ceil(bound));
    if (m < 1) m = 1;
    return m | 1;
}

Poly guess_and_search(const SampleSource& oracle, const CarlitzPtr& ring, int i0,
                      const Distinguisher& dist, const ReductionConfig& cfg, Rng& rng,
                      std::uint64_t* votes_out, std::uint64_t* samples_out) {
    return gas_generic<Sample>(oracle, ring, i0, dist, cfg, rng, 0, votes_out, samples_out);
}

ReductionReport galois_recover(const SampleSource& oracle, const CarlitzPtr& ring, int i0,
                               const ComponentSolver& solver, Rng& rng) {
    return recover_generic<Sample>(
        oracle, ring, i0,
        [&](const SampleSource& src, int i, Rng& r, std::uint64_t* votes, std::uint64_t* samples) {
            return solver(src, i, r, votes, samples);
        },
        rng);
}

ReductionReport full_reduction(const SampleSource& oracle, const CarlitzPtr& ring,
                               const NoiseModel& noise, const DistinguisherFactory& factory,
                               const ReductionConfig& cfg, Rng& rng) {
    auto start = std::chrono::steady_clock::now();
    const auto& base = *ring->base();

    Poly mask = base.uniform(rng);
    std::atomic<std::uint64_t> drawn{0};
    SampleSource masked = [&](Rng& r) {
        if (drawn.fetch_add(1) + 1 > cfg.max_samples)
            throw Error(Errc::SecretNotFound, "sample budget exhausted");
        return randomize_secret(base, oracle(r), mask);
    };

    Rng tau_rng = rng.split(0x7a75);
    double w_noise = mean_noise_weight(noise, tau_rng);
    double w_unif =
        static_cast<double>(base.n()) * (1.0 - 1.0 / static_cast<double>(base.ctx()->q()));
    double tau = 0.5 * (w_noise + w_unif);

    int r = base.r();
    auto try_boundary = [&](int i0) -> std::optional<ReductionReport> {
        Distinguisher dist = factory(i0, mask);
        ComponentSolver solver = [&](const SampleSource& src, int i, Rng& rr,
                                     std::uint64_t* votes, std::uint64_t* samples) {
            return guess_and_search(src, ring, i, dist, cfg, rr, votes, samples);
        };
        ReductionReport rep;
        try {
            Rng work = rng.split(1000 + static_cast<std::uint64_t>(i0));
            rep = galois_recover(masked, ring, i0, solver, work);
        } catch (const Error& e) {
            if (e.code() == Errc::NoGuessAccepted || e.code() == Errc::MultipleGuessesAccepted)
                return std::nullopt;
            throw;
        }
        // validate against fresh samples: residual weight below the midpoint
        Rng vrng = rng.split(2000 + static_cast<std::uint64_t>(i0));
        double total = 0;
        for (int k = 0; k < cfg.validation_samples; ++k) {
            Sample s = masked(vrng);
            total += base.weight(base.sub(s.b, base.mul(s.a, rep.recovered_secret)));
        }
        if (total / cfg.validation_samples > tau) return std::nullopt;
        return rep;
    };

    std::optional<ReductionReport> winner;
    if (cfg.parallelism <= 1 || r == 1) {
        for (int i0 = 0; i0 < r && !winner; ++i0) winner = try_boundary(i0);
    } else {
        std::vector<std::optional<ReductionReport>> results(static_cast<std::size_t>(r));
        std::atomic<int> next{0};
        auto worker = [&]() {
            for (int i0 = next.fetch_add(1); i0 < r; i0 = next.fetch_add(1)) {
                try {
                    results[static_cast<std::size_t>(i0)] = try_boundary(i0);
                } catch (const Error&) {
                    // budget exhaustion inside a worker: leave the slot empty
                }
            }
        };
        int nworkers = std::min(cfg.parallelism, r);
        std::vector<std::thread> pool;
        for (int w = 0; w < nworkers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        for (auto& res : results)
            if (res) {
                winner = std::move(res);
                break;
            }
    }
    if (!winner) throw Error(Errc::SecretNotFound, "no boundary produced a validated secret");

    ReductionReport report = std::move(*winner);
    report.recovered_secret = base.sub(report.recovered_secret, mask);
    auto split = base.crt_split(report.recovered_secret);
    for (auto& pp : report.per_prime) pp.residue = split[static_cast<std::size_t>(pp.component)];
    report.samples_used = drawn.load();
    report.wall_time_sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

ModuleReport module_reduction(const MSampleSource& oracle, const CarlitzPtr& ring, int d,
                              const NoiseModel& noise, const MDistinguisherFactory& factory,
                              const ReductionConfig& cfg, Rng& rng) {
    if (d < 1) throw Error(Errc::InvalidParameters, "module rank must be >= 1");
    auto start = std::chrono::steady_clock::now();
    const auto& base = *ring->base();

    std::vector<Poly> masks;
    for (int k = 0; k < d; ++k) masks.push_back(base.uniform(rng));

    std::atomic<std::uint64_t> drawn{0};
    MSampleSource masked = [&](Rng& r) {
        if (drawn.fetch_add(1) + 1 > cfg.max_samples)
            throw Error(Errc::SecretNotFound, "sample budget exhausted");
        MSample s = oracle(r);
        if (s.a.size() != static_cast<std::size_t>(d))
            throw Error(Errc::InvalidParameters, "oracle rank mismatch");
        for (int k = 0; k < d; ++k)
            s.b = base.add(s.b, base.mul(s.a[static_cast<std::size_t>(k)],
                                         masks[static_cast<std::size_t>(k)]));
        return s;
    };

    int r = base.r();
    ModuleReport out;
    for (int k = 0; k < d; ++k) {
        std::optional<ReductionReport> got;
        for (int i0 = 0; i0 < r && !got; ++i0) {
            MDistinguisher dist = factory(i0, masks, k);
            auto solver = [&](const MSampleSource& src, int i, Rng& rr, std::uint64_t* votes,
                              std::uint64_t* samples) {
                return gas_generic<MSample>(src, ring, i, dist, cfg, rr, k, votes, samples);
            };
            try {
                Rng work = rng.split(1000 + static_cast<std::uint64_t>(i0) *
                                                static_cast<std::uint64_t>(d) +
                                     static_cast<std::uint64_t>(k));
                got = recover_generic<MSample>(masked, ring, i0, solver, work);
            } catch (const Error& e) {
                if (e.code() != Errc::NoGuessAccepted && e.code() != Errc::MultipleGuessesAccepted)
                    throw;
            }
        }
        if (!got) throw Error(Errc::SecretNotFound, "module coordinate not recovered");
        got->recovered_secret =
            base.sub(got->recovered_secret, masks[static_cast<std::size_t>(k)]);
        auto split = base.crt_split(got->recovered_secret);
        for (auto& pp : got->per_prime)
            pp.residue = split[static_cast<std::size_t>(pp.component)];
        out.secrets.push_back(got->recovered_secret);
        out.per_secret.push_back(std::move(*got));
    }

    // joint validation against fresh samples
    Rng tau_rng = rng.split(0x7a75);
    double w_noise = mean_noise_weight(noise, tau_rng);
    double w_unif =
        static_cast<double>(base.n()) * (1.0 - 1.0 / static_cast<double>(base.ctx()->q()));
    double tau = 0.5 * (w_noise + w_unif);
    Rng vrng = rng.split(0x76616c);
    double total = 0;
    for (int i = 0; i < cfg.validation_samples; ++i) {
        MSample s = oracle(vrng);
        Poly res = s.b;
        for (int k = 0; k < d; ++k)
            res = base.sub(res, base.mul(s.a[static_cast<std::size_t>(k)],
                                         out.secrets[static_cast<std::size_t>(k)]));
        total += base.weight(res);
    }
    if (total / cfg.validation_samples > tau)
        throw Error(Errc::SecretNotFound, "joint validation failed");

    out.samples_used = drawn.load();
    out.wall_time_sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

// --- reference distinguishers -------------------------------------------------

namespace {

struct ZeroCountRule {
    int boundary;
    std::uint64_t k;
    double midpoint;  // acceptance threshold on the zero count
};

// Calibrate the vote's acceptance rates on synthetic H_boundary /
// H_{boundary+1} streams.
template <typename DistT, typename MakeStructured, typename MakeUniformized>
void calibrate(DistT& dist, const MakeStructured& structured, const MakeUniformized& uniformized,
               Rng& rng, int trials = 400) {
    Rng r1 = rng.split(1), r0 = rng.split(2);
    int s_hits = 0, u_hits = 0;
    for (int i = 0; i < trials; ++i) {
        s_hits += dist.vote(structured, r1);
        u_hits += dist.vote(uniformized, r0);
    }
    dist.pi_structured = static_cast<double>(s_hits) / trials;
    dist.pi_uniform = static_cast<double>(u_hits) / trials;
}

double zero_rate_of_noise(const ResidueRing& base, const NoiseModel& noise, int boundary,
                          Rng& rng, int draws = 2000) {
    int zeros = 0;
    for (int i = 0; i < draws; ++i)
        if ((noise.sample(rng) % base.component(boundary)).is_zero()) ++zeros;
    return static_cast<double>(zeros) / draws;
}

}  // namespace

namespace {

// Distinct boundary residues of the Galois conjugates of `secret`. Inside
// galois_recover the stream's secret is a conjugate of the planted one, so
// the vote scans all of them and keeps the best zero count.
std::vector<Poly> conjugate_residues(const CarlitzRing& ring, const Poly& secret, int boundary) {
    const Poly& comp = ring.base()->component(boundary);
    std::vector<Poly> out;
    for (const auto& A : ring.galois_group()) {
        Poly res = ring.apply(A, secret) % comp;
        if (std::find(out.begin(), out.end(), res) == out.end()) out.push_back(res);
    }
    return out;
}

}  // namespace

Distinguisher planted_distinguisher(const CarlitzPtr& ring, const Poly& secret, int boundary,
                                    const NoiseModel& noise, std::uint64_t samples_per_vote,
                                    Rng& calibration_rng) {
    const auto& base = ring->base();
    double pi_noise = zero_rate_of_noise(*base, noise, boundary, calibration_rng);
    double pi_unif = 1.0 / static_cast<double>(component_size(*base, boundary));
    double midpoint = 0.5 * (pi_noise + pi_unif) * static_cast<double>(samples_per_vote);
    const Poly comp = base->component(boundary);
    std::vector<Poly> conj = conjugate_residues(*ring, secret, boundary);

    Distinguisher dist;
    dist.queries_per_vote = samples_per_vote;
    dist.vote = [conj, comp, samples_per_vote, midpoint](const SampleSource& src, Rng& rng) {
        std::vector<std::uint64_t> zeros(conj.size(), 0);
        for (std::uint64_t i = 0; i < samples_per_vote; ++i) {
            Sample s = src(rng);
            Poly a = s.a % comp, b = s.b % comp;
            for (std::size_t c = 0; c < conj.size(); ++c)
                if (((b - a * conj[c]) % comp).is_zero()) ++zeros[c];
        }
        std::uint64_t best = *std::max_element(zeros.begin(), zeros.end());
        return static_cast<double>(best) > midpoint ? 1 : 0;
    };

    SampleSource structured = [&](Rng& r) {
        return hybridize(*base, ffdp_sample(secret, noise, r), boundary, r);
    };
    SampleSource uniformized = [&](Rng& r) {
        return hybridize(*base, ffdp_sample(secret, noise, r), boundary + 1, r);
    };
    calibrate(dist, structured, uniformized, calibration_rng);
    return dist;
}

MDistinguisher planted_m_distinguisher(const CarlitzPtr& ring, const std::vector<Poly>& secrets,
                                       int boundary, const NoiseModel& noise,
                                       std::uint64_t samples_per_vote, Rng& calibration_rng) {
    const auto& base = ring->base();
    double pi_noise = zero_rate_of_noise(*base, noise, boundary, calibration_rng);
    double pi_unif = 1.0 / static_cast<double>(component_size(*base, boundary));
    double midpoint = 0.5 * (pi_noise + pi_unif) * static_cast<double>(samples_per_vote);
    const Poly comp = base->component(boundary);

    // conjugate tuples: the whole secret vector conjugated by the same unit
    std::vector<std::vector<Poly>> conj;
    for (const auto& A : ring->galois_group()) {
        std::vector<Poly> tuple;
        tuple.reserve(secrets.size());
        for (const auto& s : secrets) tuple.push_back(ring->apply(A, s) % comp);
        if (std::find(conj.begin(), conj.end(), tuple) == conj.end())
            conj.push_back(std::move(tuple));
    }

    MDistinguisher dist;
    dist.queries_per_vote = samples_per_vote;
    dist.vote = [conj, comp, samples_per_vote, midpoint](const MSampleSource& src, Rng& rng) {
        std::vector<std::uint64_t> zeros(conj.size(), 0);
        for (std::uint64_t i = 0; i < samples_per_vote; ++i) {
            MSample s = src(rng);
            std::vector<Poly> a;
            a.reserve(s.a.size());
            for (const auto& ai : s.a) a.push_back(ai % comp);
            Poly b = s.b % comp;
            for (std::size_t c = 0; c < conj.size(); ++c) {
                Poly res = b;
                for (std::size_t k = 0; k < a.size(); ++k) res = res - a[k] * conj[c][k];
                if ((res % comp).is_zero()) ++zeros[c];
            }
        }
        std::uint64_t best = *std::max_element(zeros.begin(), zeros.end());
        return static_cast<double>(best) > midpoint ? 1 : 0;
    };

    MSampleSource structured = [&](Rng& r) {
        MSample s = mffdp_sample(secrets, noise, r);
        s.b = base->add(s.b, low_hybrid_mask(*base, boundary, r));
        return s;
    };
    MSampleSource uniformized = [&](Rng& r) {
        MSample s = mffdp_sample(secrets, noise, r);
        s.b = base->add(s.b, low_hybrid_mask(*base, boundary + 1, r));
        return s;
    };
    calibrate(dist, structured, uniformized, calibration_rng);
    return dist;
}

Distinguisher ml_distinguisher(const CarlitzPtr& ring, const NoiseModel& noise, int boundary,
                               std::uint64_t samples_per_vote, Rng& calibration_rng,
                               std::uint64_t bound) {
    const auto& base = ring->base();
    std::uint64_t csize = component_size(*base, boundary);
    if (csize > bound)
        throw Error(Errc::RingTooLarge, "component too large for exhaustive likelihood");

    // residual law of the noise on the boundary component, with add-one smoothing
    std::vector<double> logp(csize);
    {
        std::vector<std::uint64_t> counts(csize, 0);
        const int draws = 20000;
        Rng prng = calibration_rng.split(0x706d66);
        for (int i = 0; i < draws; ++i)
            counts[(noise.sample(prng) % base->component(boundary)).code()]++;
        for (std::uint64_t c = 0; c < csize; ++c)
            logp[c] = std::log((static_cast<double>(counts[c]) + 1.0) /
                               (draws + static_cast<double>(csize)));
    }

    const Poly comp = base->component(boundary);
    double ll_uniform_per_sample = -std::log(static_cast<double>(csize));
    double occam = std::log(static_cast<double>(csize));

    Distinguisher dist;
    dist.queries_per_vote = samples_per_vote;
    RingPtr base_copy = base;
    FieldPtr F = base->ctx();
    dist.vote = [base_copy, F, comp, csize, logp, ll_uniform_per_sample, occam,
                 samples_per_vote](const SampleSource& src, Rng& rng) {
        std::vector<Poly> as, bs;
        as.reserve(samples_per_vote);
        bs.reserve(samples_per_vote);
        for (std::uint64_t i = 0; i < samples_per_vote; ++i) {
            Sample s = src(rng);
            as.push_back(s.a % comp);
            bs.push_back(s.b % comp);
        }
        double best = -1e300;
        for (std::uint64_t code = 0; code < csize; ++code) {
            Poly cand = Poly::from_code(F, Var::X, code);
            double ll = 0;
            for (std::size_t i = 0; i < as.size(); ++i) {
                Poly res = (bs[i] - as[i] * cand) % comp;
                ll += logp[res.code()];
            }
            if (ll > best) best = ll;
        }
        double ll_unif = ll_uniform_per_sample * static_cast<double>(samples_per_vote);
        return best > ll_unif + occam ? 1 : 0;
    };

    // calibration with a random (irrelevant, the test is secret-agnostic) secret
    Poly cal_secret = base->uniform(calibration_rng);
    SampleSource structured = [&](Rng& r) {
        return hybridize(*base, ffdp_sample(cal_secret, noise, r), boundary, r);
    };
    SampleSource uniformized = [&](Rng& r) {
        return hybridize(*base, ffdp_sample(cal_secret, noise, r), boundary + 1, r);
    };
    calibrate(dist, structured, uniformized, calibration_rng);
    return dist;
}

AdvantageEstimate estimate_advantage(const Distinguisher& dist, const SampleSource& dist0,
                                     const SampleSource& dist1, int trials, Rng& rng) {
    if (trials < 100) throw Error(Errc::InvalidParameters, "need at least 100 trials");
    Rng r0 = rng.split(0), r1 = rng.split(1);
    int hits0 = 0, hits1 = 0;
    for (int i = 0; i < trials; ++i) {
        hits0 += dist.vote(dist0, r0);
        hits1 += dist.vote(dist1, r1);
    }
    double p0 = static_cast<double>(hits0) / trials;
    double p1 = static_cast<double>(hits1) / trials;
    double adv = 0.5 * (p1 - p0);
    double se = 0.5 * std::sqrt(p0 * (1 - p0) / trials + p1 * (1 - p1) / trials);
    return {adv, adv - 1.96 * se, adv + 1.96 * se};
}

}  // namespace ffdp
