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

#ifndef FFDP_RNG_HPP
#define FFDP_RNG_HPP

#include <cstdint>

namespace ffdp {

/// Counter-based generator in SplitMix64 output mode: the i-th output is
/// mix(seed + i*GAMMA). Seedable, and splittable into independent streams
/// by hashing a stream id into a fresh seed. One instance per worker.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = seed_ + (++counter_) * 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Derive an independent stream. Safe to call at any point; the child
    /// depends only on (seed, stream), not on this generator's position.
    Rng split(std::uint64_t stream) const {
        std::uint64_t z = seed_ ^ (0x2545f4914f6cdd1dULL * (stream + 1));
        z = (z ^ (z >> 33)) * 0xff51afd7ed558ccdULL;
        z = (z ^ (z >> 33)) * 0xc4ceb9fe1a85ec53ULL;
        return Rng(z ^ (z >> 33));
    }

    /// Uniform in [0, n), unbiased by rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    /// Uniform in [0, 1) with 53 bits of precision.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_double() < p; }

   private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace ffdp

#endif
