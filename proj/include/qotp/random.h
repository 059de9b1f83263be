// Copyright 2026 The qotp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QOTP_RANDOM_H
#define QOTP_RANDOM_H

#include <complex>
#include <cstdint>
#include <random>

namespace qotp {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seeded deterministic generator. `split` derives an independent child stream from the seed and
/// a stream id, so work fanned out per trial draws the same numbers however it is scheduled.
class Rng {
   public:
    explicit Rng(uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

    Rng split(uint64_t stream) const { return Rng(splitmix64(seed_ ^ splitmix64(stream + 0x632BE59BD9B4E019ULL))); }

    uint64_t seed() const { return seed_; }
    uint64_t next_u64() { return engine_(); }
    /// Uniform in [0, bound); bound > 0.
    uint64_t below(uint64_t bound) { return std::uniform_int_distribution<uint64_t>(0, bound - 1)(engine_); }
    double normal() { return normal_(engine_); }
    /// Standard complex Gaussian: real and imaginary parts i.i.d. N(0, 1/2).
    std::complex<double> complex_normal() {
        constexpr double kScale = 0.70710678118654752440;
        double re = normal();
        double im = normal();
        return {re * kScale, im * kScale};
    }

   private:
    uint64_t seed_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace qotp

#endif
