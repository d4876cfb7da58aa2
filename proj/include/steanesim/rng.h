// Copyright 2026 The steanesim Authors
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

#ifndef STEANESIM_RNG_H
#define STEANESIM_RNG_H

#include <cstdint>
#include <initializer_list>
#include <random>

namespace steanesim {

std::uint64_t splitmix64(std::uint64_t x);

/// Seeded pseudo-random stream.
///
/// Streams are derived from an experiment seed and a list of counters, so a
/// trajectory's randomness depends only on (seed, counters) and never on the
/// order in which work items are scheduled.
class Rng {
   public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    static Rng for_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> counters);

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n);

    std::uint64_t next() { return engine_(); }

   private:
    std::mt19937_64 engine_;
};

}  // namespace steanesim

#endif
