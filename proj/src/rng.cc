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

#include "steanesim/rng.h"

#include <stdexcept>

namespace steanesim {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

Rng Rng::for_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> counters) {
    std::uint64_t h = splitmix64(seed);
    std::uint64_t salt = 0x632BE59BD9B4E019ULL;
    for (std::uint64_t c : counters) {
        h = splitmix64(h ^ splitmix64(c + salt));
        salt += 0x9E3779B97F4A7C15ULL;
    }
    return Rng(h);
}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("Rng::below needs a positive bound");
    }
    // Rejection sampling keeps the result unbiased and platform independent.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % n;
}

}  // namespace steanesim
