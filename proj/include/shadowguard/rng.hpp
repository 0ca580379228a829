// Copyright 2026 The Shadowguard Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <array>
#include <cstdint>

namespace shadowguard {

/**
 * @brief Deterministic pseudo-random generator (xoshiro256++ seeded via
 * splitmix64).
 *
 * The standard library distributions are implementation-defined, so all
 * sampling helpers are implemented here explicitly; a given (seed, call
 * sequence) produces identical draws on every platform. `derive(stream)`
 * yields an independent generator that depends only on the original seed
 * and the stream id, never on how much the parent has been consumed.
 */
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();
    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi);
    /// Uniform integer in [0, bound); bound must be positive.
    std::uint64_t uniform_below(std::uint64_t bound);
    /// Standard normal via Box-Muller (second value cached).
    double gaussian();
    double gaussian(double mean, double stddev);

    Rng derive(std::uint64_t stream) const;

    std::uint64_t seed() const { return seed_; }

  private:
    std::uint64_t seed_;
    std::array<std::uint64_t, 4> state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace shadowguard
