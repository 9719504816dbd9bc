// Copyright 2026 The qproc Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Seedable, platform-portable random streams.
 *
 * Each stream is a std::mt19937_64 whose seed is derived from
 * (master seed, experiment index, trial index) by chained splitmix64
 * finalization. Uniform doubles take the top 53 bits of one draw, so the
 * same seed gives the same numbers on every conforming platform.
 */
#pragma once

#include <cstdint>
#include <random>

namespace qproc {

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    /// Stream for trial `trial` of experiment `experiment` under `master`.
    static RngStream derive(std::uint64_t master, std::uint64_t experiment, std::uint64_t trial);

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform in [0, 1).
    double uniform();
    /// Standard normal (Box-Muller, one value per call).
    double normal();

  private:
    std::mt19937_64 engine_;
};

} // namespace qproc
