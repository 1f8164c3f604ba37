// Copyright 2026 The qmine Authors.
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

#include <cstdint>

namespace qmine {

inline constexpr int kMaxSampledBits = 24;
inline constexpr std::int64_t kMinSamples = 10000;
inline constexpr std::uint64_t kDefaultSeed = 20250101;

struct HitRateEstimate {
    std::int64_t samples = 0;
    std::int64_t hits = 0;
    double estimate = 0.0;
    /// Binomial standard error sqrt(p(1-p)/n) at the estimate.
    double std_error = 0.0;
};

/// True when the digest, read as a big-endian integer, is below 2^(256-b).
bool has_leading_zero_bits(const std::uint8_t* digest32, int bits);

/// Fraction of random 80-byte headers whose double-SHA-256 has b leading
/// zero bits. Samples are split into fixed chunks, each with its own
/// generator seeded from (seed, chunk), so the result does not depend on
/// thread count. Throws CapacityError for b > 24 and InvalidInput for
/// fewer than 10^4 samples.
HitRateEstimate monte_carlo_hit_rate(int bits, std::int64_t samples, std::uint64_t seed = kDefaultSeed,
                                     unsigned threads = 0);

}  // namespace qmine
