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

#include "qmine/monte_carlo.hpp"

#include "qmine/errors.hpp"
#include "qmine/parallel.hpp"
#include "qmine/sha256.hpp"

#include <array>
#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace qmine {

namespace {

constexpr std::int64_t kChunkSamples = 1 << 16;

}  // namespace

bool has_leading_zero_bits(const std::uint8_t* digest32, int bits)
{
    int i = 0;
    for (; bits >= 8; bits -= 8, ++i)
        if (digest32[i] != 0)
            return false;
    return bits == 0 || (digest32[i] >> (8 - bits)) == 0;
}

HitRateEstimate monte_carlo_hit_rate(int bits, std::int64_t samples, std::uint64_t seed, unsigned threads)
{
    if (bits < 0)
        throw InvalidInput("difficulty bits must be nonnegative");
    if (bits > kMaxSampledBits)
        throw CapacityError("b = " + std::to_string(bits) + " needs impractically many samples (limit "
                            + std::to_string(kMaxSampledBits) + ")");
    if (samples < kMinSamples)
        throw InvalidInput("Monte Carlo needs at least 10^4 samples");

    HitRateEstimate out;
    out.samples = samples;
    if (bits == 0) {
        out.hits = samples;
        out.estimate = 1.0;
        return out;
    }

    const std::size_t chunks = std::size_t((samples + kChunkSamples - 1) / kChunkSamples);
    std::vector<std::int64_t> hits(chunks, 0);
    parallel_for(
        chunks,
        [&](std::size_t c) {
            std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(c),
                              std::uint32_t(std::uint64_t(c) >> 32)};
            std::mt19937_64 rng(seq);
            const std::int64_t begin = std::int64_t(c) * kChunkSamples;
            const std::int64_t n = std::min(kChunkSamples, samples - begin);
            std::array<std::uint8_t, 80> header{};
            std::int64_t local = 0;
            for (std::int64_t s = 0; s < n; ++s) {
                for (int w = 0; w < 10; ++w) {
                    const std::uint64_t v = rng();
                    for (int k = 0; k < 8; ++k)
                        header[8 * w + k] = std::uint8_t(v >> (8 * k));
                }
                const Sha256Digest d = double_sha256(header);
                if (has_leading_zero_bits(d.data(), bits))
                    ++local;
            }
            hits[c] = local;
        },
        threads);

    for (auto h : hits)
        out.hits += h;
    out.estimate = double(out.hits) / double(samples);
    out.std_error = std::sqrt(out.estimate * (1.0 - out.estimate) / double(samples));
    return out;
}

}  // namespace qmine
