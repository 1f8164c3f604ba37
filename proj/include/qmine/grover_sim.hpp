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

// Dense state-vector reference for amplitude amplification on small
// registers.

#include <cstdint>
#include <vector>

namespace qmine {

inline constexpr int kMaxSimulatedQubits = 14;

struct MarkedSet {
    int register_bits = 0;
    std::vector<std::uint32_t> indices;

    /// Nonempty, distinct, in range, n <= 14. Throws InvalidInput or
    /// CapacityError.
    void validate() const;
    /// The first m indices 0..m-1.
    static MarkedSet first(int register_bits, std::uint32_t m);
};

struct GroverTrace {
    /// Marked-subspace probability after 0..r iterations.
    std::vector<double> success;
    /// Total probability after 0..r iterations; 1 up to rounding.
    std::vector<double> norm;
};

/// Probability mass on the marked set after r rounds of diffusion after
/// phase oracle, starting from the uniform superposition.
double grover_simulate(const MarkedSet& marked, int iterations);
GroverTrace grover_trace(const MarkedSet& marked, int iterations);

/// sin^2((2r + 1) asin(sqrt(M/N))) in plain doubles.
double grover_closed_form(int register_bits, std::uint64_t marked_count, std::int64_t iterations);

}  // namespace qmine
