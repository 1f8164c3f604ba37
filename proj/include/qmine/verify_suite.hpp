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

// Self-check suites run by the `verify` subcommand.

#include <cstdint>
#include <string>
#include <vector>

namespace qmine {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Standard SHA-256, double-SHA-256, RIPEMD-160 and hash160 vectors.
std::vector<CheckResult> verify_hash_vectors();

/// Closed-form success against the dense simulator for n <= max_bits over
/// M in {1, 2, 4, N/4, N/2, N} and r in [0, 2 r_opt].
std::vector<CheckResult> verify_grover_closed_form(int max_bits = 12, double tolerance = 1e-9);

/// Monte Carlo hit rate within 3 sigma of 2^-b for each b.
std::vector<CheckResult> verify_monte_carlo(const std::vector<int>& bits, std::int64_t samples, std::uint64_t seed);

}  // namespace qmine
