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

// Bitcoin proof-of-work parameters mapped onto Grover search geometry and
// per-iteration oracle cost.

#include "qmine/hash_ledger.hpp"
#include "qmine/lognum.hpp"

#include <cstdint>
#include <limits>
#include <optional>

namespace qmine {

/// log2 of the difficulty-1 target T1 = 2^208 (2^16 - 1).
double log2_difficulty_one_target();

struct DifficultySpec {
    double difficulty = 1.0;
    /// p = (T1 / 2^256) / D.
    LogQuantity target_fraction;
    /// b = -log2 p.
    double bits = 0.0;
};

/// Throws InvalidInput for D <= 0 or non-finite D.
DifficultySpec difficulty_to_bits(double difficulty);

/// Search register of n qubits with M marked states.
class SearchSpec {
public:
    /// Requires 1 <= n <= 256 and 1 <= M <= 2^n.
    SearchSpec(int register_bits, const LogQuantity& marked);

    /// M = clamp(2^(n-b), 1, 2^n): difficulty bits supplied directly.
    static SearchSpec from_bits(int register_bits, double difficulty_bits);

    int register_bits() const { return n_; }
    const LogQuantity& marked() const { return marked_; }
    /// log2(M/N); sin(theta) = 2^(log2_ratio/2).
    double log2_ratio() const { return log2_ratio_; }
    double log2_sin_theta() const { return 0.5 * log2_ratio_; }
    double theta() const { return theta_; }

private:
    int n_;
    LogQuantity marked_;
    double log2_ratio_;
    double theta_;
};

/// M(n, D) = max{1, min{2^n, (T1/D) 2^(n-256)}}.
LogQuantity marked_states(int register_bits, double difficulty);

/// k_hash * beta with k_hash = 1 + alpha (1 + ceil(log2 n_tx)).
double hash_work_factor(int alpha_merkle, std::int64_t n_tx, double beta_midstate);

struct OracleSpec {
    HashPipeline pipeline = HashPipeline::header();
    int alpha_merkle = 0;
    std::int64_t n_tx = 1;
    double beta_midstate = 1.0;
    int register_bits = 256;
    AdderModel adder = AdderModel::cdkm_baseline;
    ToffoliSynthesis synthesis = ToffoliSynthesis::relative_phase;
    /// Add comparator and diffusion T-depth to the per-iteration depth.
    bool depth_extras = false;
    /// Constant oracle-call multiplier standing in for fixed-point amplitude
    /// amplification. 1 means plain Grover.
    double fixed_point_factor = 1.0;

    /// Throws InvalidInput when inconsistent (beta = 1/2 with alpha = 1, ...).
    void validate() const;
};

/// Per-iteration T-count split into its three sources.
struct OracleTCount {
    std::int64_t hash = 0;        // compute + uncompute
    std::int64_t comparator = 0;  // both directions
    std::int64_t diffusion = 0;
    std::int64_t total() const { return hash + comparator + diffusion; }
};

inline constexpr std::int64_t kComparatorTPerChunk = 128;
inline constexpr int kComparatorChunkBits = 32;

/// Number of 32-bit slices in a comparator over output_bits.
int comparator_chunks(int output_bits);
/// 8 (n - 2), clamped at zero for n < 2.
std::int64_t diffusion_tcount(int register_bits);

OracleTCount oracle_tcount_breakdown(const OracleSpec& spec);
std::int64_t oracle_tcount(const OracleSpec& spec);
/// 2 k beta times forward-hash T-depth, plus comparator and diffusion depth
/// when spec.depth_extras is set.
std::int64_t oracle_tdepth(const OracleSpec& spec);

/// r = max{1, round_half_even(pi/(4 theta) - 1/2)}. Exact integer while the
/// value fits in 2^53, log domain beyond.
LogQuantity grover_iterations(const SearchSpec& search);

/// min{r_ideal, floor(t_cap / t_iter)}; zero marks an infeasible cap.
/// t_cap may be +inf (uncapped).
LogQuantity capped_iterations(const LogQuantity& r_ideal, double t_cap_seconds, double t_iter_seconds);

inline constexpr double kSmallAngleThreshold = 1e-4;

/// sin^2((2 r_cap + 1) theta), or nullopt when r_cap is zero (infeasible).
std::optional<LogQuantity> single_machine_success(const LogQuantity& r_cap, const SearchSpec& search);

struct GroverPlan {
    SearchSpec search;
    LogQuantity r_ideal{};
    LogQuantity r_cap{};
    double t_iter_seconds = 0.0;
    OracleTCount oracle_t{};
    std::int64_t T_oracle = 0;
    std::int64_t T_depth_iter = 0;
    /// r_cap * T_oracle * fixed-point factor.
    LogQuantity T_tot{};
    /// r_cap * T_depth_iter * fixed-point factor, in code cycles.
    LogQuantity depth_cycles{};
    /// Unset when infeasible.
    std::optional<LogQuantity> P1{};
    bool feasible = false;
    double fixed_point_factor = 1.0;
};

/// Full chain b -> M -> theta -> r -> r_cap -> P1 for one oracle and clock.
GroverPlan plan_grover(const OracleSpec& oracle, const SearchSpec& search, double t_cap_seconds,
                       double cycle_time_seconds);

}  // namespace qmine
