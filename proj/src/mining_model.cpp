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

#include "qmine/mining_model.hpp"

#include "qmine/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

namespace qmine {

namespace {

constexpr double kLog10Of2 = 0.30102999566398119521;
// Largest magnitude where doubles still hold every integer.
constexpr double kExactIntegerLimit = 9007199254740992.0;  // 2^53

}  // namespace

double log2_difficulty_one_target()
{
    // log2(2^208 (2^16 - 1)) = 224 + log2(1 - 2^-16)
    return 224.0 + std::log1p(-std::ldexp(1.0, -16)) / std::numbers::ln2;
}

DifficultySpec difficulty_to_bits(double difficulty)
{
    if (!std::isfinite(difficulty) || difficulty <= 0.0)
        throw InvalidInput("difficulty must be a positive finite number");
    DifficultySpec spec;
    spec.difficulty = difficulty;
    const double log2_p = log2_difficulty_one_target() - 256.0 - std::log2(difficulty);
    spec.target_fraction = LogQuantity::from_log2(log2_p);
    spec.bits = -log2_p;
    return spec;
}

SearchSpec::SearchSpec(int register_bits, const LogQuantity& marked)
    : n_(register_bits), marked_(marked)
{
    if (register_bits < 1 || register_bits > 256)
        throw InvalidInput("register bits must lie in [1, 256], got " + std::to_string(register_bits));
    if (marked.is_zero() || marked.log2() < -1e-9 || marked.log2() > register_bits + 1e-9)
        throw InvalidInput("marked states must satisfy 1 <= M <= 2^n");
    log2_ratio_ = std::clamp(marked.log2() - register_bits, -double(register_bits), 0.0);
    const double sin_theta = std::exp2(0.5 * log2_ratio_);
    theta_ = std::asin(std::min(1.0, sin_theta));
}

SearchSpec SearchSpec::from_bits(int register_bits, double difficulty_bits)
{
    if (!std::isfinite(difficulty_bits))
        throw InvalidInput("difficulty bits must be finite");
    const double log2_m = std::clamp(register_bits - difficulty_bits, 0.0, double(register_bits));
    return SearchSpec(register_bits, LogQuantity::from_log2(log2_m));
}

LogQuantity marked_states(int register_bits, double difficulty)
{
    if (register_bits < 1 || register_bits > 256)
        throw InvalidInput("marked_states: n must lie in [1, 256]");
    if (!std::isfinite(difficulty) || difficulty <= 0.0)
        throw InvalidInput("marked_states: difficulty must be positive");
    const double raw = log2_difficulty_one_target() - std::log2(difficulty) + register_bits - 256.0;
    return LogQuantity::from_log2(std::clamp(raw, 0.0, double(register_bits)));
}

double hash_work_factor(int alpha_merkle, std::int64_t n_tx, double beta_midstate)
{
    if (alpha_merkle != 0 && alpha_merkle != 1)
        throw InvalidInput("alpha_merkle must be 0 or 1");
    if (beta_midstate != 1.0 && beta_midstate != 0.5)
        throw InvalidInput("beta_midstate must be 1 or 1/2");
    if (alpha_merkle == 1 && beta_midstate != 1.0)
        throw InvalidInput("midstate reuse (beta = 1/2) requires alpha_merkle = 0");
    if (alpha_merkle == 1 && n_tx < 1)
        throw InvalidInput("n_tx must be >= 1 when alpha_merkle = 1");
    const int ceil_log2_ntx = alpha_merkle == 1 ? std::bit_width(std::uint64_t(n_tx - 1)) : 0;
    const double k_hash = 1.0 + alpha_merkle * (1.0 + ceil_log2_ntx);
    return k_hash * beta_midstate;
}

void OracleSpec::validate() const
{
    (void)hash_work_factor(alpha_merkle, n_tx, beta_midstate);
    if (register_bits < 1 || register_bits > 256)
        throw InvalidInput("register bits must lie in [1, 256]");
    if (!(fixed_point_factor >= 1.0) || !std::isfinite(fixed_point_factor))
        throw InvalidInput("fixed_point_factor must be a finite value >= 1");
    if (pipeline.kind == PipelineKind::sha256_compression && pipeline.blocks < 1)
        throw InvalidInput("sha256_compression needs blocks >= 1");
}

int comparator_chunks(int output_bits)
{
    return (output_bits + kComparatorChunkBits - 1) / kComparatorChunkBits;
}

std::int64_t diffusion_tcount(int register_bits)
{
    return 8 * std::max<std::int64_t>(0, register_bits - 2);
}

namespace {

// 2 k_hash beta: the number of forward-hash evaluations per iteration
// (compute + uncompute). Always an integer because beta = 1/2 forces k = 1.
std::int64_t hash_passes(const OracleSpec& spec)
{
    const double kb = hash_work_factor(spec.alpha_merkle, spec.n_tx, spec.beta_midstate);
    return std::llround(2.0 * kb);
}

}  // namespace

OracleTCount oracle_tcount_breakdown(const OracleSpec& spec)
{
    spec.validate();
    const GateLedger fwd = pipeline_ledger(spec.pipeline, spec.adder, spec.synthesis);
    OracleTCount t;
    t.hash = hash_passes(spec) * fwd.t_count;
    t.comparator = 2 * kComparatorTPerChunk * comparator_chunks(spec.pipeline.output_bits());
    t.diffusion = diffusion_tcount(spec.register_bits);
    return t;
}

std::int64_t oracle_tcount(const OracleSpec& spec)
{
    return oracle_tcount_breakdown(spec).total();
}

std::int64_t oracle_tdepth(const OracleSpec& spec)
{
    spec.validate();
    const GateLedger fwd = pipeline_ledger(spec.pipeline, spec.adder, spec.synthesis);
    std::int64_t depth = hash_passes(spec) * fwd.t_depth;
    if (spec.depth_extras) {
        const AdderModel cmp_model =
            spec.adder == AdderModel::gidney_scheduled ? AdderModel::gidney_scheduled : AdderModel::cdkm_baseline;
        const std::int64_t chunk_depth = adder_costs(cmp_model, kComparatorChunkBits).t_depth_layers;
        depth += 2 * chunk_depth * comparator_chunks(spec.pipeline.output_bits());
        // Relative-phase Toffoli ladder, compute + uncompute, two T layers
        // per Toffoli.
        depth += 4 * std::max<std::int64_t>(0, spec.register_bits - 2);
    }
    return depth;
}

LogQuantity grover_iterations(const SearchSpec& search)
{
    const double theta = search.theta();
    const double quarter_turns = std::numbers::pi / (4.0 * theta);
    if (quarter_turns < kExactIntegerLimit) {
        // nearbyint honours the default round-half-even mode.
        const double r = std::max(1.0, std::nearbyint(quarter_turns - 0.5));
        return LogQuantity::from_value(r);
    }
    // theta is tiny here, so sin(theta) = theta to double precision.
    return LogQuantity::from_log10(std::log10(std::numbers::pi / 4.0) - search.log2_sin_theta() * kLog10Of2);
}

LogQuantity capped_iterations(const LogQuantity& r_ideal, double t_cap_seconds, double t_iter_seconds)
{
    if (!(t_cap_seconds > 0.0) || !(t_iter_seconds > 0.0) || std::isnan(t_cap_seconds))
        throw InvalidInput("capped_iterations: t_cap and t_iter must be positive");
    if (std::isinf(t_cap_seconds))
        return r_ideal;
    const LogQuantity budget =
        LogQuantity::from_log10(std::log10(t_cap_seconds) - std::log10(t_iter_seconds)).floor();
    if (budget.is_zero())  // fewer than one iteration fits
        return LogQuantity::zero();
    return min(r_ideal, budget);
}

std::optional<LogQuantity> single_machine_success(const LogQuantity& r_cap, const SearchSpec& search)
{
    if (r_cap.is_zero())
        return std::nullopt;
    // log10(2 r + 1)
    double log10_turns = 0.0;
    if (r_cap.log10() < LogQuantity::kExactLog10Limit)
        log10_turns = std::log10(2.0 * r_cap.value() + 1.0);
    else
        log10_turns = r_cap.log10() + std::log10(2.0);

    const double log10_angle = log10_turns + std::log10(search.theta());
    if (log10_angle < std::log10(kSmallAngleThreshold))
        return LogQuantity::from_log10(2.0 * log10_angle);

    const double angle = std::pow(10.0, log10_angle);
    const double s = std::sin(angle);
    const double p = s * s;
    if (p <= 0.0)
        return LogQuantity::from_log10(-330.0);  // exact node of the rotation
    return LogQuantity::from_value(std::min(1.0, p));
}

GroverPlan plan_grover(const OracleSpec& oracle, const SearchSpec& search, double t_cap_seconds,
                       double cycle_time_seconds)
{
    oracle.validate();
    if (!(cycle_time_seconds > 0.0))
        throw InvalidInput("cycle time must be positive");
    if (search.register_bits() != oracle.register_bits)
        throw InvalidInput("search register and oracle register widths differ");

    GroverPlan plan{.search = search};
    plan.fixed_point_factor = oracle.fixed_point_factor;
    plan.oracle_t = oracle_tcount_breakdown(oracle);
    plan.T_oracle = plan.oracle_t.total();
    plan.T_depth_iter = oracle_tdepth(oracle);
    plan.t_iter_seconds = double(plan.T_depth_iter) * cycle_time_seconds * oracle.fixed_point_factor;
    plan.r_ideal = grover_iterations(search);
    plan.r_cap = capped_iterations(plan.r_ideal, t_cap_seconds, plan.t_iter_seconds);
    plan.feasible = !plan.r_cap.is_zero();

    const LogQuantity factor = LogQuantity::from_value(oracle.fixed_point_factor);
    plan.T_tot = plan.r_cap * LogQuantity::from_value(double(plan.T_oracle)) * factor;
    plan.depth_cycles = plan.r_cap * LogQuantity::from_value(double(plan.T_depth_iter)) * factor;
    plan.P1 = single_machine_success(plan.r_cap, search);
    return plan;
}

}  // namespace qmine
