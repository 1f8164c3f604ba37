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

#include "qmine/surface_code.hpp"

#include "qmine/errors.hpp"

#include <cmath>
#include <string>

namespace qmine {

namespace {

constexpr double kSurfaceThreshold = 0.01;
// Comparison slack in log10 space for the distance search.
constexpr double kLog10Slack = 1e-12;

}  // namespace

void ArchitectureSpec::validate() const
{
    if (!(tau_s > 0.0) || !std::isfinite(tau_s))
        throw InvalidInput("architecture '" + name + "': tau_s must be positive");
    if (!(layout_lambda > 0.0))
        throw InvalidInput("architecture '" + name + "': lambda must be positive");
    if (!(p_phys > 0.0))
        throw InvalidInput("architecture '" + name + "': p_phys must be positive");
    if (p_phys >= kSurfaceThreshold)
        throw AboveThreshold("architecture '" + name + "': p_phys must be below the 1% threshold");
    if (!(watts_per_qubit > 0.0))
        throw InvalidInput("architecture '" + name + "': watts_per_qubit must be positive");
    if (!(efficiency > 0.0) || efficiency > 1.0)
        throw InvalidInput("architecture '" + name + "': efficiency must lie in (0, 1]");
}

namespace architectures {

ArchitectureSpec superconducting() { return {"superconducting", 1e-6, 2.0, 1e-3, 12.0, 0.18}; }
ArchitectureSpec neutral_atom() { return {"neutral_atom", 2e-6, 2.5, 5e-4, 1e-3, 0.30}; }
ArchitectureSpec ion_trap() { return {"ion_trap", 1e-5, 3.0, 1e-4, 3.0, 0.22}; }
ArchitectureSpec superconducting_mw_floor() { return {"superconducting_mw_floor", 1e-6, 2.0, 1e-3, 1e-3, 1.0}; }

std::vector<ArchitectureSpec> sweep_presets()
{
    return {superconducting(), neutral_atom(), ion_trap()};
}

ArchitectureSpec by_name(std::string_view name)
{
    if (name == "superconducting" || name == "sc")
        return superconducting();
    if (name == "neutral_atom" || name == "na")
        return neutral_atom();
    if (name == "ion_trap" || name == "ion")
        return ion_trap();
    if (name == "superconducting_mw_floor")
        return superconducting_mw_floor();
    throw InvalidInput("unknown architecture '" + std::string(name) + "'");
}

}  // namespace architectures

LogQuantity logical_error_rate(double p_phys, int distance)
{
    if (!(p_phys > 0.0))
        throw InvalidInput("p_phys must be positive");
    if (p_phys >= kSurfaceThreshold)
        throw AboveThreshold("p_phys must be below the 1% surface-code threshold");
    if (distance < 3 || distance % 2 == 0)
        throw InvalidInput("code distance must be odd and >= 3");
    const double exponent = 0.5 * (distance + 1);
    return LogQuantity::from_log10(-1.0 + exponent * std::log10(100.0 * p_phys));
}

int required_distance(const LogQuantity& T_tot, std::int64_t logical_width, const LogQuantity& cycles,
                      double p_phys, FailureBudgetMode mode)
{
    LogQuantity locations;
    if (mode == FailureBudgetMode::t_count_proxy) {
        locations = T_tot;
    } else {
        if (logical_width < 1)
            throw InvalidInput("volume proxy needs a positive logical width");
        locations = LogQuantity::from_value(double(logical_width)) * cycles;
    }
    if (locations.is_zero() || locations.log10() < 0.0)
        throw InvalidInput("failure budget needs at least one fault location");

    const double log10_budget = std::log10(kRunFailureBudget) - locations.log10();
    for (int d = 3; d <= kMaxDistance; d += 2) {
        if (logical_error_rate(p_phys, d).log10() <= log10_budget + kLog10Slack)
            return d;
    }
    throw InvalidInput("required code distance exceeds " + std::to_string(kMaxDistance));
}

LogQuantity factory_count_cycles(const LogQuantity& T_tot, const LogQuantity& cycles, int distance)
{
    if (cycles.is_zero())
        throw InvalidInput("factory_count: logical runtime must be positive");
    const LogQuantity per_factory_period = LogQuantity::from_value(double(kFactoryCyclesPerD) * distance);
    return (T_tot * per_factory_period / cycles).ceil();
}

LogQuantity factory_count(const LogQuantity& T_tot, double t_logical_seconds, int distance, double tau_s)
{
    if (!(t_logical_seconds > 0.0) || !(tau_s > 0.0))
        throw InvalidInput("factory_count: runtime and cycle time must be positive");
    const LogQuantity rate = T_tot / LogQuantity::from_value(t_logical_seconds);
    return (rate * LogQuantity::from_value(double(kFactoryCyclesPerD) * distance * tau_s)).ceil();
}

std::int64_t logical_width(const OracleSpec& oracle, WidthMode mode)
{
    const std::int64_t pipeline_width =
        pipeline_ledger(oracle.pipeline, oracle.adder, oracle.synthesis).logical_width;
    if (mode == WidthMode::oracle_only)
        return pipeline_width;
    return pipeline_width + oracle.register_bits + kComparatorDiffusionAncillas;
}

std::optional<MachineFootprint> machine_footprint(const GroverPlan& plan, const OracleSpec& oracle,
                                                  const ArchitectureSpec& arch, const FootprintOptions& options)
{
    arch.validate();
    if (!plan.feasible)
        return std::nullopt;

    MachineFootprint fp;
    fp.logical_width_used = logical_width(oracle, options.width);
    fp.logical_cycles = plan.depth_cycles;
    fp.code_distance =
        required_distance(plan.T_tot, fp.logical_width_used, plan.depth_cycles, arch.p_phys, options.budget);

    const double d2 = double(fp.code_distance) * fp.code_distance;
    fp.data_qubits = LogQuantity::from_value(arch.layout_lambda * d2 * double(fp.logical_width_used));

    LogQuantity factory_demand = plan.T_tot;
    if (!options.diffusion_in_factory_demand) {
        const double per_iter = double(plan.T_oracle - plan.oracle_t.diffusion);
        factory_demand =
            plan.r_cap * LogQuantity::from_value(per_iter) * LogQuantity::from_value(plan.fixed_point_factor);
    }
    fp.factory_count = factory_count_cycles(factory_demand, plan.depth_cycles, fp.code_distance);
    fp.factory_qubits = LogQuantity::from_value(kFactoryQubitsPerD2 * d2) * fp.factory_count;
    fp.total_qubits = fp.data_qubits + fp.factory_qubits;
    fp.logical_runtime_seconds = (plan.depth_cycles * LogQuantity::from_value(arch.tau_s)).value();
    return fp;
}

std::string_view to_string(FailureBudgetMode m)
{
    return m == FailureBudgetMode::t_count_proxy ? "t_count" : "volume";
}

std::string_view to_string(WidthMode m)
{
    return m == WidthMode::full_width ? "full_width" : "oracle_only";
}

FailureBudgetMode parse_budget_mode(std::string_view s)
{
    if (s == "t_count" || s == "t_count_proxy")
        return FailureBudgetMode::t_count_proxy;
    if (s == "volume" || s == "volume_proxy")
        return FailureBudgetMode::volume_proxy;
    throw InvalidInput("unknown failure-budget mode '" + std::string(s) + "'");
}

WidthMode parse_width_mode(std::string_view s)
{
    if (s == "full_width" || s == "full")
        return WidthMode::full_width;
    if (s == "oracle_only" || s == "oracle")
        return WidthMode::oracle_only;
    throw InvalidInput("unknown width mode '" + std::string(s) + "'");
}

}  // namespace qmine
