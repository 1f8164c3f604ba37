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

#include "qmine/lognum.hpp"
#include "qmine/mining_model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qmine {

struct ArchitectureSpec {
    std::string name;
    double tau_s = 1e-6;
    /// Spacelike expansion applied to data patches (lambda d^2 per logical qubit).
    double layout_lambda = 2.0;
    double p_phys = 1e-3;
    double watts_per_qubit = 12.0;
    double efficiency = 0.18;

    /// Throws InvalidInput / AboveThreshold.
    void validate() const;
    friend bool operator==(const ArchitectureSpec&, const ArchitectureSpec&) = default;
};

namespace architectures {
ArchitectureSpec superconducting();
ArchitectureSpec neutral_atom();
ArchitectureSpec ion_trap();
/// Superconducting surface-code timing with a 1 mW/qubit all-in power floor.
ArchitectureSpec superconducting_mw_floor();
/// The three sweep presets, in table order.
std::vector<ArchitectureSpec> sweep_presets();
/// Throws InvalidInput for an unknown name.
ArchitectureSpec by_name(std::string_view name);
}  // namespace architectures

enum class FailureBudgetMode { t_count_proxy, volume_proxy };
enum class WidthMode { full_width, oracle_only };

/// Comparator plus diffusion ancillas in the full-width convention.
inline constexpr std::int64_t kComparatorDiffusionAncillas = 33;
inline constexpr double kRunFailureBudget = 0.01;
inline constexpr double kFactoryQubitsPerD2 = 1.25;
inline constexpr int kFactoryCyclesPerD = 10;
inline constexpr int kMaxDistance = 9999;

struct FootprintOptions {
    FailureBudgetMode budget = FailureBudgetMode::t_count_proxy;
    WidthMode width = WidthMode::full_width;
    /// Count diffusion T gates in the factory throughput demand.
    bool diffusion_in_factory_demand = false;
    friend bool operator==(const FootprintOptions&, const FootprintOptions&) = default;
};

struct MachineFootprint {
    int code_distance = 0;
    LogQuantity data_qubits;
    LogQuantity factory_count;
    LogQuantity factory_qubits;
    LogQuantity total_qubits;
    LogQuantity logical_cycles;
    double logical_runtime_seconds = 0.0;
    std::int64_t logical_width_used = 0;
};

/// 0.1 (100 p)^((d+1)/2). Throws AboveThreshold for p >= 0.01.
LogQuantity logical_error_rate(double p_phys, int distance);

/// Smallest odd d >= 3 meeting the run budget. T_tot is used in
/// t_count_proxy mode, logical_width * cycles in volume_proxy mode.
int required_distance(const LogQuantity& T_tot, std::int64_t logical_width, const LogQuantity& cycles,
                      double p_phys, FailureBudgetMode mode);

/// ceil((T_tot / t_logical) 10 d tau).
LogQuantity factory_count(const LogQuantity& T_tot, double t_logical_seconds, int distance, double tau_s);
/// Same demand expressed in cycles: ceil(10 d T_tot / cycles). Avoids
/// forming t_logical when it would overflow.
LogQuantity factory_count_cycles(const LogQuantity& T_tot, const LogQuantity& cycles, int distance);

std::int64_t logical_width(const OracleSpec& oracle, WidthMode mode);

/// nullopt when the plan is infeasible.
std::optional<MachineFootprint> machine_footprint(const GroverPlan& plan, const OracleSpec& oracle,
                                                  const ArchitectureSpec& arch, const FootprintOptions& options);

std::string_view to_string(FailureBudgetMode m);
std::string_view to_string(WidthMode m);
FailureBudgetMode parse_budget_mode(std::string_view s);
WidthMode parse_width_mode(std::string_view s);

}  // namespace qmine
