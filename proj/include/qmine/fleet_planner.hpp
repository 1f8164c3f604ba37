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

// Single-machine success to fleet size, for one cell or a Cartesian sweep.

#include "qmine/energy.hpp"
#include "qmine/lognum.hpp"
#include "qmine/mining_model.hpp"
#include "qmine/surface_code.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qmine {

struct SweepCell {
    double difficulty_bits = 32.0;
    double t_cap_seconds = 600.0;
    double target_success = 0.5;
    ArchitectureSpec arch = architectures::superconducting();
    OracleSpec oracle;
    FootprintOptions options;
    /// Set by ladder sweeps to name the energy rung.
    std::optional<std::string> rung_tag;

    /// Throws InvalidInput for Pt outside (0,1), t_cap <= 0, non-finite b.
    void validate() const;
};

struct FleetReport {
    SweepCell cell;
    GroverPlan plan;
    /// Unset when infeasible.
    std::optional<MachineFootprint> machine{};
    LogQuantity n_machines{};
    LogQuantity fleet_qubits{};
    LogQuantity fleet_watts{};
    KardashevClass kardashev{};
    bool feasible = false;
};

/// ceil(ln(1-Pt) / ln(1-P1)); ln(1-P1) is replaced by -P1 when P1 < 1e-12.
/// Returns 1 for P1 >= 1. Throws InvalidInput for P1 <= 0 or Pt outside (0,1).
LogQuantity fleet_size(const LogQuantity& P1, double target_success);
LogQuantity fleet_size(double P1, double target_success);

FleetReport evaluate_cell(const SweepCell& cell);

struct SweepGrid {
    std::vector<double> bits;
    std::vector<double> t_caps;
    std::vector<double> targets;
    std::vector<ArchitectureSpec> archs;
};

/// One report per cell in (b, t_cap, Pt, arch) order. Cells run in
/// parallel; output order does not depend on scheduling.
std::vector<FleetReport> run_sweep(const SweepGrid& grid, const OracleSpec& oracle,
                                   const FootprintOptions& options, unsigned threads = 0);

/// Evaluates a prepared list of cells in parallel, preserving order.
std::vector<FleetReport> evaluate_cells(const std::vector<SweepCell>& cells, unsigned threads = 0);

}  // namespace qmine
