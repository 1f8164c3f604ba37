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

// Energy-scale ladder for a surface code clocked at a microscopic energy E:
// tau_cyc = kappa h / E and ell = hbar c / E, anchored so the 5 GHz
// microwave rung runs at exactly 1 us per cycle.

#include "qmine/fleet_planner.hpp"

#include <string>
#include <vector>

namespace qmine {

namespace hesc_constants {
inline constexpr double kPlanckEvSeconds = 4.135667696e-15;
inline constexpr double kHbarCEvMetres = 1.973269804e-7;
inline constexpr double kElectronVoltJoules = 1.602176634e-19;
inline constexpr double kPlanckJouleSeconds = 6.62607015e-34;

inline constexpr double kBaseEnergyEv = 2.067834e-5;
inline constexpr double kBaseKappa = 5e3;
inline constexpr double kBaseCycleSeconds = 1e-6;
}  // namespace hesc_constants

struct EnergyRung {
    std::string tag;
    double energy_eV = 0.0;
    double kappa = 1.0;
    /// h / E.
    double tau0_seconds = 0.0;
    /// Base cycle divided by the speedup; exactly 1 us on the base rung.
    double tau_cyc_seconds = 0.0;
    double length_m = 0.0;
    /// (E / kappa) / (E_base / kappa_base).
    double speedup = 1.0;
};

/// Throws InvalidInput for nonpositive E or kappa.
EnergyRung rung_derive(double energy_eV, double kappa, std::string tag = {});

/// The ten preset rungs from microwave to Planck scale.
std::vector<EnergyRung> preset_rungs();

/// E^2 / (kappa h) in watts, evaluated in SI units.
double gate_power_floor(double energy_eV, double kappa);

struct LadderOptions {
    /// Add the gate-power floor to each qubit's wall-plug draw.
    bool add_gate_power_floor = false;
};

/// Reruns the sweep with every architecture's cycle time divided by the
/// rung speedup (superconducting then runs at exactly tau_cyc). Reports are
/// grouped by rung, then by (b, t_cap, Pt, arch).
std::vector<FleetReport> ladder_sweep(const std::vector<EnergyRung>& rungs, const SweepGrid& grid,
                                      const OracleSpec& oracle, const FootprintOptions& options,
                                      const LadderOptions& ladder = {}, unsigned threads = 0);

}  // namespace qmine
