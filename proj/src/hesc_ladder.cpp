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

#include "qmine/hesc_ladder.hpp"

#include "qmine/errors.hpp"

#include <cmath>

namespace qmine {

namespace hc = hesc_constants;

EnergyRung rung_derive(double energy_eV, double kappa, std::string tag)
{
    if (!(energy_eV > 0.0) || !std::isfinite(energy_eV))
        throw InvalidInput("rung energy must be positive and finite");
    if (!(kappa > 0.0) || !std::isfinite(kappa))
        throw InvalidInput("rung kappa must be positive and finite");
    EnergyRung r;
    r.tag = std::move(tag);
    r.energy_eV = energy_eV;
    r.kappa = kappa;
    r.tau0_seconds = hc::kPlanckEvSeconds / energy_eV;
    r.length_m = hc::kHbarCEvMetres / energy_eV;
    r.speedup = (energy_eV / kappa) / (hc::kBaseEnergyEv / hc::kBaseKappa);
    r.tau_cyc_seconds = hc::kBaseCycleSeconds / r.speedup;
    return r;
}

std::vector<EnergyRung> preset_rungs()
{
    return {
        rung_derive(hc::kBaseEnergyEv, hc::kBaseKappa, "surface_mw_5GHz"),
        rung_derive(1e-2, 1e3, "surface_thz_10meV"),
        rung_derive(2.0, 1e2, "surface_opt_2eV"),
        rung_derive(1e4, 10.0, "surface_xray_10keV"),
        rung_derive(1e6, 5.0, "surface_nuclear_1MeV"),
        rung_derive(1e8, 2.0, "surface_qcd_100MeV"),
        rung_derive(1e11, 1.0, "surface_ew_100GeV"),
        rung_derive(1e12, 1.0, "surface_tev_1TeV"),
        rung_derive(1e19, 1.0, "surface_gut_1e16GeV"),
        rung_derive(1.221e28, 1.0, "surface_planck"),
    };
}

double gate_power_floor(double energy_eV, double kappa)
{
    if (!(energy_eV > 0.0) || !(kappa > 0.0))
        throw InvalidInput("gate_power_floor: E and kappa must be positive");
    const double e_joules = energy_eV * hc::kElectronVoltJoules;
    return e_joules * e_joules / (kappa * hc::kPlanckJouleSeconds);
}

std::vector<FleetReport> ladder_sweep(const std::vector<EnergyRung>& rungs, const SweepGrid& grid,
                                      const OracleSpec& oracle, const FootprintOptions& options,
                                      const LadderOptions& ladder, unsigned threads)
{
    if (rungs.empty())
        throw InvalidInput("ladder_sweep needs at least one rung");
    if (grid.bits.empty() || grid.t_caps.empty() || grid.targets.empty() || grid.archs.empty())
        throw InvalidInput("sweep grid must have at least one value on every axis");

    std::vector<SweepCell> cells;
    for (const auto& rung : rungs) {
        for (double b : grid.bits)
            for (double t_cap : grid.t_caps)
                for (double pt : grid.targets)
                    for (auto arch : grid.archs) {
                        // Scale each platform's own clock so the base rung
                        // leaves every architecture untouched.
                        arch.tau_s /= rung.speedup;
                        if (ladder.add_gate_power_floor)
                            arch.watts_per_qubit += gate_power_floor(rung.energy_eV, rung.kappa);
                        cells.push_back(SweepCell{b, t_cap, pt, arch, oracle, options, rung.tag});
                    }
    }
    return evaluate_cells(cells, threads);
}

}  // namespace qmine
