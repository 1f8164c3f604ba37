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

#include "qmine/fleet_planner.hpp"

#include "qmine/errors.hpp"
#include "qmine/parallel.hpp"

#include <cmath>

namespace qmine {

namespace {

constexpr double kTinyProbabilityLog10 = -12.0;

}  // namespace

void SweepCell::validate() const
{
    if (!std::isfinite(difficulty_bits) || difficulty_bits < 0.0)
        throw InvalidInput("difficulty bits must be finite and nonnegative");
    if (!(t_cap_seconds > 0.0) || std::isnan(t_cap_seconds))
        throw InvalidInput("t_cap must be positive");
    if (!(target_success > 0.0 && target_success < 1.0))
        throw InvalidInput("target success Pt must lie in (0, 1)");
    arch.validate();
    oracle.validate();
}

LogQuantity fleet_size(const LogQuantity& P1, double target_success)
{
    if (!(target_success > 0.0 && target_success < 1.0))
        throw InvalidInput("fleet_size: Pt must lie in (0, 1)");
    if (P1.is_zero())
        throw InvalidInput("fleet_size: P1 must be positive");
    if (P1.log10() >= 0.0)
        return LogQuantity::one();

    const double ln_miss = std::log1p(-target_success);
    if (P1.log10() < kTinyProbabilityLog10)
        return lq_ratio_of_logs(ln_miss, P1).ceil();
    return lq_ratio_of_logs(ln_miss, std::log1p(-P1.value())).ceil();
}

LogQuantity fleet_size(double P1, double target_success)
{
    if (!(P1 > 0.0) || std::isnan(P1))
        throw InvalidInput("fleet_size: P1 must be positive");
    return fleet_size(LogQuantity::from_value(std::min(P1, 1.0)), target_success);
}

FleetReport evaluate_cell(const SweepCell& cell)
{
    cell.validate();
    const SearchSpec search = SearchSpec::from_bits(cell.oracle.register_bits, cell.difficulty_bits);
    FleetReport rep{.cell = cell, .plan = plan_grover(cell.oracle, search, cell.t_cap_seconds, cell.arch.tau_s)};
    rep.feasible = rep.plan.feasible;
    if (!rep.feasible)
        return rep;

    rep.machine = machine_footprint(rep.plan, cell.oracle, cell.arch, cell.options);
    rep.n_machines = fleet_size(*rep.plan.P1, cell.target_success);
    rep.fleet_qubits = rep.n_machines * rep.machine->total_qubits;
    rep.fleet_watts = fleet_power(rep.fleet_qubits, cell.arch);
    rep.kardashev = kardashev_classify(rep.fleet_watts);
    return rep;
}

std::vector<FleetReport> evaluate_cells(const std::vector<SweepCell>& cells, unsigned threads)
{
    std::vector<std::optional<FleetReport>> slots(cells.size());
    parallel_for(cells.size(), [&](std::size_t i) { slots[i] = evaluate_cell(cells[i]); }, threads);
    std::vector<FleetReport> out;
    out.reserve(cells.size());
    for (auto& s : slots)
        out.push_back(std::move(*s));
    return out;
}

std::vector<FleetReport> run_sweep(const SweepGrid& grid, const OracleSpec& oracle,
                                   const FootprintOptions& options, unsigned threads)
{
    if (grid.bits.empty() || grid.t_caps.empty() || grid.targets.empty() || grid.archs.empty())
        throw InvalidInput("sweep grid must have at least one value on every axis");
    std::vector<SweepCell> cells;
    cells.reserve(grid.bits.size() * grid.t_caps.size() * grid.targets.size() * grid.archs.size());
    for (double b : grid.bits)
        for (double t_cap : grid.t_caps)
            for (double pt : grid.targets)
                for (const auto& arch : grid.archs)
                    cells.push_back(SweepCell{b, t_cap, pt, arch, oracle, options, std::nullopt});
    return evaluate_cells(cells, threads);
}

}  // namespace qmine
