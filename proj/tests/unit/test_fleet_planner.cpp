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


#include "doctest.h"

#include "qmine/errors.hpp"
#include "qmine/fleet_planner.hpp"

#include <cmath>

using namespace qmine;

namespace {

SweepCell cell(double b, double cap, double pt, ArchitectureSpec arch = architectures::superconducting())
{
    SweepCell c;
    c.difficulty_bits = b;
    c.t_cap_seconds = cap;
    c.target_success = pt;
    c.arch = arch;
    return c;
}

}  // namespace

TEST_SUITE("fleet_planner")
{
TEST_CASE("fleet size")
{
    CHECK(fleet_size(0.5, 0.5).value() == doctest::Approx(1.0));
    CHECK(fleet_size(1.0, 0.99).value() == doctest::Approx(1.0));
    CHECK(fleet_size(0.0063938, 0.5).value() == doctest::Approx(std::ceil(std::log(0.5) / std::log1p(-0.0063938))));
    CHECK(fleet_size(0.0063938, 0.5).value() == doctest::Approx(109.0));
    CHECK(fleet_size(0.0063938, 0.5).log10() == doctest::Approx(2.04).epsilon(2e-3));
    CHECK(fleet_size(2.378e-70, 0.5).log10() == doctest::Approx(std::log10(std::log(2.0) / 2.378e-70)).epsilon(1e-12));
    CHECK(fleet_size(2.378e-70, 0.5).log10() == doctest::Approx(69.47).epsilon(1e-4));
    // P1 only representable in the log domain
    CHECK(fleet_size(LogQuantity::from_log10(-500.0), 0.5).log10() ==
          doctest::Approx(500.0 + std::log10(std::log(2.0))).epsilon(1e-14));

    CHECK_THROWS_AS(fleet_size(0.0, 0.5), InvalidInput);
    CHECK_THROWS_AS(fleet_size(0.1, 1.0), InvalidInput);
    CHECK_THROWS_AS(fleet_size(0.1, 0.0), InvalidInput);
    CHECK_THROWS_AS(fleet_size(0.1, 1.2), InvalidInput);
}

TEST_CASE("single cells")
{
    const FleetReport b32 = evaluate_cell(cell(32, 600, 0.5));
    REQUIRE(b32.feasible);
    CHECK(b32.n_machines.value() == doctest::Approx(109.0));
    CHECK(b32.fleet_qubits.log10() == doctest::Approx(8.15).epsilon(0.02 / 8.15));

    const FleetReport pre = evaluate_cell(cell(256, 600, 0.99));
    REQUIRE(pre.feasible);
    CHECK(pre.fleet_qubits.log10() == doctest::Approx(76.40).epsilon(0.02 / 76.4));
    CHECK(pre.fleet_qubits.log10() == doctest::Approx(pre.n_machines.log10() + pre.machine->total_qubits.log10()));

    const FleetReport none = evaluate_cell(cell(32, 0.1, 0.5));
    CHECK_FALSE(none.feasible);
    CHECK_FALSE(none.machine.has_value());

    CHECK_THROWS_AS(evaluate_cell(cell(32, 600, 1.2)), InvalidInput);
    CHECK_THROWS_AS(evaluate_cell(cell(32, 0.0, 0.5)), InvalidInput);
    CHECK_THROWS_AS(evaluate_cell(cell(NAN, 600, 0.5)), InvalidInput);
}

TEST_CASE("target-success shift is log10(ln 0.01 / ln 0.5) in the small-P1 regime")
{
    const double shift = std::log10(std::log(0.01) / std::log(0.5));
    for (double b : {64.0, 96.0, 160.0, 224.0, 256.0}) {
        const FleetReport lo = evaluate_cell(cell(b, 600, 0.5));
        const FleetReport hi = evaluate_cell(cell(b, 600, 0.99));
        REQUIRE(lo.plan.P1->value() < 1e-3);
        CHECK(hi.n_machines.log10() - lo.n_machines.log10() == doctest::Approx(shift).epsilon(1e-3));
    }
}

TEST_CASE("halving the runtime cap quadruples the fleet")
{
    const FleetReport full = evaluate_cell(cell(256, 600, 0.5));
    const FleetReport half = evaluate_cell(cell(256, 300, 0.5));
    const double ratio = half.n_machines.value() / full.n_machines.value();
    CHECK(ratio == doctest::Approx(4.0).epsilon(0.01));
}

TEST_CASE("feasibility boundary sits at one iteration")
{
    const double t_iter = 228720 * 1e-6;
    CHECK(evaluate_cell(cell(32, t_iter * 1.0001, 0.5)).feasible);
    CHECK_FALSE(evaluate_cell(cell(32, t_iter * 0.9999, 0.5)).feasible);
}

TEST_CASE("sweeps keep a fixed order independent of thread count")
{
    SweepGrid grid{{32, 64, 256}, {60, 600}, {0.5, 0.99}, architectures::sweep_presets()};
    const auto one = run_sweep(grid, OracleSpec{}, {}, 1);
    const auto many = run_sweep(grid, OracleSpec{}, {}, 4);
    REQUIRE(one.size() == 3 * 2 * 2 * 3);
    REQUIRE(many.size() == one.size());
    std::size_t i = 0;
    for (double b : grid.bits)
        for (double cap : grid.t_caps)
            for (double pt : grid.targets)
                for (const auto& arch : grid.archs) {
                    CHECK(one[i].cell.difficulty_bits == b);
                    CHECK(one[i].cell.t_cap_seconds == cap);
                    CHECK(one[i].cell.target_success == pt);
                    CHECK(one[i].cell.arch.name == arch.name);
                    CHECK(one[i].n_machines == many[i].n_machines);
                    CHECK(one[i].fleet_qubits == many[i].fleet_qubits);
                    ++i;
                }

    SweepGrid single{{32}, {600}, {0.5}, {architectures::superconducting()}};
    const auto s = run_sweep(single, OracleSpec{}, {});
    REQUIRE(s.size() == 1);
    const FleetReport direct = evaluate_cell(cell(32, 600, 0.5));
    CHECK(s[0].fleet_qubits == direct.fleet_qubits);
    CHECK(s[0].machine->code_distance == direct.machine->code_distance);
}
}
