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
#include "qmine/hesc_ladder.hpp"
#include "qmine/report_io.hpp"

#include <cmath>

using namespace qmine;

namespace {

constexpr double kPlanck = 4.135667696e-15;  // eV s
constexpr double kHbarC = 1.973269804e-7;    // eV m

SweepGrid small_grid()
{
    return SweepGrid{{32, 64, 128, 256}, {60, 600}, {0.5}, architectures::sweep_presets()};
}

}  // namespace

TEST_SUITE("hesc_ladder")
{
TEST_CASE("rung derivation")
{
    const EnergyRung mw = rung_derive(2.067834e-5, 5e3, "mw");
    CHECK(mw.tau0_seconds == doctest::Approx(kPlanck / 2.067834e-5));
    CHECK(mw.tau0_seconds == doctest::Approx(2.000e-10).epsilon(1e-4));
    CHECK(mw.tau_cyc_seconds == 1e-6);
    CHECK(mw.speedup == 1.0);
    CHECK(mw.length_m == doctest::Approx(kHbarC / 2.067834e-5));

    CHECK(rung_derive(1e-2, 1e3).speedup == doctest::Approx((1e-2 / 1e3) / (2.067834e-5 / 5e3)));
    CHECK(rung_derive(1e-2, 1e3).speedup == doctest::Approx(2.42e3).epsilon(5e-3));
    CHECK(rung_derive(1.221e28, 1.0).length_m == doctest::Approx(1.616e-35).epsilon(1e-3));

    CHECK_THROWS_AS(rung_derive(0.0, 1.0), InvalidInput);
    CHECK_THROWS_AS(rung_derive(1.0, -2.0), InvalidInput);
}

TEST_CASE("preset cycle and length columns")
{
    struct Row {
        const char* tag;
        double tau0, ell;
    };
    const Row rows[] = {
        {"surface_mw_5GHz", 2.000e-10, 9.543e-03},     {"surface_thz_10meV", 4.136e-13, 1.973e-05},
        {"surface_opt_2eV", 2.068e-15, 9.866e-08},     {"surface_xray_10keV", 4.136e-19, 1.973e-11},
        {"surface_nuclear_1MeV", 4.136e-21, 1.973e-13}, {"surface_qcd_100MeV", 4.136e-23, 1.973e-15},
        {"surface_ew_100GeV", 4.136e-26, 1.973e-18},   {"surface_tev_1TeV", 4.136e-27, 1.973e-19},
        {"surface_gut_1e16GeV", 4.136e-34, 1.973e-26}, {"surface_planck", 3.387e-43, 1.616e-35},
    };
    const auto rungs = preset_rungs();
    REQUIRE(rungs.size() == 10);
    for (std::size_t i = 0; i < rungs.size(); ++i) {
        CAPTURE(rungs[i].tag);
        CHECK(rungs[i].tag == rows[i].tag);
        CHECK(rungs[i].tau0_seconds == doctest::Approx(rows[i].tau0).epsilon(5e-3));
        CHECK(rungs[i].length_m == doctest::Approx(rows[i].ell).epsilon(5e-3));
    }
}

TEST_CASE("speedup ratios follow E / kappa")
{
    const auto rungs = preset_rungs();
    for (const auto& a : rungs)
        for (const auto& b : rungs) {
            const double expected = std::log10(a.energy_eV * b.kappa) - std::log10(b.energy_eV * a.kappa);
            CHECK(std::log10(a.speedup) - std::log10(b.speedup) == doctest::Approx(expected).epsilon(1e-12));
        }
}

TEST_CASE("gate power floor")
{
    // E^2 / (kappa h) with E in joules
    const double e_j = 2.067834e-5 * 1.602176634e-19;
    CHECK(gate_power_floor(2.067834e-5, 1.0) == doctest::Approx(e_j * e_j / 6.62607015e-34));
    CHECK(gate_power_floor(2.067834e-5, 1.0) == doctest::Approx(1.66e-14).epsilon(0.01));
    CHECK(gate_power_floor(2.067834e-5, 5000.0) == doctest::Approx(3.3e-18).epsilon(0.01));
    CHECK(gate_power_floor(1e6, 5.0) == doctest::Approx(7.8e6).epsilon(0.01));
    CHECK(gate_power_floor(2e6, 5.0) / gate_power_floor(1e6, 5.0) == doctest::Approx(4.0));
}

TEST_CASE("base rung reproduces the plain sweep")
{
    const auto grid = small_grid();
    const auto base = run_sweep(grid, OracleSpec{}, {});
    const auto ladder = ladder_sweep({preset_rungs().front()}, grid, OracleSpec{}, {});
    REQUIRE(base.size() == ladder.size());
    auto rows = to_rows(ladder);
    for (auto& r : rows)
        r.rung_tag.reset();
    CHECK(emit_csv(rows) == emit_csv(to_rows(base)));
}

TEST_CASE("fleet size never grows with the speedup and plateaus once uncapped")
{
    SweepGrid grid{{32, 64, 160}, {600}, {0.5}, {architectures::superconducting()}};
    const auto rungs = preset_rungs();
    const auto reports = ladder_sweep(rungs, grid, OracleSpec{}, {});
    const std::size_t per_rung = grid.bits.size();
    for (std::size_t cell = 0; cell < per_rung; ++cell) {
        for (std::size_t k = 1; k < rungs.size(); ++k) {
            const auto& prev = reports[(k - 1) * per_rung + cell];
            const auto& cur = reports[k * per_rung + cell];
            REQUIRE(prev.feasible);
            CHECK(cur.n_machines <= prev.n_machines);
            if (prev.plan.r_cap == prev.plan.r_ideal)
                CHECK(cur.n_machines == prev.n_machines);
        }
    }
    // b = 32 saturates at one machine once the full iteration count fits.
    CHECK(reports.back().cell.rung_tag.value() == "surface_planck");
    CHECK(reports[(rungs.size() - 1) * per_rung].n_machines.value() == doctest::Approx(1.0));
}

TEST_CASE("gate power floor option raises the per-qubit draw")
{
    SweepGrid grid{{64}, {600}, {0.5}, {architectures::superconducting()}};
    const auto rungs = preset_rungs();
    LadderOptions with_floor;
    with_floor.add_gate_power_floor = true;
    const auto plain = ladder_sweep({rungs[4]}, grid, OracleSpec{}, {});
    const auto floor = ladder_sweep({rungs[4]}, grid, OracleSpec{}, {}, with_floor);
    const double w = 12.0 + gate_power_floor(rungs[4].energy_eV, rungs[4].kappa);
    CHECK(floor[0].fleet_watts.log10() - plain[0].fleet_watts.log10() == doctest::Approx(std::log10(w / 12.0)));
    CHECK_THROWS_AS(ladder_sweep({}, grid, OracleSpec{}, {}), InvalidInput);
}
}
