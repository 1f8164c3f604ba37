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
#include "qmine/surface_code.hpp"

#include <cmath>

using namespace qmine;

namespace {

// Smallest odd d with 0.1 (100 p)^((d+1)/2) <= 0.01 / locations, by brute force.
int reference_distance(double log10_locations, double p)
{
    for (int d = 3;; d += 2)
        if (-1.0 + 0.5 * (d + 1) * std::log10(100.0 * p) <= -2.0 - log10_locations + 1e-12)
            return d;
}

GroverPlan difficulty_one_plan(const OracleSpec& oracle)
{
    return plan_grover(oracle, SearchSpec(256, marked_states(256, 1.0)), INFINITY, 1e-6);
}

}  // namespace

TEST_SUITE("surface_code")
{
TEST_CASE("architecture presets")
{
    const auto sc = architectures::superconducting();
    CHECK(sc.tau_s == 1e-6);
    CHECK(sc.layout_lambda == 2.0);
    CHECK(sc.p_phys == 1e-3);
    const auto na = architectures::neutral_atom();
    CHECK(na.tau_s == 2e-6);
    CHECK(na.layout_lambda == 2.5);
    CHECK(na.p_phys == 5e-4);
    const auto ion = architectures::ion_trap();
    CHECK(ion.tau_s == 1e-5);
    CHECK(ion.layout_lambda == 3.0);
    CHECK(ion.p_phys == 1e-4);
    CHECK(architectures::by_name("ion") == ion);
    CHECK_THROWS_AS(architectures::by_name("photonic"), InvalidInput);

    ArchitectureSpec hot = sc;
    hot.p_phys = 0.02;
    CHECK_THROWS_AS(hot.validate(), AboveThreshold);
}

TEST_CASE("logical error rate")
{
    CHECK(logical_error_rate(1e-3, 23).log10() == doctest::Approx(-13.0));
    CHECK(logical_error_rate(1e-4, 9).log10() == doctest::Approx(-11.0));
    CHECK(logical_error_rate(9.99e-3, 3).value() == doctest::Approx(0.1 * 0.999 * 0.999).epsilon(1e-12));
    CHECK_THROWS_AS(logical_error_rate(0.01, 3), AboveThreshold);
    CHECK_THROWS_AS(logical_error_rate(1e-3, 4), InvalidInput);
    CHECK_THROWS_AS(logical_error_rate(1e-3, 1), InvalidInput);
}

TEST_CASE("required distance")
{
    const auto tc = FailureBudgetMode::t_count_proxy;
    const auto vol = FailureBudgetMode::volume_proxy;
    const LogQuantity none;
    CHECK(required_distance(LogQuantity::from_value(3.152e10), 0, none, 1e-3, tc) == 23);
    CHECK(required_distance(LogQuantity::from_value(3.84e29), 0, none, 1e-3, tc) == 61);
    CHECK(required_distance(LogQuantity::from_value(1.604e8), 833, LogQuantity::from_value(5.99e7), 1e-3, tc) == 19);
    CHECK(required_distance(LogQuantity::from_value(1.604e8), 833, LogQuantity::from_value(5.99e7), 1e-3, vol) == 23);

    // Minimality over a spread of magnitudes and error rates.
    for (double p : {1e-3, 5e-4, 1e-4, 8e-3})
        for (double lg = 0.0; lg < 120.0; lg += 3.7) {
            const int d = required_distance(LogQuantity::from_log10(lg), 0, none, p, tc);
            CHECK(d == reference_distance(lg, p));
            CHECK(logical_error_rate(p, d).log10() <= -2.0 - lg + 1e-12);
            if (d > 3)
                CHECK(logical_error_rate(p, d - 2).log10() > -2.0 - lg);
        }
    CHECK_THROWS_AS(required_distance(LogQuantity::from_log10(1e6), 0, none, 1e-3, tc), InvalidInput);
}

TEST_CASE("factory count")
{
    // 1e9 T gates in 1000 s with one T state per 10 d tau.
    CHECK(factory_count(LogQuantity::from_value(1e9), 1000.0, 21, 1e-6).value() ==
          doctest::Approx(std::ceil(1e9 / 1000.0 * 10 * 21 * 1e-6)));
    CHECK(factory_count_cycles(LogQuantity::from_value(1e9), LogQuantity::from_value(1e9), 21).value() ==
          doctest::Approx(210.0));
    CHECK_THROWS_AS(factory_count(LogQuantity::one(), 0.0, 3, 1e-6), InvalidInput);
}

TEST_CASE("difficulty-one footprint")
{
    OracleSpec oracle;
    const GroverPlan plan = difficulty_one_plan(oracle);
    const auto arch = architectures::superconducting();
    const MachineFootprint fp = *machine_footprint(plan, oracle, arch, {});

    const double r = 51472;
    const double width = 833 + 256 + 33;
    const double t_no_diffusion = 612336 - 8 * 254;
    CHECK(plan.r_cap.value() == doctest::Approx(r));
    CHECK(fp.code_distance == reference_distance(std::log10(r * 612336), 1e-3));
    CHECK(fp.code_distance == 23);
    CHECK(fp.logical_width_used == 1122);
    CHECK(fp.data_qubits.value() == doctest::Approx(2.0 * 23 * 23 * width));
    CHECK(fp.factory_count.value() == doctest::Approx(std::ceil(10.0 * 23 * t_no_diffusion / 228720.0)));
    CHECK(fp.factory_count.value() == doctest::Approx(614));
    CHECK(fp.factory_qubits.value() == doctest::Approx(1.25 * 23 * 23 * 614));
    CHECK(fp.total_qubits.value() == doctest::Approx(1.6e6).epsilon(0.1));
    CHECK(fp.logical_runtime_seconds == doctest::Approx(r * 228720 * 1e-6));

    // total = data + factories in the log domain
    const double sum = fp.data_qubits.value() + fp.factory_qubits.value();
    CHECK(std::abs(fp.total_qubits.value() - sum) / sum < 1e-10);

    FootprintOptions with_diffusion;
    with_diffusion.diffusion_in_factory_demand = true;
    const MachineFootprint fd = *machine_footprint(plan, oracle, arch, with_diffusion);
    CHECK(fd.factory_count.value() == doctest::Approx(std::ceil(10.0 * 23 * 612336 / 228720.0)));
    CHECK(fd.factory_count.value() == doctest::Approx(610).epsilon(0.01));

    FootprintOptions narrow;
    narrow.width = WidthMode::oracle_only;
    CHECK(machine_footprint(plan, oracle, arch, narrow)->logical_width_used == 833);
}

TEST_CASE("P2PKH footprint")
{
    OracleSpec oracle;
    oracle.pipeline = HashPipeline::address();
    oracle.register_bits = 160;
    const GroverPlan plan = plan_grover(oracle, SearchSpec(160, LogQuantity::one()), INFINITY, 1e-6);
    const MachineFootprint fp = *machine_footprint(plan, oracle, architectures::superconducting(), {});
    CHECK(fp.code_distance == 61);
    CHECK(fp.logical_width_used == 1153 + 160 + 33);
    CHECK(fp.data_qubits.value() == doctest::Approx(2.0 * 61 * 61 * 1346));
    CHECK(fp.total_qubits.value() == doctest::Approx(1.7e7).epsilon(0.1));
    CHECK(fp.logical_runtime_seconds == doctest::Approx(1.5e23).epsilon(0.02));
}

TEST_CASE("volume proxy inflation stays below a factor of two")
{
    OracleSpec oracle;
    const SearchSpec s = SearchSpec::from_bits(256, 256.0);
    for (double cap : {60.0, 600.0})
        for (const auto& arch : architectures::sweep_presets()) {
            const GroverPlan plan = plan_grover(oracle, s, cap, arch.tau_s);
            FootprintOptions t;
            t.width = WidthMode::oracle_only;
            FootprintOptions v = t;
            v.budget = FailureBudgetMode::volume_proxy;
            const auto ft = *machine_footprint(plan, oracle, arch, t);
            const auto fv = *machine_footprint(plan, oracle, arch, v);
            const double inflation = fv.total_qubits.value() / ft.total_qubits.value();
            CHECK(inflation >= 1.0);
            CHECK(inflation <= 2.0);
        }
}

TEST_CASE("infeasible plans have no footprint")
{
    OracleSpec oracle;
    const GroverPlan plan = plan_grover(oracle, SearchSpec::from_bits(256, 32.0), 0.1, 1e-6);
    CHECK_FALSE(machine_footprint(plan, oracle, architectures::superconducting(), {}).has_value());
}

TEST_CASE("mode names")
{
    CHECK(parse_budget_mode("volume") == FailureBudgetMode::volume_proxy);
    CHECK(parse_width_mode("full") == WidthMode::full_width);
    CHECK(parse_width_mode(to_string(WidthMode::oracle_only)) == WidthMode::oracle_only);
    CHECK_THROWS_AS(parse_width_mode("wide"), InvalidInput);
}
}
