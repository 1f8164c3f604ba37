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

#include "qmine/energy.hpp"

#include "qmine/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <string>

namespace qmine {

namespace tracks {

EfficiencyTrack s9() { return {"s9", 80.0}; }
EfficiencyTrack s19() { return {"s19", 29.5}; }
EfficiencyTrack s21() { return {"s21", 17.5}; }

std::vector<EfficiencyTrack> presets()
{
    return {s9(), s19(), s21()};
}

EfficiencyTrack by_name(std::string_view name)
{
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    for (auto& t : presets())
        if (t.name == lower)
            return t;
    throw InvalidInput("unknown efficiency track '" + std::string(name) + "' (expected s9, s19 or s21)");
}

}  // namespace tracks

double network_hashrate(double difficulty)
{
    if (!std::isfinite(difficulty) || difficulty <= 0.0)
        throw InvalidInput("network_hashrate: difficulty must be positive");
    return difficulty * 4294967296.0 / 600.0;
}

double network_power(double difficulty, const EfficiencyTrack& track)
{
    if (!(track.joules_per_terahash > 0.0))
        throw InvalidInput("efficiency track '" + track.name + "' must have positive J/TH");
    return track.joules_per_terahash * network_hashrate(difficulty) / 1e12;
}

LogQuantity fleet_power(const LogQuantity& fleet_qubits, const ArchitectureSpec& arch)
{
    arch.validate();
    return fleet_qubits * LogQuantity::from_value(arch.watts_per_qubit / arch.efficiency);
}

KardashevClass kardashev_classify(const LogQuantity& watts)
{
    if (watts.is_zero())
        return {KardashevBand::sub_I, -std::numeric_limits<double>::infinity()};
    const double lg = watts.log10();
    KardashevClass k;
    k.index = (lg - 6.0) / 10.0;
    if (lg >= kKardashevBeyondLog10)
        k.band = KardashevBand::beyond;
    else if (lg >= kKardashevTypeIIILog10)
        k.band = KardashevBand::III;
    else if (lg >= kKardashevTypeIILog10)
        k.band = KardashevBand::II;
    else if (lg >= kKardashevTypeILog10)
        k.band = KardashevBand::I;
    else
        k.band = KardashevBand::sub_I;
    return k;
}

LogQuantity quantum_classical_ratio(const LogQuantity& fleet_watts, double classical_watts)
{
    if (!(classical_watts > 0.0) || !std::isfinite(classical_watts))
        throw InvalidInput("classical power must be positive");
    return fleet_watts / LogQuantity::from_value(classical_watts);
}

PowerReport power_report(const LogQuantity& fleet_watts, double classical_watts)
{
    PowerReport r;
    r.fleet_watts = fleet_watts;
    r.classical_watts = classical_watts;
    r.ratio_q_over_c = quantum_classical_ratio(fleet_watts, classical_watts);
    r.kardashev = kardashev_classify(fleet_watts);
    return r;
}

std::string_view to_string(KardashevBand band)
{
    switch (band) {
    case KardashevBand::sub_I: return "sub_I";
    case KardashevBand::I: return "I";
    case KardashevBand::II: return "II";
    case KardashevBand::III: return "III";
    case KardashevBand::beyond: return "beyond";
    }
    return "?";
}

}  // namespace qmine
