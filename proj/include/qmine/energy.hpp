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

// Classical network power from difficulty, quantum fleet wall-plug power,
// and Kardashev classification.

#include "qmine/lognum.hpp"
#include "qmine/surface_code.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qmine {

struct EfficiencyTrack {
    std::string name;
    double joules_per_terahash = 0.0;
    friend bool operator==(const EfficiencyTrack&, const EfficiencyTrack&) = default;
};

namespace tracks {
EfficiencyTrack s9();
EfficiencyTrack s19();
EfficiencyTrack s21();
std::vector<EfficiencyTrack> presets();
/// "s9", "s19" or "s21" (case-insensitive). Throws InvalidInput otherwise.
EfficiencyTrack by_name(std::string_view name);
}  // namespace tracks

/// Mainnet difficulty on 2025-01-01 and its difficulty-bit equivalent.
inline constexpr double kMainnetDifficulty = 1.1e14;
inline constexpr double kMainnetBits = 78.6;

/// D 2^32 / 600 hashes per second.
double network_hashrate(double difficulty);
/// eta * hashrate / 1e12 watts.
double network_power(double difficulty, const EfficiencyTrack& track);

/// fleet_qubits * watts_per_qubit / efficiency.
LogQuantity fleet_power(const LogQuantity& fleet_qubits, const ArchitectureSpec& arch);

enum class KardashevBand { sub_I, I, II, III, beyond };

inline constexpr double kKardashevTypeILog10 = 16.0;
inline constexpr double kKardashevTypeIILog10 = 26.0;
inline constexpr double kKardashevTypeIIILog10 = 36.0;
inline constexpr double kKardashevBeyondLog10 = 46.0;

struct KardashevClass {
    KardashevBand band = KardashevBand::sub_I;
    /// (log10 W - 6) / 10; -inf for zero power.
    double index = 0.0;
};

/// Band edges belong to the upper band.
KardashevClass kardashev_classify(const LogQuantity& watts);

/// fleet_watts / classical_watts. Throws InvalidInput for classical <= 0.
LogQuantity quantum_classical_ratio(const LogQuantity& fleet_watts, double classical_watts);

struct PowerReport {
    LogQuantity fleet_watts;
    double classical_watts = 0.0;
    LogQuantity ratio_q_over_c;
    KardashevClass kardashev;
};

PowerReport power_report(const LogQuantity& fleet_watts, double classical_watts);

std::string_view to_string(KardashevBand band);

}  // namespace qmine
