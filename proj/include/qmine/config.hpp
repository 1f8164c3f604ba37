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

// Run configuration: JSON document, defaults, validation and round trip.

#include "qmine/fleet_planner.hpp"
#include "qmine/hesc_ladder.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qmine {

enum class OutputFormat { csv, json, table };

struct RungSpec {
    std::string tag;
    double energy_eV = 0.0;
    double kappa = 1.0;
    friend bool operator==(const RungSpec&, const RungSpec&) = default;
};

struct RunConfig {
    OracleSpec oracle;
    FootprintOptions footprint;

    std::vector<double> bits;
    std::vector<double> t_caps;
    std::vector<double> targets;
    std::vector<std::string> arch_names;
    /// Config-defined or overridden architectures, keyed by name.
    std::map<std::string, ArchitectureSpec> arch_overrides;

    /// Empty means the preset ladder.
    std::vector<RungSpec> rungs;
    bool ladder_gate_power_floor = false;

    OutputFormat format = OutputFormat::csv;
    std::string out_path;  // empty = stdout
    std::uint64_t seed = 20250101;

    /// Throws InvalidInput naming the offending key.
    void validate() const;
    /// Preset or override for a name.
    ArchitectureSpec resolve_arch(std::string_view name) const;
    std::vector<ArchitectureSpec> resolved_archs() const;
    SweepGrid grid() const;
    std::vector<EnergyRung> resolved_rungs() const;
};

/// Default difficulty-bit axis: 16 to 256 in steps of 8.
std::vector<double> default_bits_axis();
std::vector<double> default_t_caps();

RunConfig default_config();
/// Parses a JSON document; empty text gives the defaults. Unknown keys and
/// out-of-range values raise InvalidInput with the key path.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);
/// Serializes every field; parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& config);

bool operator==(const RunConfig& a, const RunConfig& b);

std::string_view to_string(OutputFormat f);
OutputFormat parse_output_format(std::string_view s);

}  // namespace qmine
