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

// Minimal standalone SVG heatmap: one panel, log10-coloured cells, grey
// for infeasible, code distance labels and a dashed mainnet marker.

#include "qmine/fleet_planner.hpp"

#include <string>
#include <vector>

namespace qmine {

struct HeatCell {
    bool feasible = false;
    double log10_value = 0.0;
    int distance = 0;
};

struct HeatmapSpec {
    std::string title;
    /// Column axis values (difficulty bits), one per column.
    std::vector<double> column_bits;
    /// Row labels (runtime caps), one per row.
    std::vector<std::string> row_labels;
    /// rows x columns.
    std::vector<std::vector<HeatCell>> cells;
    double marker_bits = 78.6;
};

/// Throws InvalidInput for an empty or ragged matrix or mismatched labels.
std::string render_svg_heatmap(const HeatmapSpec& spec);
void emit_svg_heatmap(const HeatmapSpec& spec, const std::string& path);

/// Panel for one (architecture, Pt) slice of a sweep: t_cap rows, b columns.
HeatmapSpec heatmap_from_reports(const std::vector<FleetReport>& reports, const std::string& arch, double target);

}  // namespace qmine
