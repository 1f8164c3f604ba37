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

// Report schemas: CSV (6 significant digits), JSON (full precision) and an
// aligned text table, plus the figure data series.

#include "qmine/config.hpp"
#include "qmine/fleet_planner.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qmine {

/// One CSV row. Numeric fields are empty for infeasible cells.
struct ReportRow {
    double b = 0.0;
    double t_cap_s = 0.0;
    double Pt = 0.0;
    std::string arch;
    std::optional<std::string> rung_tag;
    bool feasible = false;
    std::optional<int> d;
    std::optional<double> log10_machines;
    std::optional<double> log10_fleet_qubits;
    std::optional<double> machine_qubits;
    std::optional<double> runtime_s;
    std::optional<double> fleet_watts_log10;
    std::optional<std::string> kardashev_band;
};

ReportRow to_row(const FleetReport& report);
std::vector<ReportRow> to_rows(const std::vector<FleetReport>& reports);

/// The rung_tag column appears when any row carries a tag.
std::string emit_csv(const std::vector<ReportRow>& rows);
/// Inverse of emit_csv; emit_csv(parse_report_csv(emit_csv(r))) is
/// byte-identical to emit_csv(r).
std::vector<ReportRow> parse_report_csv(std::string_view text);

/// Free-form notes carried in the JSON metadata block.
struct ReportMeta {
    std::string command;
    FootprintOptions footprint;
    std::uint64_t seed = 0;
    std::vector<std::string> notes;
};

std::string emit_json(const std::vector<FleetReport>& reports, const ReportMeta& meta);
std::string emit_table(const std::vector<ReportRow>& rows);

/// Renders in the requested format.
std::string render_report(const std::vector<FleetReport>& reports, OutputFormat format, const ReportMeta& meta);

/// Writes to `path`, or stdout when path is empty or "-". Throws IoError.
void write_output(const std::string& text, const std::string& path);

/// Throws InvalidInput for an empty report list, IoError when unwritable.
void emit_report(const std::vector<FleetReport>& reports, OutputFormat format, const std::string& destination,
                 const ReportMeta& meta = {});

enum class FigureKind { fleet_heatmap, fleet_tradeoff };
FigureKind parse_figure_kind(std::string_view s);

/// Data series behind the two fleet figures, as CSV.
std::string emit_figure_series(const std::vector<FleetReport>& reports, FigureKind kind);

/// printf-style %.6g.
std::string format_g6(double v);

}  // namespace qmine
