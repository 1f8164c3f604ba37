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

#include "qmine/svg_heatmap.hpp"

#include "qmine/errors.hpp"
#include "qmine/report_io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>

namespace qmine {

namespace {

constexpr int kCell = 28;
constexpr int kLeft = 80;
constexpr int kTop = 40;
constexpr int kBottom = 50;
constexpr int kRight = 20;

// A short viridis-like ramp.
constexpr std::array<std::array<int, 3>, 5> kRamp = {{
    {68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37},
}};

std::string ramp_colour(double t)
{
    t = std::clamp(t, 0.0, 1.0) * (kRamp.size() - 1);
    const std::size_t i = std::min<std::size_t>(std::size_t(t), kRamp.size() - 2);
    const double f = t - double(i);
    char buf[16];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", int(std::lround(kRamp[i][0] + f * (kRamp[i + 1][0] - kRamp[i][0]))),
                  int(std::lround(kRamp[i][1] + f * (kRamp[i + 1][1] - kRamp[i][1]))),
                  int(std::lround(kRamp[i][2] + f * (kRamp[i + 1][2] - kRamp[i][2]))));
    return buf;
}

std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_svg_heatmap(const HeatmapSpec& spec)
{
    if (spec.cells.empty() || spec.cells.front().empty())
        throw InvalidInput("heatmap matrix must be nonempty");
    const std::size_t cols = spec.cells.front().size();
    for (const auto& row : spec.cells)
        if (row.size() != cols)
            throw InvalidInput("heatmap matrix is ragged");
    if (spec.column_bits.size() != cols || spec.row_labels.size() != spec.cells.size())
        throw InvalidInput("heatmap axis labels do not match the matrix shape");

    double lo = INFINITY, hi = -INFINITY;
    for (const auto& row : spec.cells)
        for (const auto& c : row)
            if (c.feasible) {
                lo = std::min(lo, c.log10_value);
                hi = std::max(hi, c.log10_value);
            }
    const double span = hi > lo ? hi - lo : 1.0;

    const int width = kLeft + int(cols) * kCell + kRight;
    const int height = kTop + int(spec.cells.size()) * kCell + kBottom;
    std::string svg;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" viewBox=\"0 0 %d %d\">\n",
                  width, height, width, height);
    svg += buf;
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    std::snprintf(buf, sizeof buf, "<text x=\"%d\" y=\"20\" font-size=\"13\" font-family=\"sans-serif\">", kLeft);
    svg += buf + escape(spec.title) + "</text>\n";

    for (std::size_t r = 0; r < spec.cells.size(); ++r) {
        const int y = kTop + int(r) * kCell;
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%d\" y=\"%d\" font-size=\"10\" text-anchor=\"end\" font-family=\"sans-serif\">",
                      kLeft - 6, y + kCell / 2 + 4);
        svg += buf + escape(spec.row_labels[r]) + "</text>\n";
        for (std::size_t c = 0; c < cols; ++c) {
            const HeatCell& cell = spec.cells[r][c];
            const int x = kLeft + int(c) * kCell;
            const std::string fill = cell.feasible ? ramp_colour((cell.log10_value - lo) / span) : "#b0b0b0";
            std::snprintf(buf, sizeof buf, "<rect class=\"cell\" x=\"%d\" y=\"%d\" width=\"%d\" height=\"%d\" fill=\"%s\"/>\n", x, y,
                          kCell, kCell, fill.c_str());
            svg += buf;
            if (cell.feasible) {
                std::snprintf(buf, sizeof buf,
                              "<text x=\"%d\" y=\"%d\" font-size=\"9\" text-anchor=\"middle\" fill=\"white\" "
                              "font-family=\"sans-serif\">%d</text>\n",
                              x + kCell / 2, y + kCell / 2 + 3, cell.distance);
                svg += buf;
            }
        }
    }

    const int axis_y = kTop + int(spec.cells.size()) * kCell;
    for (std::size_t c = 0; c < cols; ++c) {
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%d\" y=\"%d\" font-size=\"9\" text-anchor=\"middle\" font-family=\"sans-serif\">%s"
                      "</text>\n",
                      kLeft + int(c) * kCell + kCell / 2, axis_y + 14, format_g6(spec.column_bits[c]).c_str());
        svg += buf;
    }
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%d\" y=\"%d\" font-size=\"11\" text-anchor=\"middle\" font-family=\"sans-serif\">"
                  "difficulty bits b</text>\n",
                  kLeft + int(cols) * kCell / 2, axis_y + 34);
    svg += buf;

    // Mainnet marker, interpolated between neighbouring column centres.
    const auto [mn, mx] = std::minmax_element(spec.column_bits.begin(), spec.column_bits.end());
    if (cols > 1 && *mn <= spec.marker_bits && spec.marker_bits <= *mx) {
        double x = kLeft + kCell / 2.0;
        for (std::size_t c = 0; c + 1 < cols; ++c) {
            const double b0 = spec.column_bits[c], b1 = spec.column_bits[c + 1];
            if ((b0 <= spec.marker_bits && spec.marker_bits <= b1) || (b1 <= spec.marker_bits && spec.marker_bits <= b0)) {
                const double f = b1 != b0 ? (spec.marker_bits - b0) / (b1 - b0) : 0.0;
                x = kLeft + (double(c) + 0.5 + f) * kCell;
                break;
            }
        }
        std::snprintf(buf, sizeof buf,
                      "<line class=\"mainnet-marker\" x1=\"%.1f\" y1=\"%d\" x2=\"%.1f\" y2=\"%d\" stroke=\"black\" "
                      "stroke-width=\"1.5\" stroke-dasharray=\"5,3\"/>\n",
                      x, kTop - 4, x, axis_y + 4);
        svg += buf;
    } else if (cols == 1 && spec.column_bits.front() == spec.marker_bits) {
        const double x = kLeft + kCell / 2.0;
        std::snprintf(buf, sizeof buf,
                      "<line class=\"mainnet-marker\" x1=\"%.1f\" y1=\"%d\" x2=\"%.1f\" y2=\"%d\" stroke=\"black\" "
                      "stroke-width=\"1.5\" stroke-dasharray=\"5,3\"/>\n",
                      x, kTop - 4, x, axis_y + 4);
        svg += buf;
    }
    svg += "</svg>\n";
    return svg;
}

void emit_svg_heatmap(const HeatmapSpec& spec, const std::string& path)
{
    const std::string svg = render_svg_heatmap(spec);
    write_output(svg, path);
}

HeatmapSpec heatmap_from_reports(const std::vector<FleetReport>& reports, const std::string& arch, double target)
{
    std::vector<double> bits, caps;
    std::map<std::pair<double, double>, const FleetReport*> by_key;
    for (const auto& r : reports) {
        if (r.cell.arch.name != arch || r.cell.target_success != target)
            continue;
        bits.push_back(r.cell.difficulty_bits);
        caps.push_back(r.cell.t_cap_seconds);
        by_key[{r.cell.t_cap_seconds, r.cell.difficulty_bits}] = &r;
    }
    if (by_key.empty())
        throw InvalidInput("no sweep cells for architecture '" + arch + "' at Pt=" + format_g6(target));
    std::sort(bits.begin(), bits.end());
    bits.erase(std::unique(bits.begin(), bits.end()), bits.end());
    std::sort(caps.begin(), caps.end());
    caps.erase(std::unique(caps.begin(), caps.end()), caps.end());

    HeatmapSpec spec;
    spec.title = "log10 fleet qubits: " + arch + ", Pt=" + format_g6(target);
    spec.column_bits = bits;
    for (double cap : caps) {
        spec.row_labels.push_back("t_cap " + format_g6(cap) + " s");
        std::vector<HeatCell> row;
        for (double b : bits) {
            HeatCell cell;
            if (auto it = by_key.find({cap, b}); it != by_key.end() && it->second->feasible) {
                cell.feasible = true;
                cell.log10_value = it->second->fleet_qubits.log10();
                cell.distance = it->second->machine->code_distance;
            }
            row.push_back(cell);
        }
        spec.cells.push_back(std::move(row));
    }
    return spec;
}

}  // namespace qmine
