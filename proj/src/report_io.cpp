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

#include "qmine/report_io.hpp"

#include "qmine/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <tuple>

namespace qmine {

using json = nlohmann::ordered_json;

namespace {

const std::vector<std::string> kBaseColumns = {"b", "t_cap_s", "Pt", "arch"};
const std::vector<std::string> kTailColumns = {"feasible",       "d",         "log10_machines",    "log10_fleet_qubits",
                                               "machine_qubits", "runtime_s", "fleet_watts_log10", "kardashev_band"};

std::string opt_num(const std::optional<double>& v)
{
    return v ? format_g6(*v) : std::string();
}

std::vector<std::string> split_csv_line(std::string_view line)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        out.emplace_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

double to_double(const std::string& s, const std::string& where)
{
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size())
        throw InvalidInput(where + ": not a number '" + s + "'");
    return v;
}

std::optional<double> to_opt_double(const std::string& s, const std::string& where)
{
    if (s.empty())
        return std::nullopt;
    return to_double(s, where);
}

json lq_json(const LogQuantity& q)
{
    if (q.is_zero())
        return json{{"log10", nullptr}, {"value", 0.0}};
    json j{{"log10", q.log10()}};
    if (auto lin = q.linear())
        j["value"] = *lin;
    else
        j["value"] = nullptr;
    return j;
}

json arch_json(const ArchitectureSpec& a)
{
    return json{{"name", a.name},
                {"tau_s", a.tau_s},
                {"lambda", a.layout_lambda},
                {"p_phys", a.p_phys},
                {"watts_per_qubit", a.watts_per_qubit},
                {"efficiency", a.efficiency}};
}

json report_json(const FleetReport& r)
{
    json j;
    j["b"] = r.cell.difficulty_bits;
    j["t_cap_s"] = r.cell.t_cap_seconds;
    j["Pt"] = r.cell.target_success;
    j["arch"] = arch_json(r.cell.arch);
    if (r.cell.rung_tag)
        j["rung_tag"] = *r.cell.rung_tag;
    j["feasible"] = r.feasible;
    j["r_ideal"] = lq_json(r.plan.r_ideal);
    j["t_iter_s"] = r.plan.t_iter_seconds;
    j["T_oracle"] = r.plan.T_oracle;
    j["T_depth_iter"] = r.plan.T_depth_iter;
    if (!r.feasible) {
        j["r_cap"] = 0;
        return j;
    }
    const MachineFootprint& m = *r.machine;
    j["r_cap"] = lq_json(r.plan.r_cap);
    j["P1"] = lq_json(*r.plan.P1);
    j["T_tot"] = lq_json(r.plan.T_tot);
    j["d"] = m.code_distance;
    j["machine"] = json{{"logical_width", m.logical_width_used},
                        {"data_qubits", lq_json(m.data_qubits)},
                        {"factory_count", lq_json(m.factory_count)},
                        {"factory_qubits", lq_json(m.factory_qubits)},
                        {"total_qubits", lq_json(m.total_qubits)},
                        {"runtime_s", m.logical_runtime_seconds}};
    j["n_machines"] = lq_json(r.n_machines);
    j["fleet_qubits"] = lq_json(r.fleet_qubits);
    j["fleet_watts"] = lq_json(r.fleet_watts);
    j["kardashev"] = json{{"band", std::string(to_string(r.kardashev.band))}, {"index", r.kardashev.index}};
    return j;
}

}  // namespace

std::string format_g6(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

ReportRow to_row(const FleetReport& r)
{
    ReportRow row;
    row.b = r.cell.difficulty_bits;
    row.t_cap_s = r.cell.t_cap_seconds;
    row.Pt = r.cell.target_success;
    row.arch = r.cell.arch.name;
    row.rung_tag = r.cell.rung_tag;
    row.feasible = r.feasible;
    if (!r.feasible)
        return row;
    row.d = r.machine->code_distance;
    row.log10_machines = r.n_machines.log10();
    row.log10_fleet_qubits = r.fleet_qubits.log10();
    row.machine_qubits = r.machine->total_qubits.value();
    row.runtime_s = r.machine->logical_runtime_seconds;
    row.fleet_watts_log10 = r.fleet_watts.log10();
    row.kardashev_band = std::string(to_string(r.kardashev.band));
    return row;
}

std::vector<ReportRow> to_rows(const std::vector<FleetReport>& reports)
{
    std::vector<ReportRow> rows;
    rows.reserve(reports.size());
    for (const auto& r : reports)
        rows.push_back(to_row(r));
    return rows;
}

std::string emit_csv(const std::vector<ReportRow>& rows)
{
    const bool tagged = std::any_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.rung_tag.has_value(); });
    std::string out;
    std::vector<std::string> header = kBaseColumns;
    if (tagged)
        header.push_back("rung_tag");
    header.insert(header.end(), kTailColumns.begin(), kTailColumns.end());
    for (std::size_t i = 0; i < header.size(); ++i)
        out += (i ? "," : "") + header[i];
    out += '\n';

    for (const auto& r : rows) {
        std::vector<std::string> f = {format_g6(r.b), format_g6(r.t_cap_s), format_g6(r.Pt), r.arch};
        if (tagged)
            f.push_back(r.rung_tag.value_or(""));
        f.push_back(r.feasible ? "true" : "false");
        f.push_back(r.d ? std::to_string(*r.d) : "");
        f.push_back(opt_num(r.log10_machines));
        f.push_back(opt_num(r.log10_fleet_qubits));
        f.push_back(opt_num(r.machine_qubits));
        f.push_back(opt_num(r.runtime_s));
        f.push_back(opt_num(r.fleet_watts_log10));
        f.push_back(r.kardashev_band.value_or(""));
        for (std::size_t i = 0; i < f.size(); ++i)
            out += (i ? "," : "") + f[i];
        out += '\n';
    }
    return out;
}

std::vector<ReportRow> parse_report_csv(std::string_view text)
{
    std::vector<ReportRow> rows;
    std::size_t pos = 0, line_no = 0;
    bool tagged = false, header_seen = false;
    while (pos < text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line.empty())
            continue;
        const auto f = split_csv_line(line);
        const std::string where = "line " + std::to_string(line_no);
        if (!header_seen) {
            std::vector<std::string> expect = kBaseColumns;
            tagged = f.size() == kBaseColumns.size() + kTailColumns.size() + 1;
            if (tagged)
                expect.push_back("rung_tag");
            expect.insert(expect.end(), kTailColumns.begin(), kTailColumns.end());
            if (f != expect)
                throw InvalidInput(where + ": unexpected report CSV header");
            header_seen = true;
            continue;
        }
        const std::size_t want = kBaseColumns.size() + kTailColumns.size() + (tagged ? 1 : 0);
        if (f.size() != want)
            throw InvalidInput(where + ": expected " + std::to_string(want) + " fields");
        ReportRow r;
        std::size_t i = 0;
        r.b = to_double(f[i++], where);
        r.t_cap_s = to_double(f[i++], where);
        r.Pt = to_double(f[i++], where);
        r.arch = f[i++];
        if (tagged) {
            if (!f[i].empty())
                r.rung_tag = f[i];
            ++i;
        }
        if (f[i] != "true" && f[i] != "false")
            throw InvalidInput(where + ": feasible must be true or false");
        r.feasible = f[i++] == "true";
        if (!f[i].empty())
            r.d = int(to_double(f[i], where));
        ++i;
        r.log10_machines = to_opt_double(f[i++], where);
        r.log10_fleet_qubits = to_opt_double(f[i++], where);
        r.machine_qubits = to_opt_double(f[i++], where);
        r.runtime_s = to_opt_double(f[i++], where);
        r.fleet_watts_log10 = to_opt_double(f[i++], where);
        if (!f[i].empty())
            r.kardashev_band = f[i];
        rows.push_back(std::move(r));
    }
    if (!header_seen)
        throw InvalidInput("empty report CSV");
    return rows;
}

std::string emit_json(const std::vector<FleetReport>& reports, const ReportMeta& meta)
{
    json doc;
    json m;
    m["command"] = meta.command;
    m["budget"] = std::string(to_string(meta.footprint.budget));
    m["width"] = std::string(to_string(meta.footprint.width));
    m["diffusion_in_factory_demand"] = meta.footprint.diffusion_in_factory_demand;
    m["seed"] = meta.seed;
    m["notes"] = meta.notes;
    doc["metadata"] = m;
    json cells = json::array();
    for (const auto& r : reports)
        cells.push_back(report_json(r));
    doc["cells"] = cells;
    return doc.dump(2) + "\n";
}

std::string emit_table(const std::vector<ReportRow>& rows)
{
    const std::string csv = emit_csv(rows);
    std::vector<std::vector<std::string>> grid;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        const std::size_t nl = csv.find('\n', pos);
        grid.push_back(split_csv_line(std::string_view(csv).substr(pos, nl - pos)));
        pos = nl + 1;
    }
    std::vector<std::size_t> width(grid.front().size(), 0);
    for (const auto& row : grid)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    std::string out;
    for (const auto& row : grid) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::string cell = row[c].empty() ? "-" : row[c];
            line += cell + std::string(width[c] + 2 - cell.size(), ' ');
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        out += line + "\n";
    }
    return out;
}

std::string render_report(const std::vector<FleetReport>& reports, OutputFormat format, const ReportMeta& meta)
{
    switch (format) {
    case OutputFormat::csv: return emit_csv(to_rows(reports));
    case OutputFormat::json: return emit_json(reports, meta);
    case OutputFormat::table: return emit_table(to_rows(reports));
    }
    return {};
}

void write_output(const std::string& text, const std::string& path)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        if (!std::cout)
            throw IoError("failed writing to stdout");
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    out << text;
    out.close();
    if (!out)
        throw IoError("failed writing '" + path + "'");
}

void emit_report(const std::vector<FleetReport>& reports, OutputFormat format, const std::string& destination,
                 const ReportMeta& meta)
{
    if (reports.empty())
        throw InvalidInput("no reports to emit");
    write_output(render_report(reports, format, meta), destination);
}

FigureKind parse_figure_kind(std::string_view s)
{
    if (s == "fleet-heatmap")
        return FigureKind::fleet_heatmap;
    if (s == "fleet-tradeoff")
        return FigureKind::fleet_tradeoff;
    throw InvalidInput("unknown figure '" + std::string(s) + "' (expected fleet-heatmap or fleet-tradeoff)");
}

std::string emit_figure_series(const std::vector<FleetReport>& reports, FigureKind kind)
{
    // Heatmap panels are (arch, Pt) with t_cap rows and b columns; tradeoff
    // curves are (arch, Pt, b) traced along t_cap.
    std::vector<const FleetReport*> order;
    for (const auto& r : reports)
        order.push_back(&r);
    auto key = [&](const FleetReport* r) {
        const auto& c = r->cell;
        return kind == FigureKind::fleet_heatmap
                   ? std::make_tuple(c.arch.name, c.target_success, c.t_cap_seconds, c.difficulty_bits)
                   : std::make_tuple(c.arch.name, c.target_success, c.difficulty_bits, c.t_cap_seconds);
    };
    std::stable_sort(order.begin(), order.end(), [&](auto* a, auto* b) { return key(a) < key(b); });

    std::string out = kind == FigureKind::fleet_heatmap
                          ? "arch,Pt,t_cap_s,b,feasible,d,log10_fleet_qubits\n"
                          : "arch,Pt,b,t_cap_s,feasible,log10_fleet_qubits,log10_machines\n";
    for (const FleetReport* r : order) {
        const auto& c = r->cell;
        const std::string fq = r->feasible ? format_g6(r->fleet_qubits.log10()) : "";
        if (kind == FigureKind::fleet_heatmap) {
            out += c.arch.name + "," + format_g6(c.target_success) + "," + format_g6(c.t_cap_seconds) + ","
                   + format_g6(c.difficulty_bits) + "," + (r->feasible ? "true" : "false") + ","
                   + (r->feasible ? std::to_string(r->machine->code_distance) : "") + "," + fq + "\n";
        } else {
            out += c.arch.name + "," + format_g6(c.target_success) + "," + format_g6(c.difficulty_bits) + ","
                   + format_g6(c.t_cap_seconds) + "," + (r->feasible ? "true" : "false") + "," + fq + ","
                   + (r->feasible ? format_g6(r->n_machines.log10()) : "") + "\n";
        }
    }
    return out;
}

}  // namespace qmine
