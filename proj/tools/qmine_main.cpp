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

// qmine: fault-tolerant Grover mining resource estimator.

#include "qmine/config.hpp"
#include "qmine/energy.hpp"
#include "qmine/errors.hpp"
#include "qmine/fleet_planner.hpp"
#include "qmine/hash_ledger.hpp"
#include "qmine/hashrate_csv.hpp"
#include "qmine/hesc_ladder.hpp"
#include "qmine/report_io.hpp"
#include "qmine/svg_heatmap.hpp"
#include "qmine/verify_suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

using namespace qmine;
using json = nlohmann::ordered_json;

namespace {

struct GlobalFlags {
    std::string config_path;
    std::string format;
    std::string out;
    std::optional<std::uint64_t> seed;
    bool depth_extras = false;
    std::string width;
    std::string budget;
};

// "a:b:step" or "x,y,z".
std::vector<double> parse_number_list(const std::string& text, const std::string& what)
{
    std::vector<double> out;
    auto num = [&](const std::string& s) {
        char* end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v))
            throw InvalidInput(what + ": not a number '" + s + "'");
        return v;
    };
    if (text.find(':') != std::string::npos) {
        const auto a = text.find(':');
        const auto b = text.find(':', a + 1);
        if (b == std::string::npos)
            throw InvalidInput(what + ": range must be from:to:step");
        const double from = num(text.substr(0, a)), to = num(text.substr(a + 1, b - a - 1)),
                     step = num(text.substr(b + 1));
        if (!(step > 0.0) || to < from)
            throw InvalidInput(what + ": range needs step > 0 and to >= from");
        const auto count = static_cast<long>(std::floor((to - from) / step + 1e-9)) + 1;
        for (long i = 0; i < count; ++i)
            out.push_back(from + double(i) * step);
        return out;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        out.push_back(num(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

std::vector<std::string> split_names(const std::string& text)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        out.push_back(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

// File first, flags on top.
RunConfig effective_config(const GlobalFlags& g)
{
    RunConfig c = g.config_path.empty() ? default_config() : load_config(g.config_path);
    if (!g.format.empty())
        c.format = parse_output_format(g.format);
    if (!g.out.empty())
        c.out_path = g.out;
    if (g.seed)
        c.seed = *g.seed;
    if (g.depth_extras)
        c.oracle.depth_extras = true;
    if (!g.width.empty())
        c.footprint.width = parse_width_mode(g.width);
    if (!g.budget.empty())
        c.footprint.budget = parse_budget_mode(g.budget);
    c.validate();
    return c;
}

std::string render_key_values(const std::vector<std::pair<std::string, std::string>>& kv, OutputFormat format)
{
    if (format == OutputFormat::json) {
        json j;
        for (const auto& [k, v] : kv)
            j[k] = v;
        return j.dump(2) + "\n";
    }
    std::string out;
    if (format == OutputFormat::csv) {
        out = "key,value\n";
        for (const auto& [k, v] : kv)
            out += k + "," + v + "\n";
        return out;
    }
    std::size_t w = 0;
    for (const auto& kv_pair : kv)
        w = std::max(w, kv_pair.first.size());
    for (const auto& [k, v] : kv)
        out += k + std::string(w + 2 - k.size(), ' ') + v + "\n";
    return out;
}

std::string lq_text(const LogQuantity& q)
{
    if (q.is_zero())
        return "0";
    if (q.log10() < 15.0)
        return format_g6(q.value());
    return "1e" + format_g6(q.log10());
}

// ---------------------------------------------------------------- ledger

struct LedgerArgs {
    std::string pipeline = "header";
    std::string adder = "cdkm_baseline";
    std::string synthesis = "relative_phase";
    int blocks = 1;
};

int run_ledger(const GlobalFlags& g, const LedgerArgs& a)
{
    const RunConfig c = effective_config(g);
    HashPipeline p;
    p.kind = parse_pipeline_kind(a.pipeline);
    p.blocks = p.kind == PipelineKind::double_sha256_header ? 3 : a.blocks;
    const AdderModel adder = parse_adder_model(a.adder);
    const ToffoliSynthesis synth = parse_synthesis(a.synthesis);
    const GateLedger led = pipeline_ledger(p, adder, synth);
    const GateLedger base = pipeline_ledger(p, AdderModel::cdkm_baseline, synth);
    const GateLedger gid = pipeline_ledger(p, AdderModel::gidney_scheduled, synth);
    const GateLedger cs = pipeline_ledger(p, AdderModel::carry_save, synth);
    const std::int64_t std_penalty = 3 * led.total_toffolis;

    std::vector<std::pair<std::string, std::string>> kv = {
        {"pipeline", std::string(to_string(p.kind))},
        {"adder", std::string(to_string(adder))},
        {"synthesis", std::string(to_string(synth))},
        {"adders", std::to_string(led.adders)},
        {"boolean_toffolis", std::to_string(led.boolean_toffolis)},
        {"total_toffolis", std::to_string(led.total_toffolis)},
        {"t_count", std::to_string(led.t_count)},
        {"standard_synthesis_penalty", std::to_string(synth == ToffoliSynthesis::standard ? 0 : std_penalty)},
        {"t_depth", std::to_string(led.t_depth)},
        {"t_depth_delta_gidney", std::to_string(gid.t_depth - base.t_depth)},
        {"t_depth_delta_carry_save", std::to_string(cs.t_depth - base.t_depth)},
        {"t_depth_estimated", led.t_depth_estimated ? "true" : "false"},
        {"cnots", std::to_string(led.cnots)},
        {"logical_width", std::to_string(led.logical_width)},
    };
    write_output(render_key_values(kv, c.format), c.out_path);
    return 0;
}

// -------------------------------------------------------------- estimate

struct EstimateArgs {
    std::optional<double> bits;
    std::optional<double> difficulty;
    double t_cap = std::numeric_limits<double>::infinity();
    double pt = 0.5;
    std::string arch;
    std::string pipeline;
    std::optional<int> register_bits;
    std::optional<int> alpha;
    std::optional<std::int64_t> n_tx;
    std::optional<double> beta;
    std::string adder;
    std::string synthesis;
    bool diffusion_in_factories = false;
    std::optional<double> fixed_point_factor;
};

int run_estimate(const GlobalFlags& g, const EstimateArgs& a)
{
    RunConfig c = effective_config(g);
    OracleSpec o = c.oracle;
    if (!a.pipeline.empty()) {
        o.pipeline.kind = parse_pipeline_kind(a.pipeline);
        o.pipeline.blocks = o.pipeline.kind == PipelineKind::double_sha256_header ? 3 : 1;
        if (o.pipeline.kind == PipelineKind::p2pkh || o.pipeline.kind == PipelineKind::ripemd160)
            o.register_bits = 160;
    }
    if (a.register_bits)
        o.register_bits = *a.register_bits;
    if (a.alpha)
        o.alpha_merkle = *a.alpha;
    if (a.n_tx)
        o.n_tx = *a.n_tx;
    if (a.beta)
        o.beta_midstate = *a.beta;
    if (!a.adder.empty())
        o.adder = parse_adder_model(a.adder);
    if (!a.synthesis.empty())
        o.synthesis = parse_synthesis(a.synthesis);
    if (a.fixed_point_factor)
        o.fixed_point_factor = *a.fixed_point_factor;
    FootprintOptions fo = c.footprint;
    if (a.diffusion_in_factories)
        fo.diffusion_in_factory_demand = true;

    const ArchitectureSpec arch = c.resolve_arch(a.arch.empty() ? c.arch_names.front() : a.arch);
    const bool address_search = o.pipeline.kind != PipelineKind::double_sha256_header
                                && o.pipeline.kind != PipelineKind::sha256_compression;
    std::optional<SearchSpec> search;
    double b = 0.0;
    if (a.bits) {
        b = *a.bits;
        search = SearchSpec::from_bits(o.register_bits, b);
    } else if (a.difficulty || !address_search) {
        const double D = a.difficulty.value_or(1.0);
        search.emplace(o.register_bits, marked_states(o.register_bits, D));
        b = difficulty_to_bits(D).bits;
    } else {
        // Address preimage: one marked state.
        b = o.register_bits;
        search = SearchSpec::from_bits(o.register_bits, b);
    }

    const GroverPlan plan = plan_grover(o, *search, a.t_cap, arch.tau_s);
    std::vector<std::pair<std::string, std::string>> kv = {
        {"pipeline", std::string(to_string(o.pipeline.kind))},
        {"register_bits", std::to_string(o.register_bits)},
        {"difficulty_bits", format_g6(b)},
        {"log2_marked", format_g6(search->marked().log2())},
        {"arch", arch.name},
        {"t_cap_s", std::isinf(a.t_cap) ? "inf" : format_g6(a.t_cap)},
        {"T_oracle", std::to_string(plan.T_oracle)},
        {"T_depth_iter", std::to_string(plan.T_depth_iter)},
        {"t_iter_s", format_g6(plan.t_iter_seconds)},
        {"r_ideal", lq_text(plan.r_ideal)},
        {"r_cap", lq_text(plan.r_cap)},
        {"feasible", plan.feasible ? "true" : "false"},
    };
    if (plan.feasible) {
        const MachineFootprint fp = *machine_footprint(plan, o, arch, fo);
        const LogQuantity machines = fleet_size(*plan.P1, a.pt);
        const LogQuantity fleet = machines * fp.total_qubits;
        const LogQuantity watts = fleet_power(fleet, arch);
        const KardashevClass k = kardashev_classify(watts);
        const std::vector<std::pair<std::string, std::string>> more = {
            {"T_tot", lq_text(plan.T_tot)},
            {"P1", plan.P1->log10() > -15 ? format_g6(plan.P1->value()) : "1e" + format_g6(plan.P1->log10())},
            {"budget", std::string(to_string(fo.budget))},
            {"width_mode", std::string(to_string(fo.width))},
            {"logical_width", std::to_string(fp.logical_width_used)},
            {"code_distance", std::to_string(fp.code_distance)},
            {"data_qubits", lq_text(fp.data_qubits)},
            {"factory_count", lq_text(fp.factory_count)},
            {"factories_include_diffusion", fo.diffusion_in_factory_demand ? "true" : "false"},
            {"factory_qubits", lq_text(fp.factory_qubits)},
            {"total_qubits", lq_text(fp.total_qubits)},
            {"logical_runtime_s", format_g6(fp.logical_runtime_seconds)},
            {"Pt", format_g6(a.pt)},
            {"log10_machines", format_g6(machines.log10())},
            {"log10_fleet_qubits", format_g6(fleet.log10())},
            {"fleet_watts_log10", format_g6(watts.log10())},
            {"kardashev_band", std::string(to_string(k.band))},
            {"kardashev_index", format_g6(k.index)},
            {"note_runtime", "runtime = r_cap * T_depth_iter * tau; comparator and diffusion depth only with "
                             "--depth-extras"},
        };
        kv.insert(kv.end(), more.begin(), more.end());
    }
    write_output(render_key_values(kv, c.format), c.out_path);
    return 0;
}

// ----------------------------------------------------------------- sweep

struct SweepArgs {
    std::string bits, t_caps, targets, archs, figure, svg_prefix;
};

ReportMeta sweep_meta(const RunConfig& c, const std::string& command)
{
    ReportMeta m;
    m.command = command;
    m.footprint = c.footprint;
    m.seed = c.seed;
    m.notes = {
        c.footprint.width == WidthMode::full_width
            ? "width: full (pipeline width + search register + 33 comparator/diffusion ancillas)"
            : "width: oracle_only (pipeline width alone)",
        c.footprint.budget == FailureBudgetMode::t_count_proxy ? "failure budget: p_L <= 0.01 / T_tot"
                                                                : "failure budget: p_L <= 0.01 / (width * cycles)",
        "mainnet marker: b = 78.6 (D = 1.1e14, 2025-01-01)",
    };
    return m;
}

void apply_grid_flags(RunConfig& c, const SweepArgs& a)
{
    if (!a.bits.empty())
        c.bits = parse_number_list(a.bits, "--bits");
    if (!a.t_caps.empty())
        c.t_caps = parse_number_list(a.t_caps, "--t-caps");
    if (!a.targets.empty())
        c.targets = parse_number_list(a.targets, "--targets");
    if (!a.archs.empty())
        c.arch_names = split_names(a.archs);
    c.validate();
}

int run_sweep_cmd(const GlobalFlags& g, const SweepArgs& a)
{
    RunConfig c = effective_config(g);
    apply_grid_flags(c, a);
    const auto reports = run_sweep(c.grid(), c.oracle, c.footprint);
    if (!a.svg_prefix.empty()) {
        for (const auto& arch : c.arch_names)
            for (double pt : c.targets)
                emit_svg_heatmap(heatmap_from_reports(reports, c.resolve_arch(arch).name, pt),
                                 a.svg_prefix + "_" + arch + "_Pt" + format_g6(pt) + ".svg");
    }
    if (!a.figure.empty())
        write_output(emit_figure_series(reports, parse_figure_kind(a.figure)), c.out_path);
    else
        emit_report(reports, c.format, c.out_path, sweep_meta(c, "sweep"));
    return 0;
}

// -------------------------------------------------------------- baseline

struct BaselineArgs {
    std::string difficulty;
    std::string track;
    std::string history;
    bool series = false;
    double pt = 0.99;  // the near-certain fleet is the mainnet comparison point
    double t_cap = 600.0;
    std::string arch;
};

std::vector<EfficiencyTrack> resolve_tracks(const std::string& spec)
{
    if (spec.empty())
        return tracks::presets();
    if (spec.rfind("file:", 0) == 0) {
        const std::string path = spec.substr(5);
        const auto ing = ingest_efficiency_csv(path);
        for (const auto& w : ing.warnings)
            std::cerr << "warning: " << path << ": " << w << "\n";
        const EfficiencySample& latest = ing.samples.back();
        return {efficiency_at(ing.samples, latest.timestamp, "file@" + format_iso_date(latest.timestamp))};
    }
    return {tracks::by_name(spec)};
}

int run_baseline(const GlobalFlags& g, const BaselineArgs& a)
{
    const RunConfig c = effective_config(g);
    if (!a.history.empty()) {
        const auto ing = ingest_hashrate_csv(a.history);
        for (const auto& w : ing.warnings)
            std::cerr << "warning: " << a.history << ": " << w << "\n";
        // Without a track the series is passed through unchanged; with one,
        // each date also gets the efficiency in force and the implied power.
        std::vector<EfficiencySample> eff;
        if (a.track.rfind("file:", 0) == 0) {
            auto e = ingest_efficiency_csv(a.track.substr(5));
            for (const auto& w : e.warnings)
                std::cerr << "warning: " << a.track.substr(5) << ": " << w << "\n";
            eff = std::move(e.samples);
        } else if (!a.track.empty()) {
            eff.push_back({Date{}, tracks::by_name(a.track).joules_per_terahash});
        }
        std::string out = eff.empty() ? "timestamp,hashrate_ths\n" : "timestamp,hashrate_ths,joules_per_th,classical_watts\n";
        for (const auto& s : ing.samples) {
            out += format_iso_date(s.timestamp) + "," + format_g6(s.hashrate_ths);
            if (!eff.empty()) {
                const double jth = efficiency_at(eff, s.timestamp, "track").joules_per_terahash;
                out += "," + format_g6(jth) + "," + format_g6(s.hashrate_ths * jth);  // TH/s x J/TH = W
            }
            out += "\n";
        }
        write_output(out, c.out_path);
        return 0;
    }

    const auto tracks = resolve_tracks(a.track);
    if (a.series) {
        std::string out = "difficulty,track,hashrate_hs,classical_watts\n";
        for (const auto& t : tracks)
            for (int k = 0; k <= 30; ++k) {
                const double D = std::pow(10.0, 0.5 * k);
                out += format_g6(D) + "," + t.name + "," + format_g6(network_hashrate(D)) + ","
                       + format_g6(network_power(D, t)) + "\n";
            }
        write_output(out, c.out_path);
        return 0;
    }

    const std::vector<double> ds =
        a.difficulty.empty() ? std::vector<double>{kMainnetDifficulty} : parse_number_list(a.difficulty, "--difficulty");
    const ArchitectureSpec arch = c.resolve_arch(a.arch.empty() ? c.arch_names.front() : a.arch);

    json rows = json::array();
    std::string csv =
        "difficulty,b,track,joules_per_th,hashrate_hs,classical_watts,fleet_watts_log10,ratio_log10,kardashev_band,"
        "kardashev_index\n";
    for (double D : ds) {
        const double b = difficulty_to_bits(D).bits;
        SweepCell cell{b, a.t_cap, a.pt, arch, c.oracle, c.footprint, std::nullopt};
        const FleetReport rep = evaluate_cell(cell);
        for (const auto& t : tracks) {
            const double pcl = network_power(D, t);
            json row{{"difficulty", D},
                     {"b", b},
                     {"track", t.name},
                     {"joules_per_th", t.joules_per_terahash},
                     {"hashrate_hs", network_hashrate(D)},
                     {"classical_watts", pcl}};
            std::string line = format_g6(D) + "," + format_g6(b) + "," + t.name + ","
                               + format_g6(t.joules_per_terahash) + "," + format_g6(network_hashrate(D)) + ","
                               + format_g6(pcl) + ",";
            if (rep.feasible) {
                const PowerReport pr = power_report(rep.fleet_watts, pcl);
                row["fleet_watts_log10"] = pr.fleet_watts.log10();
                row["ratio_log10"] = pr.ratio_q_over_c.log10();
                row["kardashev_band"] = std::string(to_string(pr.kardashev.band));
                row["kardashev_index"] = pr.kardashev.index;
                line += format_g6(pr.fleet_watts.log10()) + "," + format_g6(pr.ratio_q_over_c.log10()) + ","
                        + std::string(to_string(pr.kardashev.band)) + "," + format_g6(pr.kardashev.index);
            } else {
                row["feasible"] = false;
                line += ",,,";
            }
            rows.push_back(row);
            csv += line + "\n";
        }
    }

    std::string text;
    if (c.format == OutputFormat::json) {
        json doc;
        doc["kardashev_band_edges_w"] = json{{"I", 1e16}, {"II", 1e26}, {"III", 1e36}, {"beyond", 1e46}};
        doc["quantum"] = json{{"arch", arch.name}, {"Pt", a.pt}, {"t_cap_s", a.t_cap}};
        doc["rows"] = rows;
        text = doc.dump(2) + "\n";
    } else if (c.format == OutputFormat::table) {
        text = "# Kardashev band edges (W): I 1e16, II 1e26, III 1e36, beyond 1e46\n" + csv;
    } else {
        text = csv;
    }
    write_output(text, c.out_path);
    return 0;
}

// ---------------------------------------------------------------- ladder

struct LadderArgs {
    bool sweep = false;
    bool gate_power_floor = false;
    std::string bits, t_caps, targets, archs;
};

int run_ladder(const GlobalFlags& g, const LadderArgs& a)
{
    RunConfig c = effective_config(g);
    const auto rungs = c.resolved_rungs();
    if (!a.sweep) {
        std::string csv = "tag,energy_eV,kappa,tau0_s,tau_cyc_s,ell_m,speedup_S,gate_power_floor_w\n";
        json arr = json::array();
        for (const auto& r : rungs) {
            const double floor_w = gate_power_floor(r.energy_eV, r.kappa);
            csv += r.tag + "," + format_g6(r.energy_eV) + "," + format_g6(r.kappa) + "," + format_g6(r.tau0_seconds)
                   + "," + format_g6(r.tau_cyc_seconds) + "," + format_g6(r.length_m) + "," + format_g6(r.speedup)
                   + "," + format_g6(floor_w) + "\n";
            arr.push_back(json{{"tag", r.tag},
                               {"energy_eV", r.energy_eV},
                               {"kappa", r.kappa},
                               {"tau0_s", r.tau0_seconds},
                               {"tau_cyc_s", r.tau_cyc_seconds},
                               {"ell_m", r.length_m},
                               {"speedup_S", r.speedup},
                               {"gate_power_floor_w", floor_w}});
        }
        if (c.format == OutputFormat::json) {
            json doc{{"rungs", arr},
                     {"notes", json::array({"gate_power_floor = E^2/(kappa h) in SI units"})}};
            write_output(doc.dump(2) + "\n", c.out_path);
        } else {
            write_output(csv, c.out_path);
        }
        return 0;
    }
    apply_grid_flags(c, SweepArgs{a.bits, a.t_caps, a.targets, a.archs, "", ""});
    LadderOptions lo;
    lo.add_gate_power_floor = a.gate_power_floor || c.ladder_gate_power_floor;
    const auto reports = ladder_sweep(rungs, c.grid(), c.oracle, c.footprint, lo);
    emit_report(reports, c.format, c.out_path, sweep_meta(c, "ladder"));
    return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::int64_t samples = 1 << 20;
    std::string mc_bits = "4,8,16";
    bool skip_mc = false;
};

int run_verify(const GlobalFlags& g, const VerifyArgs& a)
{
    const RunConfig c = effective_config(g);
    std::vector<CheckResult> all = verify_hash_vectors();
    const auto grover = verify_grover_closed_form();
    all.insert(all.end(), grover.begin(), grover.end());
    if (!a.skip_mc) {
        std::vector<int> bits;
        for (double b : parse_number_list(a.mc_bits, "--mc-bits"))
            bits.push_back(int(b));
        const auto mc = verify_monte_carlo(bits, a.samples, c.seed);
        all.insert(all.end(), mc.begin(), mc.end());
    }
    bool ok = true;
    std::string out;
    for (const auto& r : all) {
        ok = ok && r.passed;
        out += std::string(r.passed ? "PASS " : "FAIL ") + r.suite + " " + r.name + ": " + r.detail + "\n";
    }
    out += ok ? "all checks passed\n" : "some checks FAILED\n";
    write_output(out, c.out_path);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"qmine: fault-tolerant Grover mining resource estimator"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags g;
    app.add_option("--config", g.config_path, "JSON run configuration");
    app.add_option("--format", g.format, "csv, json or table");
    app.add_option("--out", g.out, "output path (default stdout)");
    app.add_option("--seed", g.seed, "seed for sampling");
    app.add_flag("--depth-extras", g.depth_extras, "add comparator and diffusion depth per iteration");
    app.add_option("--width", g.width, "full or oracle_only");
    app.add_option("--budget", g.budget, "t_count or volume");

    LedgerArgs la;
    auto* ledger = app.add_subcommand("ledger", "reversible gate ledger of a hash pipeline");
    ledger->add_option("--pipeline", la.pipeline, "header, p2pkh, ripemd160 or compression");
    ledger->add_option("--adder", la.adder, "cdkm_baseline, gidney_scheduled or carry_save");
    ledger->add_option("--synthesis", la.synthesis, "relative_phase or standard");
    ledger->add_option("--blocks", la.blocks, "compression blocks (compression pipeline)");

    EstimateArgs ea;
    auto* estimate = app.add_subcommand("estimate", "single-machine footprint and fleet for one cell");
    auto* o_bits = estimate->add_option("--bits", ea.bits, "difficulty bits b");
    estimate->add_option("--difficulty", ea.difficulty, "Bitcoin difficulty D")->excludes(o_bits);
    estimate->add_option("--t-cap", ea.t_cap, "runtime cap in seconds (default uncapped)");
    estimate->add_option("--pt", ea.pt, "target fleet success probability");
    estimate->add_option("--arch", ea.arch, "architecture name");
    estimate->add_option("--pipeline", ea.pipeline, "header or p2pkh");
    estimate->add_option("--register-bits", ea.register_bits, "search register width n");
    estimate->add_option("--alpha", ea.alpha, "1 to recompute the Merkle root");
    estimate->add_option("--ntx", ea.n_tx, "transactions per block");
    estimate->add_option("--beta", ea.beta, "1, or 0.5 for midstate reuse");
    estimate->add_option("--adder", ea.adder, "adder model");
    estimate->add_option("--synthesis", ea.synthesis, "Toffoli synthesis");
    estimate->add_flag("--diffusion-in-factories", ea.diffusion_in_factories, "count diffusion T in factory demand");
    estimate->add_option("--fixed-point-factor", ea.fixed_point_factor, "oracle-call multiplier");

    SweepArgs sa;
    auto* sweep = app.add_subcommand("sweep", "fleet sweep over b x t_cap x Pt x architecture");
    sweep->add_option("--bits", sa.bits, "from:to:step or comma list");
    sweep->add_option("--t-caps", sa.t_caps, "runtime caps (s)");
    sweep->add_option("--targets", sa.targets, "success targets Pt");
    sweep->add_option("--archs", sa.archs, "comma-separated architecture names");
    sweep->add_option("--figure", sa.figure, "fleet-heatmap or fleet-tradeoff data series");
    sweep->add_option("--svg", sa.svg_prefix, "write one SVG heatmap per (arch, Pt) with this prefix");

    BaselineArgs ba;
    auto* baseline = app.add_subcommand("baseline", "classical network power and quantum comparison");
    baseline->add_option("--difficulty", ba.difficulty, "difficulty list (default mainnet 1.1e14)");
    baseline->add_option("--track", ba.track, "s9, s19, s21 or file:<csv>");
    baseline->add_option("--history", ba.history, "hashrate history CSV to emit as a series");
    baseline->add_flag("--series", ba.series, "power versus difficulty series per track");
    baseline->add_option("--pt", ba.pt, "quantum fleet success target (default 0.99)");
    baseline->add_option("--t-cap", ba.t_cap, "quantum runtime cap (s)");
    baseline->add_option("--arch", ba.arch, "quantum architecture");

    LadderArgs lda;
    auto* ladder = app.add_subcommand("ladder", "energy-scale ladder table or rescaled sweep");
    ladder->add_flag("--sweep", lda.sweep, "rerun the sweep for every rung");
    ladder->add_flag("--gate-power-floor", lda.gate_power_floor, "add the gate-power floor per qubit");
    ladder->add_option("--bits", lda.bits, "from:to:step or comma list");
    ladder->add_option("--t-caps", lda.t_caps, "runtime caps (s)");
    ladder->add_option("--targets", lda.targets, "success targets Pt");
    ladder->add_option("--archs", lda.archs, "comma-separated architecture names");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "hash vectors, simulator and Monte Carlo checks");
    verify->add_option("--samples", va.samples, "Monte Carlo samples per b");
    verify->add_option("--mc-bits", va.mc_bits, "difficulty bits to sample");
    verify->add_flag("--skip-mc", va.skip_mc, "skip Monte Carlo");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*ledger)
            return run_ledger(g, la);
        if (*estimate)
            return run_estimate(g, ea);
        if (*sweep)
            return run_sweep_cmd(g, sa);
        if (*baseline)
            return run_baseline(g, ba);
        if (*ladder)
            return run_ladder(g, lda);
        if (*verify)
            return run_verify(g, va);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
