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

#include "qmine/config.hpp"

#include "qmine/errors.hpp"

#include <json.hpp>

#include <cctype>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace qmine {

using json = nlohmann::ordered_json;

namespace {

std::string join_path(const std::string& parent, std::string_view key)
{
    return parent.empty() ? std::string(key) : parent + "." + std::string(key);
}

void check_keys(const json& obj, const std::string& path, std::initializer_list<std::string_view> allowed)
{
    if (!obj.is_object())
        throw InvalidInput((path.empty() ? std::string("document") : path) + ": expected an object");
    for (const auto& item : obj.items()) {
        bool known = false;
        for (auto a : allowed)
            known = known || item.key() == a;
        if (!known)
            throw InvalidInput("unknown config key '" + join_path(path, item.key()) + "'");
    }
}

double get_number(const json& v, const std::string& path)
{
    if (!v.is_number())
        throw InvalidInput(path + ": expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x))
        throw InvalidInput(path + ": must be finite");
    return x;
}

std::int64_t get_integer(const json& v, const std::string& path)
{
    if (!v.is_number_integer())
        throw InvalidInput(path + ": expected an integer");
    return v.get<std::int64_t>();
}

bool get_bool(const json& v, const std::string& path)
{
    if (!v.is_boolean())
        throw InvalidInput(path + ": expected true or false");
    return v.get<bool>();
}

std::string get_string(const json& v, const std::string& path)
{
    if (!v.is_string())
        throw InvalidInput(path + ": expected a string");
    return v.get<std::string>();
}

// Wraps enum parsers so their diagnostics carry the key path.
template <class Fn>
auto parse_enum(const json& v, const std::string& path, Fn&& fn)
{
    const std::string s = get_string(v, path);
    try {
        return fn(s);
    } catch (const InvalidInput& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

std::vector<double> get_number_list(const json& v, const std::string& path)
{
    std::vector<double> out;
    if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i)
            out.push_back(get_number(v[i], path + "[" + std::to_string(i) + "]"));
        return out;
    }
    if (v.is_object()) {
        check_keys(v, path, {"from", "to", "step"});
        if (!v.contains("from") || !v.contains("to") || !v.contains("step"))
            throw InvalidInput(path + ": range needs from, to and step");
        const double from = get_number(v["from"], path + ".from");
        const double to = get_number(v["to"], path + ".to");
        const double step = get_number(v["step"], path + ".step");
        if (!(step > 0.0) || to < from)
            throw InvalidInput(path + ": range needs step > 0 and to >= from");
        const auto count = static_cast<std::int64_t>(std::floor((to - from) / step + 1e-9)) + 1;
        if (count > 100000)
            throw InvalidInput(path + ": range has too many points");
        for (std::int64_t i = 0; i < count; ++i)
            out.push_back(from + double(i) * step);
        return out;
    }
    throw InvalidInput(path + ": expected a list of numbers or a {from, to, step} range");
}

void parse_oracle(const json& j, OracleSpec& o)
{
    const std::string path = "oracle";
    check_keys(j, path,
               {"pipeline", "blocks", "register_bits", "alpha_merkle", "n_tx", "beta_midstate", "adder", "synthesis",
                "depth_extras", "fixed_point_factor"});
    if (j.contains("pipeline")) {
        o.pipeline.kind = parse_enum(j["pipeline"], path + ".pipeline", parse_pipeline_kind);
        o.pipeline.blocks = o.pipeline.kind == PipelineKind::double_sha256_header ? 3
                            : o.pipeline.kind == PipelineKind::ripemd160         ? 0
                                                                                 : 1;
    }
    if (j.contains("blocks"))
        o.pipeline.blocks = int(get_integer(j["blocks"], path + ".blocks"));
    if (j.contains("register_bits"))
        o.register_bits = int(get_integer(j["register_bits"], path + ".register_bits"));
    if (j.contains("alpha_merkle"))
        o.alpha_merkle = int(get_integer(j["alpha_merkle"], path + ".alpha_merkle"));
    if (j.contains("n_tx"))
        o.n_tx = get_integer(j["n_tx"], path + ".n_tx");
    if (j.contains("beta_midstate"))
        o.beta_midstate = get_number(j["beta_midstate"], path + ".beta_midstate");
    if (j.contains("adder"))
        o.adder = parse_enum(j["adder"], path + ".adder", parse_adder_model);
    if (j.contains("synthesis"))
        o.synthesis = parse_enum(j["synthesis"], path + ".synthesis", parse_synthesis);
    if (j.contains("depth_extras"))
        o.depth_extras = get_bool(j["depth_extras"], path + ".depth_extras");
    if (j.contains("fixed_point_factor"))
        o.fixed_point_factor = get_number(j["fixed_point_factor"], path + ".fixed_point_factor");
}

ArchitectureSpec parse_arch(const json& j, const std::string& name, const std::string& path)
{
    check_keys(j, path, {"tau_s", "lambda", "p_phys", "watts_per_qubit", "efficiency"});
    ArchitectureSpec a;
    bool preset = true;
    try {
        a = architectures::by_name(name);
    } catch (const InvalidInput&) {
        preset = false;
        a.name = name;
    }
    auto field = [&](const char* key, double& dst) {
        if (j.contains(key))
            dst = get_number(j[key], path + "." + key);
        else if (!preset)
            throw InvalidInput(path + ": custom architecture needs '" + key + "'");
    };
    field("tau_s", a.tau_s);
    field("lambda", a.layout_lambda);
    field("p_phys", a.p_phys);
    field("watts_per_qubit", a.watts_per_qubit);
    field("efficiency", a.efficiency);
    a.name = name;
    try {
        a.validate();
    } catch (const InvalidInput& e) {
        throw InvalidInput(path + ": " + e.what());
    }
    return a;
}

json arch_to_json(const ArchitectureSpec& a)
{
    return json{{"tau_s", a.tau_s},
                {"lambda", a.layout_lambda},
                {"p_phys", a.p_phys},
                {"watts_per_qubit", a.watts_per_qubit},
                {"efficiency", a.efficiency}};
}

}  // namespace

std::vector<double> default_bits_axis()
{
    std::vector<double> b;
    for (int v = 16; v <= 256; v += 8)
        b.push_back(v);
    return b;
}

std::vector<double> default_t_caps()
{
    return {1.0, 10.0, 60.0, 600.0, 3600.0, 86400.0};
}

RunConfig default_config()
{
    RunConfig c;
    c.bits = default_bits_axis();
    c.t_caps = default_t_caps();
    c.targets = {0.5, 0.99};
    c.arch_names = {"superconducting", "neutral_atom", "ion_trap"};
    return c;
}

void RunConfig::validate() const
{
    try {
        oracle.validate();
    } catch (const InvalidInput& e) {
        throw InvalidInput(std::string("oracle: ") + e.what());
    }
    if (bits.empty())
        throw InvalidInput("grid.bits: must be nonempty");
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (!std::isfinite(bits[i]) || bits[i] < 0.0)
            throw InvalidInput("grid.bits[" + std::to_string(i) + "]: must be finite and >= 0");
    if (t_caps.empty())
        throw InvalidInput("grid.t_caps: must be nonempty");
    for (std::size_t i = 0; i < t_caps.size(); ++i)
        if (!(t_caps[i] > 0.0))
            throw InvalidInput("grid.t_caps[" + std::to_string(i) + "]: must be positive");
    if (targets.empty())
        throw InvalidInput("grid.targets: must be nonempty");
    for (std::size_t i = 0; i < targets.size(); ++i)
        if (!(targets[i] > 0.0 && targets[i] < 1.0))
            throw InvalidInput("grid.targets[" + std::to_string(i) + "]: Pt must lie in (0, 1)");
    if (arch_names.empty())
        throw InvalidInput("grid.archs: must be nonempty");
    for (std::size_t i = 0; i < arch_names.size(); ++i) {
        try {
            resolve_arch(arch_names[i]);
        } catch (const InvalidInput& e) {
            throw InvalidInput("grid.archs[" + std::to_string(i) + "]: " + e.what());
        }
    }
    for (std::size_t i = 0; i < rungs.size(); ++i) {
        try {
            rung_derive(rungs[i].energy_eV, rungs[i].kappa, rungs[i].tag);
        } catch (const InvalidInput& e) {
            throw InvalidInput("ladder.rungs[" + std::to_string(i) + "]: " + e.what());
        }
    }
}

ArchitectureSpec RunConfig::resolve_arch(std::string_view name) const
{
    if (auto it = arch_overrides.find(std::string(name)); it != arch_overrides.end())
        return it->second;
    return architectures::by_name(name);
}

std::vector<ArchitectureSpec> RunConfig::resolved_archs() const
{
    std::vector<ArchitectureSpec> out;
    for (const auto& n : arch_names)
        out.push_back(resolve_arch(n));
    return out;
}

SweepGrid RunConfig::grid() const
{
    return SweepGrid{bits, t_caps, targets, resolved_archs()};
}

std::vector<EnergyRung> RunConfig::resolved_rungs() const
{
    if (rungs.empty())
        return preset_rungs();
    std::vector<EnergyRung> out;
    for (const auto& r : rungs)
        out.push_back(rung_derive(r.energy_eV, r.kappa, r.tag));
    return out;
}

RunConfig parse_config(std::string_view text)
{
    RunConfig c = default_config();
    bool blank = true;
    for (char ch : text)
        blank = blank && std::isspace(static_cast<unsigned char>(ch));
    if (blank)
        return c;

    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("config is not valid JSON: ") + e.what());
    }
    check_keys(doc, "", {"oracle", "footprint", "grid", "arch", "architectures", "ladder", "output", "seed"});

    if (doc.contains("oracle"))
        parse_oracle(doc["oracle"], c.oracle);

    if (doc.contains("footprint")) {
        const json& f = doc["footprint"];
        check_keys(f, "footprint", {"budget", "width", "diffusion_in_factory_demand"});
        if (f.contains("budget"))
            c.footprint.budget = parse_enum(f["budget"], "footprint.budget", parse_budget_mode);
        if (f.contains("width"))
            c.footprint.width = parse_enum(f["width"], "footprint.width", parse_width_mode);
        if (f.contains("diffusion_in_factory_demand"))
            c.footprint.diffusion_in_factory_demand =
                get_bool(f["diffusion_in_factory_demand"], "footprint.diffusion_in_factory_demand");
    }

    if (doc.contains("architectures")) {
        const json& a = doc["architectures"];
        if (!a.is_object())
            throw InvalidInput("architectures: expected an object keyed by name");
        for (const auto& item : a.items())
            c.arch_overrides[item.key()] = parse_arch(item.value(), item.key(), "architectures." + item.key());
    }

    if (doc.contains("grid")) {
        const json& g = doc["grid"];
        check_keys(g, "grid", {"bits", "t_caps", "targets", "archs"});
        if (g.contains("bits"))
            c.bits = get_number_list(g["bits"], "grid.bits");
        if (g.contains("t_caps"))
            c.t_caps = get_number_list(g["t_caps"], "grid.t_caps");
        if (g.contains("targets"))
            c.targets = get_number_list(g["targets"], "grid.targets");
        if (g.contains("archs")) {
            const json& names = g["archs"];
            if (!names.is_array())
                throw InvalidInput("grid.archs: expected a list of names");
            c.arch_names.clear();
            for (std::size_t i = 0; i < names.size(); ++i)
                c.arch_names.push_back(get_string(names[i], "grid.archs[" + std::to_string(i) + "]"));
        }
    }
    if (doc.contains("arch")) {
        if (doc.contains("grid") && doc["grid"].contains("archs"))
            throw InvalidInput("arch: conflicts with grid.archs");
        c.arch_names = {get_string(doc["arch"], "arch")};
    }

    if (doc.contains("ladder")) {
        const json& l = doc["ladder"];
        check_keys(l, "ladder", {"rungs", "gate_power_floor"});
        if (l.contains("gate_power_floor"))
            c.ladder_gate_power_floor = get_bool(l["gate_power_floor"], "ladder.gate_power_floor");
        if (l.contains("rungs")) {
            const json& rs = l["rungs"];
            if (!rs.is_array())
                throw InvalidInput("ladder.rungs: expected a list");
            for (std::size_t i = 0; i < rs.size(); ++i) {
                const std::string p = "ladder.rungs[" + std::to_string(i) + "]";
                check_keys(rs[i], p, {"tag", "energy_eV", "kappa"});
                if (!rs[i].contains("energy_eV") || !rs[i].contains("kappa"))
                    throw InvalidInput(p + ": needs energy_eV and kappa");
                RungSpec r;
                r.tag = rs[i].contains("tag") ? get_string(rs[i]["tag"], p + ".tag") : "rung_" + std::to_string(i);
                r.energy_eV = get_number(rs[i]["energy_eV"], p + ".energy_eV");
                r.kappa = get_number(rs[i]["kappa"], p + ".kappa");
                c.rungs.push_back(r);
            }
        }
    }

    if (doc.contains("output")) {
        const json& o = doc["output"];
        check_keys(o, "output", {"format", "path"});
        if (o.contains("format"))
            c.format = parse_enum(o["format"], "output.format", parse_output_format);
        if (o.contains("path"))
            c.out_path = get_string(o["path"], "output.path");
    }

    if (doc.contains("seed")) {
        const json& s = doc["seed"];
        if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<std::int64_t>() >= 0))
            throw InvalidInput("seed: expected a nonnegative integer");
        c.seed = s.get<std::uint64_t>();
    }

    c.validate();
    return c;
}

RunConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& c)
{
    json doc;
    doc["oracle"] = json{{"pipeline", std::string(to_string(c.oracle.pipeline.kind))},
                         {"blocks", c.oracle.pipeline.blocks},
                         {"register_bits", c.oracle.register_bits},
                         {"alpha_merkle", c.oracle.alpha_merkle},
                         {"n_tx", c.oracle.n_tx},
                         {"beta_midstate", c.oracle.beta_midstate},
                         {"adder", std::string(to_string(c.oracle.adder))},
                         {"synthesis", std::string(to_string(c.oracle.synthesis))},
                         {"depth_extras", c.oracle.depth_extras},
                         {"fixed_point_factor", c.oracle.fixed_point_factor}};
    doc["footprint"] = json{{"budget", std::string(to_string(c.footprint.budget))},
                            {"width", std::string(to_string(c.footprint.width))},
                            {"diffusion_in_factory_demand", c.footprint.diffusion_in_factory_demand}};
    json archs = json::object();
    for (const auto& [name, a] : c.arch_overrides)
        archs[name] = arch_to_json(a);
    doc["architectures"] = archs;
    doc["grid"] = json{{"bits", c.bits}, {"t_caps", c.t_caps}, {"targets", c.targets}, {"archs", c.arch_names}};
    json rungs = json::array();
    for (const auto& r : c.rungs)
        rungs.push_back(json{{"tag", r.tag}, {"energy_eV", r.energy_eV}, {"kappa", r.kappa}});
    doc["ladder"] = json{{"rungs", rungs}, {"gate_power_floor", c.ladder_gate_power_floor}};
    doc["output"] = json{{"format", std::string(to_string(c.format))}, {"path", c.out_path}};
    doc["seed"] = c.seed;
    return doc.dump(2) + "\n";
}

bool operator==(const RunConfig& a, const RunConfig& b)
{
    auto oracle_eq = [](const OracleSpec& x, const OracleSpec& y) {
        return x.pipeline == y.pipeline && x.alpha_merkle == y.alpha_merkle && x.n_tx == y.n_tx
               && x.beta_midstate == y.beta_midstate && x.register_bits == y.register_bits && x.adder == y.adder
               && x.synthesis == y.synthesis && x.depth_extras == y.depth_extras
               && x.fixed_point_factor == y.fixed_point_factor;
    };
    return oracle_eq(a.oracle, b.oracle) && a.footprint == b.footprint && a.bits == b.bits && a.t_caps == b.t_caps
           && a.targets == b.targets && a.arch_names == b.arch_names && a.arch_overrides == b.arch_overrides
           && a.rungs == b.rungs && a.ladder_gate_power_floor == b.ladder_gate_power_floor && a.format == b.format
           && a.out_path == b.out_path && a.seed == b.seed;
}

std::string_view to_string(OutputFormat f)
{
    switch (f) {
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
    case OutputFormat::table: return "table";
    }
    return "?";
}

OutputFormat parse_output_format(std::string_view s)
{
    if (s == "csv")
        return OutputFormat::csv;
    if (s == "json")
        return OutputFormat::json;
    if (s == "table")
        return OutputFormat::table;
    throw InvalidInput("unknown output format '" + std::string(s) + "' (expected csv, json or table)");
}

}  // namespace qmine
