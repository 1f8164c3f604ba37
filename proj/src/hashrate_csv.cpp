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

#include "qmine/hashrate_csv.hpp"

#include "qmine/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qmine {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

int parse_fixed_int(std::string_view s)
{
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw InvalidInput("bad digits '" + std::string(s) + "'");
    return v;
}

double parse_double(std::string_view s)
{
    // from_chars for double is unavailable on older libstdc++.
    std::string buf(s);
    char* end = nullptr;
    const double v = std::strtod(buf.c_str(), &end);
    if (buf.empty() || end != buf.c_str() + buf.size())
        throw InvalidInput("not a number: '" + buf + "'");
    return v;
}

template <class Sample, class Make>
Ingested<Sample> parse_dated_csv(std::string_view text, std::string_view value_column, Make make)
{
    Ingested<Sample> out;
    std::size_t line_no = 0;
    bool saw_header = false;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        line = trim(line);
        if (line.empty())
            continue;
        const std::string where = "line " + std::to_string(line_no) + ": ";
        const std::size_t comma = line.find(',');
        if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos)
            throw InvalidInput(where + "expected exactly two comma-separated fields");
        const std::string_view a = trim(line.substr(0, comma));
        const std::string_view b = trim(line.substr(comma + 1));
        if (!saw_header) {
            if (a != "timestamp" || b != value_column)
                throw InvalidInput(where + "expected header 'timestamp," + std::string(value_column) + "'");
            saw_header = true;
            continue;
        }
        try {
            const Date d = parse_iso_date(a);
            const double v = parse_double(b);
            if (!std::isfinite(v) || v <= 0.0)
                throw InvalidInput(std::string(value_column) + " must be positive");
            out.samples.push_back(make(d, v));
        } catch (const InvalidInput& e) {
            throw InvalidInput(where + e.what());
        }
    }
    if (!saw_header)
        throw InvalidInput("empty CSV file");
    if (out.samples.empty())
        throw InvalidInput("CSV file has a header but no data rows");

    auto by_date = [](const Sample& x, const Sample& y) { return x.timestamp < y.timestamp; };
    if (!std::is_sorted(out.samples.begin(), out.samples.end(), by_date)) {
        out.warnings.push_back("rows were out of order and have been sorted by timestamp");
        std::stable_sort(out.samples.begin(), out.samples.end(), by_date);
    }
    auto same_date = [](const Sample& x, const Sample& y) { return x.timestamp == y.timestamp; };
    const auto last = std::unique(out.samples.begin(), out.samples.end(), same_date);
    if (last != out.samples.end()) {
        out.warnings.push_back("dropped " + std::to_string(std::distance(last, out.samples.end()))
                               + " row(s) with duplicate timestamps");
        out.samples.erase(last, out.samples.end());
    }
    return out;
}

}  // namespace

Date parse_iso_date(std::string_view text)
{
    text = trim(text);
    if (const auto t = text.find('T'); t != std::string_view::npos)
        text = text.substr(0, t);
    if (text.size() != 10 || text[4] != '-' || text[7] != '-')
        throw InvalidInput("expected an ISO-8601 date YYYY-MM-DD, got '" + std::string(text) + "'");
    const int y = parse_fixed_int(text.substr(0, 4));
    const int m = parse_fixed_int(text.substr(5, 2));
    const int d = parse_fixed_int(text.substr(8, 2));
    const std::chrono::year_month_day ymd{std::chrono::year(y), std::chrono::month(unsigned(m)),
                                          std::chrono::day(unsigned(d))};
    if (!ymd.ok())
        throw InvalidInput("impossible calendar date '" + std::string(text) + "'");
    return Date(ymd);
}

std::string format_iso_date(Date d)
{
    const std::chrono::year_month_day ymd(d);
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", int(ymd.year()), unsigned(ymd.month()), unsigned(ymd.day()));
    return buf;
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Ingested<HashrateSample> parse_hashrate_csv(std::string_view text)
{
    return parse_dated_csv<HashrateSample>(text, "hashrate_ths",
                                           [](Date d, double v) { return HashrateSample{d, v}; });
}

Ingested<HashrateSample> ingest_hashrate_csv(const std::string& path)
{
    return parse_hashrate_csv(read_text_file(path));
}

Ingested<EfficiencySample> parse_efficiency_csv(std::string_view text)
{
    return parse_dated_csv<EfficiencySample>(text, "joules_per_th",
                                             [](Date d, double v) { return EfficiencySample{d, v}; });
}

Ingested<EfficiencySample> ingest_efficiency_csv(const std::string& path)
{
    return parse_efficiency_csv(read_text_file(path));
}

EfficiencyTrack efficiency_at(const std::vector<EfficiencySample>& samples, Date when, std::string name)
{
    if (samples.empty())
        throw InvalidInput("efficiency track has no samples");
    const EfficiencySample* pick = &samples.front();
    for (const auto& s : samples)
        if (s.timestamp <= when)
            pick = &s;
    return EfficiencyTrack{std::move(name), pick->joules_per_terahash};
}

}  // namespace qmine
