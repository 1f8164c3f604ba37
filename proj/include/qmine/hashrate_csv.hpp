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

// Ingestion of dated CSV series: network hashrate history and piecewise
// miner-efficiency tracks.

#include "qmine/energy.hpp"

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

namespace qmine {

using Date = std::chrono::sys_days;

/// Strict YYYY-MM-DD (an optional "T..." time suffix is ignored). Throws
/// InvalidInput on anything else or on an impossible calendar date.
Date parse_iso_date(std::string_view text);
std::string format_iso_date(Date d);

struct HashrateSample {
    Date timestamp;
    double hashrate_ths = 0.0;
    friend bool operator==(const HashrateSample&, const HashrateSample&) = default;
};

struct EfficiencySample {
    Date timestamp;
    double joules_per_terahash = 0.0;
    friend bool operator==(const EfficiencySample&, const EfficiencySample&) = default;
};

template <class Sample>
struct Ingested {
    std::vector<Sample> samples;
    std::vector<std::string> warnings;
};

/// Header `timestamp,hashrate_ths`. Rows are sorted by date and duplicate
/// dates keep the first row; both emit warnings. Errors name the line.
Ingested<HashrateSample> parse_hashrate_csv(std::string_view text);
Ingested<HashrateSample> ingest_hashrate_csv(const std::string& path);

/// Header `timestamp,joules_per_th`, same rules.
Ingested<EfficiencySample> parse_efficiency_csv(std::string_view text);
Ingested<EfficiencySample> ingest_efficiency_csv(const std::string& path);

/// Step interpolation: the latest sample at or before `when`, else the first.
EfficiencyTrack efficiency_at(const std::vector<EfficiencySample>& samples, Date when, std::string name);

std::string read_text_file(const std::string& path);

}  // namespace qmine
