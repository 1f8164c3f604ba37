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

// Closed-form logical gate ledgers for reversible SHA-256 / RIPEMD-160
// pipelines. Counts are modeled, not synthesized: every figure below follows
// from per-adder costs, per-round boolean layers and a small table of
// calibrated wiring constants.

#include <cstdint>
#include <string>
#include <string_view>

namespace qmine {

enum class AdderModel { cdkm_baseline, gidney_scheduled, carry_save };
enum class ToffoliSynthesis { relative_phase, standard };

enum class PipelineKind { sha256_compression, double_sha256_header, ripemd160, p2pkh };

struct HashPipeline {
    PipelineKind kind = PipelineKind::double_sha256_header;
    /// Only meaningful for sha256_compression.
    int blocks = 1;

    static HashPipeline header() { return {PipelineKind::double_sha256_header, 3}; }
    static HashPipeline address() { return {PipelineKind::p2pkh, 1}; }
    static HashPipeline compression(int blocks) { return {PipelineKind::sha256_compression, blocks}; }
    static HashPipeline ripemd() { return {PipelineKind::ripemd160, 0}; }

    /// Digest width compared by the Grover threshold test.
    int output_bits() const;
    friend bool operator==(const HashPipeline&, const HashPipeline&) = default;
};

/// Cost of one n-bit modular addition.
struct AdderCost {
    std::int64_t toffolis = 0;
    std::int64_t cnots = 0;
    std::int64_t t_count = 0;
    std::int64_t t_depth_layers = 0;
    std::int64_t ancillas = 0;
    friend bool operator==(const AdderCost&, const AdderCost&) = default;
};

struct GateLedger {
    std::int64_t adders = 0;
    std::int64_t boolean_toffolis = 0;
    std::int64_t total_toffolis = 0;
    std::int64_t t_count = 0;
    std::int64_t t_depth = 0;
    std::int64_t cnots = 0;
    std::int64_t logical_width = 0;
    /// True when t_depth is a model estimate with no published anchor
    /// (any ledger containing RIPEMD-160).
    bool t_depth_estimated = false;

    /// Field-wise sum of counts; width takes the maximum.
    GateLedger& operator+=(const GateLedger& other);
    friend GateLedger operator+(GateLedger a, const GateLedger& b) { return a += b; }
    /// Scales every count (not the width) by k.
    friend GateLedger operator*(std::int64_t k, GateLedger g);
    friend bool operator==(const GateLedger&, const GateLedger&) = default;
};

/// Calibrated constants. Values reconcile the closed-form model with the
/// published ledgers; the ledger tests pin every one of them.
namespace ledger_constants {
inline constexpr int kWordBits = 32;
inline constexpr int kShaRounds = 64;
inline constexpr int kShaStateRounds = 16;          // rounds with 7 adders
inline constexpr int kShaAddersStateRound = 7;
inline constexpr int kShaAddersSteadyRound = 10;
inline constexpr int kShaBooleanToffolisPerRound = 96;  // Ch (32) + Maj (64)
inline constexpr int kShaSigmaCnotsStateRound = 2 * 96;
inline constexpr int kShaSigmaCnotsSteadyRound = 4 * 96;
inline constexpr int kShaFeedForwardAdders = 8;
inline constexpr int kShaBooleanDepthPerRound = 5;
inline constexpr int kShaWiringCnotsPerToffoli = 3;
inline constexpr std::int64_t kCarrySaveTCountDeltaPerBlock = -64 * 128;
inline constexpr std::int64_t kCarrySaveTDepthDeltaPerBlock = -21856;
inline constexpr int kShaWidth = 8 * 32 + 16 * 32 + 2 * 32 + 1;  // 833

inline constexpr int kRipemdBranches = 2;
inline constexpr int kRipemdRoundsPerBranch = 80;
inline constexpr int kRipemdAddersPerRound = 4;
inline constexpr int kRipemdNonlinearRoundsPerBranch = 64;  // all but f0 rounds
inline constexpr int kRipemdFeedForwardAdders = 10;
inline constexpr int kRipemdWiringCnotsPerToffoli = 2;
inline constexpr int kRipemdBooleanDepthPerRound = 4;  // model estimate
inline constexpr int kRipemdWidth = 2 * 5 * 32 + 16 * 32 + 2 * 32 + 1;  // 897

inline constexpr int kDigestBufferQubits = 256;
inline constexpr int kRelativePhaseTPerToffoli = 4;
inline constexpr int kStandardTPenaltyPerToffoli = 3;
}  // namespace ledger_constants

/// Throws InvalidInput when width_bits < 1.
AdderCost adder_costs(AdderModel model, int width_bits);

GateLedger sha256_compression_ledger(int blocks, AdderModel model, ToffoliSynthesis synth);
/// Eight-adder feed-forward after one compression.
GateLedger sha256_feed_forward_ledger(AdderModel model, ToffoliSynthesis synth);
GateLedger double_sha256_ledger(AdderModel model, ToffoliSynthesis synth);
GateLedger ripemd160_rounds_ledger(AdderModel model, ToffoliSynthesis synth);
GateLedger ripemd160_feed_forward_ledger(AdderModel model, ToffoliSynthesis synth);
GateLedger ripemd160_ledger(AdderModel model, ToffoliSynthesis synth);
GateLedger p2pkh_ledger(AdderModel model, ToffoliSynthesis synth);

/// Dispatch on pipeline kind.
GateLedger pipeline_ledger(const HashPipeline& pipeline, AdderModel model, ToffoliSynthesis synth);

std::string_view to_string(AdderModel m);
std::string_view to_string(ToffoliSynthesis s);
std::string_view to_string(PipelineKind k);
AdderModel parse_adder_model(std::string_view s);
ToffoliSynthesis parse_synthesis(std::string_view s);
PipelineKind parse_pipeline_kind(std::string_view s);

}  // namespace qmine
