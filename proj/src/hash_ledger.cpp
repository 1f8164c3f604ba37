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

#include "qmine/hash_ledger.hpp"

#include "qmine/errors.hpp"

#include <algorithm>
#include <string>

namespace qmine {

namespace lc = ledger_constants;

int HashPipeline::output_bits() const
{
    switch (kind) {
    case PipelineKind::sha256_compression:
    case PipelineKind::double_sha256_header:
        return 256;
    case PipelineKind::ripemd160:
    case PipelineKind::p2pkh:
        return 160;
    }
    return 256;
}

GateLedger& GateLedger::operator+=(const GateLedger& o)
{
    adders += o.adders;
    boolean_toffolis += o.boolean_toffolis;
    total_toffolis += o.total_toffolis;
    t_count += o.t_count;
    t_depth += o.t_depth;
    cnots += o.cnots;
    logical_width = std::max(logical_width, o.logical_width);
    t_depth_estimated = t_depth_estimated || o.t_depth_estimated;
    return *this;
}

GateLedger operator*(std::int64_t k, GateLedger g)
{
    g.adders *= k;
    g.boolean_toffolis *= k;
    g.total_toffolis *= k;
    g.t_count *= k;
    g.t_depth *= k;
    g.cnots *= k;
    return g;
}

AdderCost adder_costs(AdderModel model, int width_bits)
{
    if (width_bits < 1)
        throw InvalidInput("adder_costs: width_bits must be >= 1, got " + std::to_string(width_bits));
    const std::int64_t n = width_bits;
    AdderCost c;
    c.toffolis = 2 * n - 1;
    c.cnots = 5 * n - 3;
    c.t_count = lc::kRelativePhaseTPerToffoli * n;
    c.t_depth_layers = model == AdderModel::gidney_scheduled ? n + 1 : 2 * n - 1;
    c.ancillas = 1;
    return c;
}

namespace {

// Adds the standard-synthesis penalty on top of a relative-phase tally.
void apply_synthesis(GateLedger& g, ToffoliSynthesis synth)
{
    if (synth == ToffoliSynthesis::standard)
        g.t_count += lc::kStandardTPenaltyPerToffoli * g.total_toffolis;
}

// Build a ledger from adder and boolean-layer counts (relative-phase tally).
GateLedger from_parts(std::int64_t adders, std::int64_t adder_depth, const AdderCost& add,
                      std::int64_t boolean, std::int64_t boolean_depth, std::int64_t linear_cnots,
                      int wiring_cnots_per_toffoli)
{
    GateLedger g;
    g.adders = adders;
    g.boolean_toffolis = boolean;
    g.total_toffolis = adders * add.toffolis + boolean;
    g.t_count = adders * add.t_count + lc::kRelativePhaseTPerToffoli * boolean;
    g.t_depth = adders * adder_depth + boolean_depth;
    g.cnots = adders * add.cnots + linear_cnots + wiring_cnots_per_toffoli * boolean;
    return g;
}

GateLedger one_compression_block(AdderModel model)
{
    const AdderCost add = adder_costs(model, lc::kWordBits);
    const std::int64_t steady_rounds = lc::kShaRounds - lc::kShaStateRounds;
    const std::int64_t adders = lc::kShaStateRounds * lc::kShaAddersStateRound
                                + steady_rounds * lc::kShaAddersSteadyRound;
    const std::int64_t boolean = std::int64_t{lc::kShaRounds} * lc::kShaBooleanToffolisPerRound;
    const std::int64_t sigma_cnots = lc::kShaStateRounds * lc::kShaSigmaCnotsStateRound
                                     + steady_rounds * lc::kShaSigmaCnotsSteadyRound;

    GateLedger g = from_parts(adders, add.t_depth_layers, add, boolean,
                              std::int64_t{lc::kShaRounds} * lc::kShaBooleanDepthPerRound,
                              sigma_cnots, lc::kShaWiringCnotsPerToffoli);
    if (model == AdderModel::carry_save) {
        g.t_count += lc::kCarrySaveTCountDeltaPerBlock;
        g.t_depth += lc::kCarrySaveTDepthDeltaPerBlock;
    }
    g.logical_width = lc::kShaWidth;
    return g;
}

// Per-adder depth for feed-forward sums: carry-save has nothing to compress
// there and falls back to the scheduled ripple.
std::int64_t feed_forward_adder_depth(AdderModel model)
{
    const AdderModel effective = model == AdderModel::carry_save ? AdderModel::gidney_scheduled : model;
    return adder_costs(effective, lc::kWordBits).t_depth_layers;
}

}  // namespace

GateLedger sha256_compression_ledger(int blocks, AdderModel model, ToffoliSynthesis synth)
{
    if (blocks < 1)
        throw InvalidInput("sha256_compression_ledger: blocks must be >= 1");
    GateLedger g = std::int64_t{blocks} * one_compression_block(model);
    apply_synthesis(g, synth);
    return g;
}

GateLedger sha256_feed_forward_ledger(AdderModel model, ToffoliSynthesis synth)
{
    const AdderCost add = adder_costs(model, lc::kWordBits);
    GateLedger g = from_parts(lc::kShaFeedForwardAdders, feed_forward_adder_depth(model), add, 0, 0, 0, 0);
    g.logical_width = lc::kShaWidth;
    apply_synthesis(g, synth);
    return g;
}

GateLedger double_sha256_ledger(AdderModel model, ToffoliSynthesis synth)
{
    // 80-byte header pads to two blocks; the 32-byte re-hash fits one.
    constexpr int kBlocks = 3;
    return sha256_compression_ledger(kBlocks, model, synth)
           + kBlocks * sha256_feed_forward_ledger(model, synth);
}

GateLedger ripemd160_rounds_ledger(AdderModel model, ToffoliSynthesis synth)
{
    const AdderCost add = adder_costs(model, lc::kWordBits);
    const std::int64_t adders = lc::kRipemdBranches * lc::kRipemdRoundsPerBranch * lc::kRipemdAddersPerRound;
    const std::int64_t boolean_rounds = lc::kRipemdBranches * lc::kRipemdNonlinearRoundsPerBranch;
    GateLedger g = from_parts(adders, add.t_depth_layers, add, boolean_rounds * lc::kWordBits,
                              boolean_rounds * lc::kRipemdBooleanDepthPerRound, 0,
                              lc::kRipemdWiringCnotsPerToffoli);
    g.logical_width = lc::kRipemdWidth;
    g.t_depth_estimated = true;
    apply_synthesis(g, synth);
    return g;
}

GateLedger ripemd160_feed_forward_ledger(AdderModel model, ToffoliSynthesis synth)
{
    const AdderCost add = adder_costs(model, lc::kWordBits);
    GateLedger g = from_parts(lc::kRipemdFeedForwardAdders, add.t_depth_layers, add, 0, 0, 0, 0);
    g.logical_width = lc::kRipemdWidth;
    g.t_depth_estimated = true;
    apply_synthesis(g, synth);
    return g;
}

GateLedger ripemd160_ledger(AdderModel model, ToffoliSynthesis synth)
{
    return ripemd160_rounds_ledger(model, synth) + ripemd160_feed_forward_ledger(model, synth);
}

GateLedger p2pkh_ledger(AdderModel model, ToffoliSynthesis synth)
{
    // A 33-byte compressed key pads to a single SHA-256 block.
    GateLedger g = sha256_compression_ledger(1, model, synth) + sha256_feed_forward_ledger(model, synth)
                   + ripemd160_ledger(model, synth);
    g.logical_width = lc::kRipemdWidth + lc::kDigestBufferQubits;
    return g;
}

GateLedger pipeline_ledger(const HashPipeline& pipeline, AdderModel model, ToffoliSynthesis synth)
{
    switch (pipeline.kind) {
    case PipelineKind::sha256_compression:
        return sha256_compression_ledger(pipeline.blocks, model, synth)
               + std::int64_t{pipeline.blocks} * sha256_feed_forward_ledger(model, synth);
    case PipelineKind::double_sha256_header:
        return double_sha256_ledger(model, synth);
    case PipelineKind::ripemd160:
        return ripemd160_ledger(model, synth);
    case PipelineKind::p2pkh:
        return p2pkh_ledger(model, synth);
    }
    throw InvalidInput("unknown pipeline");
}

std::string_view to_string(AdderModel m)
{
    switch (m) {
    case AdderModel::cdkm_baseline: return "cdkm_baseline";
    case AdderModel::gidney_scheduled: return "gidney_scheduled";
    case AdderModel::carry_save: return "carry_save";
    }
    return "?";
}

std::string_view to_string(ToffoliSynthesis s)
{
    return s == ToffoliSynthesis::standard ? "standard" : "relative_phase";
}

std::string_view to_string(PipelineKind k)
{
    switch (k) {
    case PipelineKind::sha256_compression: return "sha256_compression";
    case PipelineKind::double_sha256_header: return "double_sha256_header";
    case PipelineKind::ripemd160: return "ripemd160";
    case PipelineKind::p2pkh: return "p2pkh";
    }
    return "?";
}

AdderModel parse_adder_model(std::string_view s)
{
    if (s == "cdkm_baseline" || s == "cdkm" || s == "baseline")
        return AdderModel::cdkm_baseline;
    if (s == "gidney_scheduled" || s == "gidney")
        return AdderModel::gidney_scheduled;
    if (s == "carry_save" || s == "cs")
        return AdderModel::carry_save;
    throw InvalidInput("unknown adder model '" + std::string(s) + "'");
}

ToffoliSynthesis parse_synthesis(std::string_view s)
{
    if (s == "relative_phase" || s == "rp")
        return ToffoliSynthesis::relative_phase;
    if (s == "standard" || s == "std")
        return ToffoliSynthesis::standard;
    throw InvalidInput("unknown Toffoli synthesis '" + std::string(s) + "'");
}

PipelineKind parse_pipeline_kind(std::string_view s)
{
    if (s == "double_sha256_header" || s == "header")
        return PipelineKind::double_sha256_header;
    if (s == "p2pkh")
        return PipelineKind::p2pkh;
    if (s == "ripemd160" || s == "ripemd")
        return PipelineKind::ripemd160;
    if (s == "sha256_compression" || s == "compression")
        return PipelineKind::sha256_compression;
    throw InvalidInput("unknown pipeline '" + std::string(s) + "'");
}

}  // namespace qmine
