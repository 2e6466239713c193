// SPDX-License-Identifier: Apache-2.0
//
// Batch simulation: FER sweeps, operation-count scaling runs and
// single-frame traces, all deterministic in (config, seed) and rendered as
// versioned CSV / text reports.
#pragma once

#include <string>

#include "gmdrs/decode.hpp"

namespace gmdrs {

struct SimConfig {
    CodeSpec code{15, 7, {4, 0x13}};
    ChannelModel channel;
    std::vector<double> p_values{0.1};
    std::size_t frames = 1000;
    std::vector<DecoderKind> decoders{DecoderKind::Bmd, DecoderKind::GmdEea};
    bool use_qhat = true;
};

// Channel/config JSON: {"p": 0.1 | [..], "rel_correct": [lo, hi],
// "rel_error": [lo, hi], "seed": 42, "use_qhat": true}
void load_channel_json(const std::string& text, SimConfig& cfg);

struct FerRow {
    DecoderKind decoder;
    double p;
    std::size_t frames = 0, frame_errors = 0, symbol_errors = 0;
    double fer = 0.0, mean_list_len = 0.0, mean_mults = 0.0;
    std::vector<bool> frame_ok;  // per-frame outcome, for paired statistics
};

struct FerReport {
    std::vector<FerRow> rows;
    std::string csv;

    const FerRow& row(DecoderKind d, double p) const;
};

FerReport run_fer(const SimConfig& cfg);

struct ScalingRow {
    DecoderKind decoder;
    std::size_t n, k;
    std::size_t frames = 0;
    double mean_mults = 0.0;
    double slope = 0.0;  // fitted log-log slope, repeated on each row
};

struct ScalingConfig {
    std::vector<std::size_t> block_lengths{15, 31, 63, 127, 255};
    double p = 0.05;
    std::size_t frames = 200;
    std::uint64_t seed = 1;
    std::vector<DecoderKind> decoders{DecoderKind::Bmd, DecoderKind::GmdEeaVec,
                                      DecoderKind::TrialGmd};
    bool use_qhat = true;
};

struct ScalingReport {
    std::vector<ScalingRow> rows;
    std::string csv;

    double slope(DecoderKind d) const;
};

ScalingReport run_scaling(const ScalingConfig& cfg);

// Full decode trace of one frame: channel record, transition info, the GMD
// iteration lines, candidate summaries and the selection outcome.
std::string trace_frame(const SimConfig& cfg, std::uint64_t frame);

double fit_loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace gmdrs
