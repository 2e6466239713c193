// SPDX-License-Identifier: Apache-2.0
//
// Whole-frame decoders: classical BMD, the merged GMD decoder in polynomial
// and evaluation-vector form, and the trial-based reference.
#pragma once

#include "gmdrs/oracle.hpp"

namespace gmdrs {

enum class DecoderKind : std::uint8_t { Bmd, GmdEea, GmdEeaVec, TrialGmd };

const char* to_string(DecoderKind kind);
DecoderKind parse_decoder(std::string_view name);

struct FrameOutcome {
    DecodeResult result;
    std::uint64_t mults = 0;  // field multiplications spent on this decode
    std::size_t list_len = 0;
};

struct MergedRun {
    Poly syndrome_poly;
    TransitionInfo init;
    CandidateList candidates;
    DecodeResult result;
    bool trivial = false;  // zero syndrome, no GMD pass needed
};

MergedRun decode_merged(const Word& r, std::span<const double> w, const Code& code,
                        bool vectors, const GmdConfig& cfg = {});

FrameOutcome decode_frame(DecoderKind kind, const Word& r, std::span<const double> w,
                          const Code& code, const GmdConfig& cfg = {});

}  // namespace gmdrs
