// SPDX-License-Identifier: Apache-2.0
//
// Symbol channel with per-position reliabilities and the erasure schedule
// derived from them (least reliable positions erased first, two per trial).
#pragma once

#include <cstdint>
#include <random>

#include "gmdrs/rs.hpp"

namespace gmdrs {

// mt19937_64 with hand-mapped uniforms: std::uniform_* distributions are
// implementation-defined, and golden traces need byte-identical streams on
// every platform.
class FrameRng {
public:
    explicit FrameRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
    // Uniform in [0, bound); bound <= 2^16 keeps the modulo bias negligible.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::mt19937_64 eng_;
};

std::uint64_t splitmix64(std::uint64_t x);

// Per-frame seeds derive as seed ^ hash(frame index).
std::uint64_t frame_seed(std::uint64_t seed, std::uint64_t frame, std::uint64_t stream = 0);

struct ChannelModel {
    double p = 0.1;                           // symbol error probability
    double rel_correct_lo = 0.5, rel_correct_hi = 1.0;
    double rel_error_lo = 0.0, rel_error_hi = 0.8;
    std::uint64_t seed = 0;
};

struct TransmissionRecord {
    Word transmitted;
    Word received;
    std::vector<double> reliabilities;
    std::vector<int> true_support;  // harness-only ground truth
};

// Each position is independently replaced with probability p by a uniformly
// random different symbol; reliabilities come from the conditional ranges.
// Deterministic for fixed (model.seed, frame).
TransmissionRecord transmit(const Word& c, const Field& f, const ChannelModel& model,
                            std::uint64_t frame);

// Random information word, encode, transmit; the info symbols come from a
// separately seeded stream so they do not correlate with the noise.
TransmissionRecord simulate_frame(const Code& code, const ChannelModel& model,
                                  std::uint64_t frame);

struct ErasureSchedule {
    std::vector<int> order;                    // positions by ascending reliability
    std::vector<std::pair<int, int>> pairs;    // iteration j erases pairs[j]

    // X_j = the first 2j positions of the order.
    std::span<const int> prefix(std::size_t j) const {
        return std::span<const int>(order).first(2 * j);
    }
};

// Positions sorted ascending by weight (ties by position index); pair j is
// (order[2j], order[2j+1]); floor((d-1)/2) pairs.
ErasureSchedule build_schedule(std::span<const double> reliabilities, const Code& code);

}  // namespace gmdrs
