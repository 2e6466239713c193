// SPDX-License-Identifier: Apache-2.0

#include "gmdrs/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gmdrs {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t frame_seed(std::uint64_t seed, std::uint64_t frame, std::uint64_t stream) {
    return seed ^ splitmix64(frame + (stream << 32));
}

TransmissionRecord transmit(const Word& c, const Field& f, const ChannelModel& model,
                            std::uint64_t frame) {
    if (c.domain != Domain::Time) throw std::invalid_argument("transmit: time-domain word expected");
    if (model.p < 0.0 || model.p > 1.0) throw std::invalid_argument("transmit: p outside [0, 1]");
    TransmissionRecord rec;
    rec.transmitted = c;
    rec.received = c;
    rec.reliabilities.resize(c.symbols.size());

    FrameRng rng(frame_seed(model.seed, frame));
    for (std::size_t i = 0; i < c.symbols.size(); ++i) {
        const double u = rng.uniform01();
        if (u < model.p) {
            // A nonzero additive offset lands on a uniformly random
            // different symbol.
            rec.received.symbols[i] ^= static_cast<Gf>(1 + rng.below(f.q() - 1));
            rec.true_support.push_back(static_cast<int>(i));
            rec.reliabilities[i] = rng.uniform(model.rel_error_lo, model.rel_error_hi);
        } else {
            rec.reliabilities[i] = rng.uniform(model.rel_correct_lo, model.rel_correct_hi);
        }
    }
    return rec;
}

TransmissionRecord simulate_frame(const Code& code, const ChannelModel& model,
                                  std::uint64_t frame) {
    FrameRng info_rng(frame_seed(model.seed, frame, 1));
    std::vector<Gf> info(code.k());
    for (Gf& s : info) s = static_cast<Gf>(info_rng.below(code.field().q()));
    return transmit(encode(info, code), code.field(), model, frame);
}

ErasureSchedule build_schedule(std::span<const double> reliabilities, const Code& code) {
    if (reliabilities.size() != code.n())
        throw std::invalid_argument("schedule: reliability vector length != n");
    for (double w : reliabilities)
        if (!(w >= 0.0) || !std::isfinite(w))
            throw std::invalid_argument("schedule: weights must be finite and >= 0");

    ErasureSchedule sched;
    sched.order.resize(code.n());
    std::iota(sched.order.begin(), sched.order.end(), 0);
    std::stable_sort(sched.order.begin(), sched.order.end(), [&](int a, int b) {
        if (reliabilities[static_cast<std::size_t>(a)] != reliabilities[static_cast<std::size_t>(b)])
            return reliabilities[static_cast<std::size_t>(a)] < reliabilities[static_cast<std::size_t>(b)];
        return a < b;
    });
    const std::size_t pairs = (code.d() - 1) / 2;
    sched.pairs.reserve(pairs);
    for (std::size_t j = 0; j < pairs; ++j)
        sched.pairs.emplace_back(sched.order[2 * j], sched.order[2 * j + 1]);
    return sched;
}

}  // namespace gmdrs
