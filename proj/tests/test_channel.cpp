// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gmdrs/channel.hpp"

using namespace gmdrs;

TEST_CASE("transmit: p = 0 and p = 1 extremes") {
    Field f(4, 0x13);
    Code code(f, 7);
    const Word c = encode(std::vector<Gf>(7, 3), code);

    ChannelModel quiet;
    quiet.p = 0.0;
    const TransmissionRecord clean = transmit(c, f, quiet, 0);
    CHECK(clean.received == c);
    CHECK(clean.true_support.empty());

    ChannelModel loud;
    loud.p = 1.0;
    const TransmissionRecord noisy = transmit(c, f, loud, 0);
    CHECK(noisy.true_support.size() == code.n());
    for (std::size_t i = 0; i < code.n(); ++i)
        CHECK(noisy.received.symbols[i] != c.symbols[i]);
}

TEST_CASE("transmit: support statistics match the binomial model") {
    Field f(4, 0x13);
    Code code(f, 7);
    const Word c = encode(std::vector<Gf>(7, 0), code);
    ChannelModel model;
    model.p = 0.1;
    model.seed = 7;

    const std::size_t frames = 10000;
    double total = 0;
    for (std::size_t frame = 0; frame < frames; ++frame)
        total += static_cast<double>(transmit(c, f, model, frame).true_support.size());
    const double mean = total / static_cast<double>(frames);
    const double sigma = std::sqrt(15.0 * 0.1 * 0.9 / static_cast<double>(frames));
    CHECK(std::abs(mean - 1.5) <= 3.0 * sigma);
}

TEST_CASE("transmit: conditional reliability ranges") {
    Field f(4, 0x13);
    Code code(f, 7);
    const Word c = encode(std::vector<Gf>(7, 5), code);
    ChannelModel model;
    model.p = 0.3;
    model.seed = 11;
    for (std::uint64_t frame = 0; frame < 300; ++frame) {
        const TransmissionRecord rec = transmit(c, f, model, frame);
        for (std::size_t i = 0; i < code.n(); ++i) {
            const bool corrupted = rec.received.symbols[i] != c.symbols[i];
            if (corrupted) {
                CHECK(rec.reliabilities[i] >= 0.0);
                CHECK(rec.reliabilities[i] < 0.8);
            } else {
                CHECK(rec.reliabilities[i] >= 0.5);
                CHECK(rec.reliabilities[i] < 1.0);
            }
        }
    }
}

TEST_CASE("reproducibility: identical (seed, frame) gives identical records") {
    Field f(4, 0x13);
    Code code(f, 7);
    ChannelModel model;
    model.p = 0.2;
    model.seed = 42;
    const TransmissionRecord a = simulate_frame(code, model, 123);
    const TransmissionRecord b = simulate_frame(code, model, 123);
    CHECK(a.received == b.received);
    CHECK(a.transmitted == b.transmitted);
    CHECK(a.reliabilities == b.reliabilities);
    CHECK(a.true_support == b.true_support);
    CHECK(is_codeword(a.transmitted, code));

    const TransmissionRecord other = simulate_frame(code, model, 124);
    CHECK(a.received != other.received);
}

TEST_CASE("schedule: pair count, tie-breaks, sort order") {
    Field f(4, 0x13);
    Code code(f, 7);  // d = 9 -> 4 pairs, 8 erasures max

    std::vector<double> equal(15, 0.5);
    const ErasureSchedule tied = build_schedule(equal, code);
    CHECK(tied.pairs.size() == 4);
    for (std::size_t j = 0; j < 4; ++j) {
        CHECK(tied.pairs[j].first == static_cast<int>(2 * j));
        CHECK(tied.pairs[j].second == static_cast<int>(2 * j + 1));
    }

    std::vector<double> increasing(15);
    for (std::size_t i = 0; i < 15; ++i) increasing[i] = static_cast<double>(i);
    const ErasureSchedule inc = build_schedule(increasing, code);
    CHECK(inc.pairs[0] == std::pair<int, int>{0, 1});

    std::vector<double> bad(15, 0.5);
    bad[3] = -1.0;
    CHECK_THROWS_AS(build_schedule(bad, code), std::invalid_argument);
    CHECK_THROWS_AS(build_schedule(std::vector<double>(7, 0.5), code), std::invalid_argument);
}

TEST_CASE("schedule: nested erasure sets by construction") {
    Field f(4, 0x13);
    Code code(f, 7);
    std::vector<double> w{0.9, 0.1, 0.8, 0.3, 0.2, 0.7, 0.6, 0.5,
                          0.45, 0.35, 0.25, 0.15, 0.05, 0.95, 0.85};
    const ErasureSchedule sched = build_schedule(w, code);
    for (std::size_t j = 0; j + 1 <= sched.pairs.size(); ++j) {
        const auto xj = sched.prefix(j);
        const auto xj1 = sched.prefix(j + 1);
        CHECK(xj.size() == 2 * j);
        for (std::size_t i = 0; i < xj.size(); ++i) CHECK(xj[i] == xj1[i]);
    }
    // Least reliable first: position 12 (w = 0.05) leads.
    CHECK(sched.order[0] == 12);
}
