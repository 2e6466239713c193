// SPDX-License-Identifier: Apache-2.0
//
// Simulation driver: FER sweeps, decoder comparisons, operation-count
// scaling runs and single-frame traces.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gmdrs/sim.hpp"

namespace {

std::vector<gmdrs::DecoderKind> parse_decoders(const std::string& list) {
    std::vector<gmdrs::DecoderKind> out;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(gmdrs::parse_decoder(tok));
    if (out.empty()) throw std::invalid_argument("empty decoder list");
    return out;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reed-Solomon GMD decoder simulator"};

    std::string code_spec = "rs(15,7)@gf(2^4):0x13";
    std::string channel_path;
    std::string decoders = "bmd,gmd-eea";
    std::string out_path = "-";
    std::size_t frames = 1000;
    std::int64_t seed = -1;
    std::int64_t trace_frame_idx = -1;
    bool scaling = false;
    bool no_qhat = false;

    app.add_option("--code", code_spec, "Code spec rs(n,k)@gf(2^m):0xPP");
    app.add_option("--channel", channel_path, "Channel config JSON file");
    app.add_option("--frames", frames, "Frames per channel point");
    app.add_option("--seed", seed, "Override the channel seed");
    app.add_option("--decoders", decoders, "Comma list of bmd,gmd-eea,gmd-eea-vec,trial-gmd");
    app.add_option("--out", out_path, "Output file ('-' = stdout)");
    app.add_option("--trace", trace_frame_idx, "Dump a single-frame decode trace");
    app.add_flag("--scaling", scaling, "Operation-count scaling run over n = 15..255");
    app.add_flag("--no-qhat", no_qhat, "Seed the GMD extension without the quotient head");

    CLI11_PARSE(app, argc, argv);

    try {
        gmdrs::SimConfig cfg;
        cfg.code = gmdrs::parse_code_spec(code_spec);
        cfg.frames = frames;
        cfg.decoders = parse_decoders(decoders);
        if (!channel_path.empty()) {
            std::ifstream in(channel_path, std::ios::binary);
            if (!in) throw std::runtime_error("cannot open channel file '" + channel_path + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            gmdrs::load_channel_json(buf.str(), cfg);
        }
        if (seed >= 0) cfg.channel.seed = static_cast<std::uint64_t>(seed);
        if (no_qhat) cfg.use_qhat = false;

        if (trace_frame_idx >= 0) {
            write_output(out_path,
                         gmdrs::trace_frame(cfg, static_cast<std::uint64_t>(trace_frame_idx)));
        } else if (scaling) {
            gmdrs::ScalingConfig scfg;
            scfg.p = cfg.p_values.front();
            scfg.frames = cfg.frames;
            scfg.seed = cfg.channel.seed;
            scfg.decoders = cfg.decoders;
            scfg.use_qhat = cfg.use_qhat;
            write_output(out_path, gmdrs::run_scaling(scfg).csv);
        } else {
            write_output(out_path, gmdrs::run_fer(cfg).csv);
        }
    } catch (const std::exception& e) {
        std::cerr << "rsim: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
