// SPDX-License-Identifier: Apache-2.0

#include "gmdrs/sim.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace gmdrs {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::pair<double, double> range_from(const nlohmann::json& j, const char* key, double lo,
                                     double hi) {
    if (!j.contains(key)) return {lo, hi};
    const auto& arr = j.at(key);
    if (!arr.is_array() || arr.size() != 2)
        throw std::invalid_argument(std::string("channel config: '") + key +
                                    "' must be a [lo, hi] pair");
    return {arr[0].get<double>(), arr[1].get<double>()};
}

}  // namespace

void load_channel_json(const std::string& text, SimConfig& cfg) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("channel config: ") + e.what());
    }
    if (j.contains("p")) {
        cfg.p_values.clear();
        if (j["p"].is_array())
            for (const auto& v : j["p"]) cfg.p_values.push_back(v.get<double>());
        else
            cfg.p_values.push_back(j["p"].get<double>());
    }
    if (cfg.p_values.empty())
        throw std::invalid_argument("channel config: field 'p' has no channel points");
    for (double p : cfg.p_values)
        if (p < 0.0 || p > 1.0)
            throw std::invalid_argument("channel config: field 'p' outside [0, 1]");
    std::tie(cfg.channel.rel_correct_lo, cfg.channel.rel_correct_hi) =
        range_from(j, "rel_correct", cfg.channel.rel_correct_lo, cfg.channel.rel_correct_hi);
    std::tie(cfg.channel.rel_error_lo, cfg.channel.rel_error_hi) =
        range_from(j, "rel_error", cfg.channel.rel_error_lo, cfg.channel.rel_error_hi);
    if (j.contains("seed")) cfg.channel.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("use_qhat")) cfg.use_qhat = j["use_qhat"].get<bool>();
}

const FerRow& FerReport::row(DecoderKind d, double p) const {
    for (const FerRow& r : rows)
        if (r.decoder == d && r.p == p) return r;
    throw std::out_of_range("fer report: no such row");
}

FerReport run_fer(const SimConfig& cfg) {
    const Field field(cfg.code.field.m, cfg.code.field.poly, cfg.code.n);
    const Code code(field, cfg.code.k);
    const GmdConfig gmd_cfg{cfg.use_qhat, nullptr};

    FerReport report;
    std::ostringstream csv;
    csv << "# gmdrs-fer-v1\n"
        << "decoder,p,frames,frame_errors,symbol_errors,fer,mean_list_len,mean_mults\n";

    for (double p : cfg.p_values) {
        ChannelModel model = cfg.channel;
        model.p = p;
        std::vector<FerRow> point_rows;
        for (DecoderKind d : cfg.decoders) {
            FerRow row;
            row.decoder = d;
            row.p = p;
            row.frames = cfg.frames;
            row.frame_ok.resize(cfg.frames, false);
            point_rows.push_back(std::move(row));
        }
        for (std::size_t frame = 0; frame < cfg.frames; ++frame) {
            const TransmissionRecord rec = simulate_frame(code, model, frame);
            for (std::size_t di = 0; di < cfg.decoders.size(); ++di) {
                FerRow& row = point_rows[di];
                const FrameOutcome out =
                    decode_frame(cfg.decoders[di], rec.received, rec.reliabilities, code, gmd_cfg);
                const Word& decoded = out.result.success ? out.result.codeword : rec.received;
                std::size_t sym_err = 0;
                for (std::size_t i = 0; i < code.n(); ++i)
                    if (decoded.symbols[i] != rec.transmitted.symbols[i]) ++sym_err;
                const bool ok = out.result.success && sym_err == 0;
                row.frame_ok[frame] = ok;
                if (!ok) ++row.frame_errors;
                row.symbol_errors += sym_err;
                row.mean_list_len += static_cast<double>(out.list_len);
                row.mean_mults += static_cast<double>(out.mults);
            }
        }
        for (FerRow& row : point_rows) {
            row.fer = static_cast<double>(row.frame_errors) / static_cast<double>(row.frames);
            row.mean_list_len /= static_cast<double>(row.frames);
            row.mean_mults /= static_cast<double>(row.frames);
            csv << to_string(row.decoder) << ',' << fmt(row.p) << ',' << row.frames << ','
                << row.frame_errors << ',' << row.symbol_errors << ',' << fmt(row.fer) << ','
                << fmt(row.mean_list_len) << ',' << fmt(row.mean_mults) << '\n';
            report.rows.push_back(std::move(row));
        }
    }
    report.csv = csv.str();
    return report;
}

double fit_loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("slope fit needs at least two points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double ScalingReport::slope(DecoderKind d) const {
    for (const ScalingRow& r : rows)
        if (r.decoder == d) return r.slope;
    throw std::out_of_range("scaling report: no such decoder");
}

ScalingReport run_scaling(const ScalingConfig& cfg) {
    ScalingReport report;
    std::ostringstream csv;
    csv << "# gmdrs-scaling-v1\n"
        << "decoder,n,k,p,frames,mean_mults,loglog_slope\n";

    struct Cell {
        std::size_t n, k;
        double mean_mults;
    };
    std::vector<std::vector<Cell>> cells(cfg.decoders.size());

    for (std::size_t n : cfg.block_lengths) {
        unsigned m = 0;
        while ((std::size_t{1} << m) < n + 1) ++m;
        if ((std::size_t{1} << m) != n + 1)
            throw std::invalid_argument("scaling: block length must be 2^m - 1");
        const Field field(m, default_primitive_poly(m));
        const std::size_t k = (n - 1) / 2;  // rate just under 1/2, d = (n + 3) / 2
        const Code code(field, k);
        ChannelModel model;
        model.p = cfg.p;
        model.seed = cfg.seed;
        const GmdConfig gmd_cfg{cfg.use_qhat, nullptr};

        std::vector<double> sums(cfg.decoders.size(), 0.0);
        for (std::size_t frame = 0; frame < cfg.frames; ++frame) {
            const TransmissionRecord rec = simulate_frame(code, model, frame);
            for (std::size_t di = 0; di < cfg.decoders.size(); ++di) {
                const FrameOutcome out =
                    decode_frame(cfg.decoders[di], rec.received, rec.reliabilities, code, gmd_cfg);
                sums[di] += static_cast<double>(out.mults);
            }
        }
        for (std::size_t di = 0; di < cfg.decoders.size(); ++di)
            cells[di].push_back({n, k, sums[di] / static_cast<double>(cfg.frames)});
    }

    for (std::size_t di = 0; di < cfg.decoders.size(); ++di) {
        std::vector<double> xs, ys;
        for (const Cell& c : cells[di]) {
            xs.push_back(static_cast<double>(c.n));
            ys.push_back(c.mean_mults);
        }
        const double slope = fit_loglog_slope(xs, ys);
        for (const Cell& c : cells[di]) {
            ScalingRow row{cfg.decoders[di], c.n, c.k, cfg.frames, c.mean_mults, slope};
            csv << to_string(row.decoder) << ',' << row.n << ',' << row.k << ',' << fmt(cfg.p)
                << ',' << row.frames << ',' << fmt(row.mean_mults) << ',' << fmt(row.slope)
                << '\n';
            report.rows.push_back(row);
        }
    }
    report.csv = csv.str();
    return report;
}

std::string trace_frame(const SimConfig& cfg, std::uint64_t frame) {
    const Field field(cfg.code.field.m, cfg.code.field.poly, cfg.code.n);
    const Code code(field, cfg.code.k);
    ChannelModel model = cfg.channel;
    model.p = cfg.p_values.front();

    std::ostringstream os;
    os << "# gmdrs-trace-v1\n";
    os << "code rs(" << code.n() << "," << code.k() << ")@gf(2^" << field.m() << "):0x" << std::hex
       << field.primitive_poly() << std::dec << "\n";
    os << "frame " << frame << " seed " << model.seed << " p " << fmt(model.p) << "\n";

    const TransmissionRecord rec = simulate_frame(code, model, frame);
    os << "rx " << to_string(Poly(field, rec.received.symbols)) << "\n";
    os << "reliabilities";
    for (double w : rec.reliabilities) os << ' ' << fmt(w);
    os << "\n";
    os << "true_support";
    for (int i : rec.true_support) os << ' ' << i;
    os << "\n";

    const Poly S = syndrome(rec.received, code);
    os << "syndrome " << to_string(S) << "\n";
    if (S.is_zero()) {
        os << "selection: status=success trial=0 distance=0.000000 support=\n";
        return os.str();
    }

    const TransitionInfo init = run_to_transition(S, code, cfg.use_qhat);
    os << "transition c_next=" << (init.c_next == Poly::kZeroDegree ? "-inf"
                                                                    : std::to_string(init.c_next))
       << " qhat=" << (init.q_hat ? "present" : "absent") << " base_deg=" << init.base_deg
       << " deg2=" << init.deg2 << "\n";

    const ErasureSchedule schedule = build_schedule(rec.reliabilities, code);
    os << "gmd:\n";
    GmdConfig gmd_cfg{cfg.use_qhat, &os};
    const CandidateList list = gmd_run(init, schedule, code, gmd_cfg);

    os << "candidates:\n";
    for (std::size_t idx = 0; idx < list.size(); ++idx) {
        const Candidate& c = list[idx];
        os << "idx=" << idx << " trial=" << c.trial << " origin=" << to_string(c.origin)
           << " deg=" << c.degree << " dd=" << c.dd;
        auto support = root_support(c.evals, c.degree);
        os << " support=";
        if (support) {
            for (std::size_t i = 0; i < support->size(); ++i)
                os << (i ? "," : "") << (*support)[i];
            os << " status=valid";
        } else {
            os << "- status=invalid";
        }
        os << "\n";
    }

    const DecodeResult res = select_best(list, rec.received, S, rec.reliabilities, code);
    os << "selection: status=" << (res.success ? "success" : "failure");
    if (res.success) {
        os << " trial=" << res.trial << " distance=" << fmt(res.weighted_distance) << " support=";
        for (std::size_t i = 0; i < res.error_support.size(); ++i)
            os << (i ? "," : "") << res.error_support[i];
        os << " decoded_ok=" << (res.codeword == rec.transmitted ? 1 : 0);
    }
    os << "\n";
    return os.str();
}

}  // namespace gmdrs
