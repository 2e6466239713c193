// SPDX-License-Identifier: Apache-2.0

#include "gmdrs/decode.hpp"

#include <stdexcept>

namespace gmdrs {

namespace {

DecodeResult trivial_success(const Word& r) {
    DecodeResult res;
    res.success = true;
    res.codeword = r;
    res.trial = 0;
    return res;
}

DecodeResult run_bmd(const Word& r, std::span<const double> w, const Code& code,
                     std::size_t& list_len) {
    const Poly S = syndrome(r, code);
    if (S.is_zero()) {
        list_len = 0;
        return trivial_success(r);
    }
    BmdSolution sol = decode_bmd(S, code);
    Candidate cand;
    cand.poly = sol.lambda;
    cand.degree = sol.lambda.degree();
    cand.evals.resize(code.n());
    for (std::size_t i = 0; i < code.n(); ++i)
        cand.evals[i] = sol.lambda.eval(code.locator_point(i));
    cand.origin = Origin::Bmd;
    CandidateList list{std::move(cand)};
    list_len = list.size();
    return select_best(list, r, S, w, code);
}

}  // namespace

MergedRun decode_merged(const Word& r, std::span<const double> w, const Code& code,
                        bool vectors, const GmdConfig& cfg) {
    MergedRun run{Poly(code.field()), {}, {}, {}, false};
    run.syndrome_poly = syndrome(r, code);
    if (run.syndrome_poly.is_zero()) {
        run.trivial = true;
        run.result = trivial_success(r);
        return run;
    }
    run.init = run_to_transition(run.syndrome_poly, code, cfg.use_qhat);
    const ErasureSchedule schedule = build_schedule(w, code);
    run.candidates = vectors ? gmd_run_vectors(run.init, schedule, code, cfg)
                             : gmd_run(run.init, schedule, code, cfg);
    run.result = select_best(run.candidates, r, run.syndrome_poly, w, code);
    return run;
}

FrameOutcome decode_frame(DecoderKind kind, const Word& r, std::span<const double> w,
                          const Code& code, const GmdConfig& cfg) {
    FrameOutcome out;
    const std::uint64_t before = mul_count();
    switch (kind) {
        case DecoderKind::Bmd:
            out.result = run_bmd(r, w, code, out.list_len);
            break;
        case DecoderKind::GmdEea:
        case DecoderKind::GmdEeaVec: {
            MergedRun run = decode_merged(r, w, code, kind == DecoderKind::GmdEeaVec, cfg);
            out.result = std::move(run.result);
            out.list_len = run.candidates.size();
            break;
        }
        case DecoderKind::TrialGmd: {
            const ErasureSchedule schedule = build_schedule(w, code);
            TrialGmdOutput trial = trial_gmd(r, schedule, w, code);
            out.result = std::move(trial.result);
            out.list_len = trial.candidates.size();
            break;
        }
    }
    out.mults = mul_count() - before;
    return out;
}

const char* to_string(DecoderKind kind) {
    switch (kind) {
        case DecoderKind::Bmd: return "bmd";
        case DecoderKind::GmdEea: return "gmd-eea";
        case DecoderKind::GmdEeaVec: return "gmd-eea-vec";
        case DecoderKind::TrialGmd: return "trial-gmd";
    }
    return "?";
}

DecoderKind parse_decoder(std::string_view name) {
    if (name == "bmd") return DecoderKind::Bmd;
    if (name == "gmd-eea") return DecoderKind::GmdEea;
    if (name == "gmd-eea-vec") return DecoderKind::GmdEeaVec;
    if (name == "trial-gmd") return DecoderKind::TrialGmd;
    throw std::invalid_argument("unknown decoder '" + std::string(name) + "'");
}

}  // namespace gmdrs
