// SPDX-License-Identifier: Apache-2.0

#include "gmdrs/gmd.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace gmdrs {

namespace {

// Coefficients for delta1' = ca*delta2 + (x+cb)*delta1 with zeros at a1, a2.
void regular_d1_coeffs(const Field& f, const PairEvals& e, Gf a1, Gf a2, StepPlan& p) {
    p.ca = f.div(f.mul(f.mul(e.d11, e.d12), f.add(a1, a2)), e.dbar);
    p.cb = f.div(f.add(f.mul(f.mul(e.d11, e.d22), a1), f.mul(f.mul(e.d12, e.d21), a2)), e.dbar);
}

// delta2' update keeping zeros at a1, a2: the linear-combination solution
// divides by d21*d22*(a1-a2), so a single vanished evaluation falls back to
// the one-root multiplicative form.
void regular_d2_coeffs(const Field& f, const PairEvals& e, Gf a1, Gf a2, StepPlan& p) {
    if (e.d21 == 0 || e.d22 == 0) {
        p.d2_mode = D2Mode::SingleRoot;
        p.single_root = (e.d22 == 0) ? a1 : a2;
        return;
    }
    p.d2_mode = D2Mode::LinearCombo;
    const Gf den = f.mul(f.mul(e.d21, e.d22), f.add(a1, a2));
    p.c2a = f.div(e.dbar, den);
    p.c2b = f.div(f.add(f.mul(f.mul(e.d12, e.d21), a1), f.mul(f.mul(e.d11, e.d22), a2)), den);
}

void maybe_extra(const PairEvals& e, bool qhat_used, StepPlan& p) {
    if (!qhat_used) return;
    // Homogeneous kernel of the degenerate 2x2 system: ea*delta2 + eb*delta1
    // vanishes at both points. Only useful while the delta2 scalar is nonzero.
    Gf ea = e.d11, eb = e.d21;
    if (ea == 0 && eb == 0) {
        ea = e.d12;
        eb = e.d22;
    }
    if (ea != 0) {
        p.emit_extra = true;
        p.ea = ea;
        p.eb = eb;
    }
}

PairEvals make_evals(const Field& f, Gf d11, Gf d12, Gf d21, Gf d22) {
    return PairEvals{d11, d12, d21, d22, f.sub(f.mul(d11, d22), f.mul(d12, d21))};
}

// Shared integer degree bookkeeping; the vector form cannot observe degrees,
// so both paths advance these tracked values identically.
void advance_degrees(const StepPlan& p, int& deg1, int& deg2) {
    const int old1 = deg1;
    switch (p.action) {
        case StepAction::Regular: deg1 = old1 + 1; break;
        case StepAction::SpecialPlus: deg1 = old1 + 2; break;
        case StepAction::SpecialMinus: break;
        case StepAction::CompPlus: break;
        case StepAction::CompMinus: deg1 = old1 + 2; break;
    }
    switch (p.d2_mode) {
        case D2Mode::LinearCombo: deg2 = old1; break;
        case D2Mode::SingleRoot: deg2 += 1; break;
        case D2Mode::RootPair: deg2 += 2; break;
        case D2Mode::CombineComp: deg2 = old1 + 1; break;
        case D2Mode::Unchanged: break;
    }
}

template <class State>
void advance_common(State& st, const StepPlan& p, Gf a1, Gf a2, int i1, int i2) {
    advance_degrees(p, st.deg1, st.deg2);
    st.dd += p.dd_delta;
    st.j += 1;
    st.erased_positions.push_back(i1);
    st.erased_positions.push_back(i2);
    st.erased_points.push_back(a1);
    st.erased_points.push_back(a2);
}

void check_schedulable(const std::vector<Gf>& erased_points, Gf a1, Gf a2) {
    if (a1 == a2) throw std::invalid_argument("gmd: erasure pair must be two distinct points");
    for (Gf x : erased_points)
        if (x == a1 || x == a2)
            throw std::invalid_argument("gmd: point already erased in an earlier iteration");
}

void apply_plan(DeltaState& st, const StepPlan& p, Gf a1, Gf a2, int i1, int i2) {
    const Poly d1 = st.delta1;
    const Poly d2 = st.delta2;
    switch (p.action) {
        case StepAction::Regular:
            st.delta1 = d2.scaled(p.ca) + mul_linear(d1, p.cb);
            break;
        case StepAction::SpecialPlus:
        case StepAction::CompMinus:
            st.delta1 = mul_linear(mul_linear(d1, a1), a2);
            break;
        case StepAction::SpecialMinus:
            break;
        case StepAction::CompPlus:
            st.delta1 = mul_linear(d2, p.ca) + d1.scaled(p.cb);
            break;
    }
    switch (p.d2_mode) {
        case D2Mode::LinearCombo:
            st.delta2 = d1 + mul_affine(d2, p.c2a, p.c2b);
            break;
        case D2Mode::SingleRoot:
            st.delta2 = mul_linear(d2, p.single_root);
            break;
        case D2Mode::RootPair:
            st.delta2 = mul_linear(mul_linear(d2, a1), a2);
            break;
        case D2Mode::CombineComp:
            st.delta2 = d2.scaled(p.c2a) + mul_linear(d1, p.c2b);
            break;
        case D2Mode::Unchanged:
            break;
    }
    advance_common(st, p, a1, a2, i1, i2);
}

void apply_plan(EvalState& st, const StepPlan& p, const Code& code, Gf a1, Gf a2, int i1, int i2) {
    const Field& f = code.field();
    const std::size_t n = code.n();
    std::vector<Gf> n1(n), n2(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Gf x = code.locator_point(i);
        const Gf v1 = st.v1[i], v2 = st.v2[i];
        switch (p.action) {
            case StepAction::Regular:
                n1[i] = f.add(f.mul(p.ca, v2), f.mul(f.add(x, p.cb), v1));
                break;
            case StepAction::SpecialPlus:
            case StepAction::CompMinus:
                n1[i] = f.mul(f.mul(f.add(x, a1), f.add(x, a2)), v1);
                break;
            case StepAction::SpecialMinus:
                n1[i] = v1;
                break;
            case StepAction::CompPlus:
                n1[i] = f.add(f.mul(f.add(x, p.ca), v2), f.mul(p.cb, v1));
                break;
        }
        switch (p.d2_mode) {
            case D2Mode::LinearCombo:
                n2[i] = f.add(v1, f.mul(f.add(f.mul(p.c2a, x), p.c2b), v2));
                break;
            case D2Mode::SingleRoot:
                n2[i] = f.mul(f.add(x, p.single_root), v2);
                break;
            case D2Mode::RootPair:
                n2[i] = f.mul(f.mul(f.add(x, a1), f.add(x, a2)), v2);
                break;
            case D2Mode::CombineComp:
                n2[i] = f.add(f.mul(p.c2a, v2), f.mul(f.add(x, p.c2b), v1));
                break;
            case D2Mode::Unchanged:
                n2[i] = v2;
                break;
        }
    }
    st.v1 = std::move(n1);
    st.v2 = std::move(n2);
    advance_common(st, p, a1, a2, i1, i2);
}

std::vector<Gf> eval_everywhere(const Poly& p, const Code& code) {
    std::vector<Gf> out(code.n());
    for (std::size_t i = 0; i < code.n(); ++i) out[i] = p.eval(code.locator_point(i));
    return out;
}

Origin origin_of(const StepPlan& p) {
    return p.action == StepAction::Regular ? Origin::Regular : Origin::Special;
}

// Adapters that give gmd_run and gmd_run_vectors one shared driver, so the
// two paths branch identically by construction.
struct PolyBackend {
    DeltaState st;
    const Code* code;

    PairEvals pair_evals(int, int, Gf a1, Gf a2) const { return eval_pair(st, a1, a2); }
    void apply(const StepPlan& p, Gf a1, Gf a2, int i1, int i2) {
        apply_plan(st, p, a1, a2, i1, i2);
    }
    Candidate snapshot(Origin origin) const {
        Candidate c;
        c.evals = eval_everywhere(st.delta1, *code);
        c.poly = st.delta1;
        c.degree = st.deg1;
        c.erased = st.erased_positions;
        c.trial = st.j;
        c.origin = origin;
        c.dd = st.dd;
        return c;
    }
    Candidate extra(const StepPlan& p) const {
        Candidate c;
        Poly combo = st.delta2.scaled(p.ea) + st.delta1.scaled(p.eb);
        c.evals = eval_everywhere(combo, *code);
        c.poly = std::move(combo);
        c.degree = std::max(st.deg1, st.deg2);
        c.origin = Origin::Extra;
        return c;
    }
};

struct VecBackend {
    EvalState st;
    const Code* code;

    PairEvals pair_evals(int i1, int i2, Gf, Gf) const {
        return make_evals(code->field(), st.v1[static_cast<std::size_t>(i1)],
                          st.v1[static_cast<std::size_t>(i2)],
                          st.v2[static_cast<std::size_t>(i1)],
                          st.v2[static_cast<std::size_t>(i2)]);
    }
    void apply(const StepPlan& p, Gf a1, Gf a2, int i1, int i2) {
        apply_plan(st, p, *code, a1, a2, i1, i2);
    }
    Candidate snapshot(Origin origin) const {
        Candidate c;
        c.evals = st.v1;
        c.degree = st.deg1;
        c.erased = st.erased_positions;
        c.trial = st.j;
        c.origin = origin;
        c.dd = st.dd;
        return c;
    }
    Candidate extra(const StepPlan& p) const {
        const Field& f = code->field();
        Candidate c;
        c.evals.resize(st.v1.size());
        for (std::size_t i = 0; i < st.v1.size(); ++i)
            c.evals[i] = f.add(f.mul(p.ea, st.v2[i]), f.mul(p.eb, st.v1[i]));
        c.degree = std::max(st.deg1, st.deg2);
        c.origin = Origin::Extra;
        return c;
    }
};

template <class Backend>
CandidateList run_driver(Backend backend, const ErasureSchedule& schedule, const Code& code,
                         const GmdConfig& cfg) {
    const Field& f = code.field();
    CandidateList list;
    list.push_back(backend.snapshot(Origin::Bmd));

    std::size_t next_pair = 0;
    const int deg_limit = static_cast<int>(code.d()) - 2;
    while (backend.st.deg1 < deg_limit && next_pair < schedule.pairs.size()) {
        const auto [i1, i2] = schedule.pairs[next_pair++];
        const Gf a1 = code.locator_point(static_cast<std::size_t>(i1));
        const Gf a2 = code.locator_point(static_cast<std::size_t>(i2));
        check_schedulable(backend.st.erased_points, a1, a2);

        const int iteration = backend.st.j;
        const PairEvals e = backend.pair_evals(i1, i2, a1, a2);
        const StepPlan plan = plan_step(f, e, a1, a2, backend.st.dd, backend.st.qhat_used);

        std::optional<Candidate> extra;
        if (plan.emit_extra) extra = backend.extra(plan);

        backend.apply(plan, a1, a2, i1, i2);
        list.push_back(backend.snapshot(origin_of(plan)));
        if (extra) {
            extra->erased = backend.st.erased_positions;
            extra->trial = backend.st.j;
            extra->dd = backend.st.dd;
            list.push_back(std::move(*extra));
        }

        if (cfg.trace) {
            *cfg.trace << "j=" << iteration << " case=" << to_string(plan.action)
                       << " dd=" << backend.st.dd << " deg1=" << backend.st.deg1
                       << " deg2=" << backend.st.deg2 << " erased=" << i1 << "," << i2 << "\n";
        }
    }
    return list;
}

}  // namespace

StepPlan plan_step(const Field& f, const PairEvals& e, Gf a1, Gf a2, int dd, bool qhat_used) {
    StepPlan p{};
    const bool fail1 = e.d11 == 0 && e.d12 == 0;
    const bool fail2 = e.d21 == 0 && e.d22 == 0;

    if (e.dbar != 0) {
        p.tag = CaseTag::Regular;
        if (dd > 0 && e.d21 != 0 && e.d22 != 0) {
            // Compensation: delta1' = (x+ca)*delta2 + cb*delta1; blocked when
            // delta2 vanishes at either point (it would discard delta1).
            p.action = StepAction::CompPlus;
            p.d2_mode = D2Mode::RootPair;
            p.ca = f.div(f.add(f.mul(f.mul(a1, e.d21), e.d12), f.mul(f.mul(a2, e.d22), e.d11)),
                         e.dbar);
            p.cb = f.div(f.mul(f.mul(e.d21, e.d22), f.add(a1, a2)), e.dbar);
            p.dd_delta = -1;
        } else if (dd < 0 && e.d11 != 0 && e.d12 != 0) {
            p.action = StepAction::CompMinus;
            p.d2_mode = D2Mode::CombineComp;
            p.c2a = f.div(f.mul(f.mul(e.d11, e.d12), f.add(a1, a2)), e.dbar);
            p.c2b = f.div(f.add(f.mul(f.mul(e.d11, e.d22), a1), f.mul(f.mul(e.d12, e.d21), a2)),
                          e.dbar);
            p.dd_delta = 1;
        } else {
            p.action = StepAction::Regular;
            regular_d1_coeffs(f, e, a1, a2, p);
            regular_d2_coeffs(f, e, a1, a2, p);
            p.dd_delta = 0;
        }
        return p;
    }

    if (fail1) {
        // delta1 already vanishes at both points; grow delta2 instead.
        p.tag = CaseTag::Fail1;
        p.action = StepAction::SpecialMinus;
        p.d2_mode = D2Mode::RootPair;
        p.dd_delta = -1;
    } else if (fail2) {
        p.tag = CaseTag::Fail2;
        p.action = StepAction::SpecialPlus;
        p.d2_mode = D2Mode::Unchanged;
        p.dd_delta = 1;
    } else {
        // Vanishing determinant without a vanishing row: force the zeros
        // multiplicatively but keep the regular delta2 update.
        p.tag = CaseTag::Mixed;
        p.action = StepAction::SpecialPlus;
        regular_d2_coeffs(f, e, a1, a2, p);
        p.dd_delta = 1;
    }
    maybe_extra(e, qhat_used, p);
    return p;
}

DeltaState make_delta_state(const TransitionInfo& init, const Code& code) {
    DeltaState st;
    st.delta1 = init.delta1_init;
    st.delta2 = init.delta2_init;
    st.deg1 = init.base_deg;
    st.deg2 = init.deg2;
    st.base_deg = init.base_deg;
    st.qhat_used = init.q_hat.has_value();
    (void)code;
    return st;
}

EvalState make_eval_state(const TransitionInfo& init, const Code& code) {
    EvalState st;
    st.v1 = eval_everywhere(init.delta1_init, code);
    st.v2 = eval_everywhere(init.delta2_init, code);
    st.deg1 = init.base_deg;
    st.deg2 = init.deg2;
    st.base_deg = init.base_deg;
    st.qhat_used = init.q_hat.has_value();
    return st;
}

PairEvals eval_pair(const DeltaState& st, Gf a1, Gf a2) {
    const Field& f = st.delta1.field();
    return make_evals(f, st.delta1.eval(a1), st.delta1.eval(a2), st.delta2.eval(a1),
                      st.delta2.eval(a2));
}

Classification classify(const DeltaState& st, Gf a1, Gf a2) {
    check_schedulable(st.erased_points, a1, a2);
    const PairEvals e = eval_pair(st, a1, a2);
    Classification c{};
    c.evals = e;
    c.d2_single_zero = (e.d21 == 0) != (e.d22 == 0);
    if (e.dbar != 0) {
        c.tag = CaseTag::Regular;
    } else if (e.d11 == 0 && e.d12 == 0) {
        c.tag = CaseTag::Fail1;
    } else if (e.d21 == 0 && e.d22 == 0) {
        c.tag = CaseTag::Fail2;
    } else {
        c.tag = CaseTag::Mixed;
    }
    return c;
}

namespace {

DeltaState apply_for_op(const DeltaState& st, Gf a1, Gf a2, const StepPlan& p) {
    DeltaState out = st;
    apply_plan(out, p, a1, a2, -1, -1);
    // Position indices are unknown at this API level; drop the placeholders.
    out.erased_positions.resize(out.erased_positions.size() - 2);
    return out;
}

}  // namespace

DeltaState regular_update(const DeltaState& st, Gf a1, Gf a2) {
    const Classification c = classify(st, a1, a2);
    if (c.tag != CaseTag::Regular)
        throw std::invalid_argument("gmd: regular_update requires a nonzero determinant");
    StepPlan p{};
    p.tag = CaseTag::Regular;
    p.action = StepAction::Regular;
    regular_d1_coeffs(st.delta1.field(), c.evals, a1, a2, p);
    regular_d2_coeffs(st.delta1.field(), c.evals, a1, a2, p);
    return apply_for_op(st, a1, a2, p);
}

DeltaState special_update_plus(const DeltaState& st, Gf a1, Gf a2) {
    const Classification c = classify(st, a1, a2);
    if (c.tag != CaseTag::Fail2 && c.tag != CaseTag::Mixed)
        throw std::invalid_argument("gmd: special_update_plus requires Fail2 or Mixed");
    StepPlan p{};
    p.tag = c.tag;
    p.action = StepAction::SpecialPlus;
    p.dd_delta = 1;
    if (c.tag == CaseTag::Mixed)
        regular_d2_coeffs(st.delta1.field(), c.evals, a1, a2, p);
    else
        p.d2_mode = D2Mode::Unchanged;
    return apply_for_op(st, a1, a2, p);
}

DeltaState special_update_minus(const DeltaState& st, Gf a1, Gf a2) {
    const Classification c = classify(st, a1, a2);
    if (c.tag != CaseTag::Fail1)
        throw std::invalid_argument("gmd: special_update_minus requires Fail1");
    StepPlan p{};
    p.tag = CaseTag::Fail1;
    p.action = StepAction::SpecialMinus;
    p.d2_mode = D2Mode::RootPair;
    p.dd_delta = -1;
    return apply_for_op(st, a1, a2, p);
}

DeltaState compensate_plus(const DeltaState& st, Gf a1, Gf a2) {
    if (st.dd <= 0) throw std::invalid_argument("gmd: compensate_plus requires dd > 0");
    const Classification c = classify(st, a1, a2);
    if (c.tag != CaseTag::Regular)
        throw std::invalid_argument("gmd: compensate_plus requires a nonzero determinant");
    return apply_for_op(st, a1, a2,
                        plan_step(st.delta1.field(), c.evals, a1, a2, st.dd, st.qhat_used));
}

DeltaState compensate_minus(const DeltaState& st, Gf a1, Gf a2) {
    if (st.dd >= 0) throw std::invalid_argument("gmd: compensate_minus requires dd < 0");
    const Classification c = classify(st, a1, a2);
    if (c.tag != CaseTag::Regular)
        throw std::invalid_argument("gmd: compensate_minus requires a nonzero determinant");
    return apply_for_op(st, a1, a2,
                        plan_step(st.delta1.field(), c.evals, a1, a2, st.dd, st.qhat_used));
}

std::optional<Candidate> extra_solution(const DeltaState& st, Gf a1, Gf a2) {
    if (!st.qhat_used) return std::nullopt;
    const Classification c = classify(st, a1, a2);
    if (c.tag == CaseTag::Regular) return std::nullopt;
    StepPlan p{};
    maybe_extra(c.evals, st.qhat_used, p);
    if (!p.emit_extra) return std::nullopt;
    Candidate cand;
    cand.poly = st.delta2.scaled(p.ea) + st.delta1.scaled(p.eb);
    cand.degree = std::max(st.deg1, st.deg2);
    cand.origin = Origin::Extra;
    cand.trial = st.j + 1;
    cand.dd = st.dd;
    return cand;
}

CandidateList gmd_run(const TransitionInfo& init, const ErasureSchedule& schedule,
                      const Code& code, const GmdConfig& cfg) {
    PolyBackend backend{make_delta_state(init, code), &code};
    return run_driver(std::move(backend), schedule, code, cfg);
}

CandidateList gmd_run_vectors(const TransitionInfo& init, const ErasureSchedule& schedule,
                              const Code& code, const GmdConfig& cfg) {
    VecBackend backend{make_eval_state(init, code), &code};
    return run_driver(std::move(backend), schedule, code, cfg);
}

const char* to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::Regular: return "regular";
        case CaseTag::Fail1: return "fail1";
        case CaseTag::Fail2: return "fail2";
        case CaseTag::Mixed: return "mixed";
    }
    return "?";
}

const char* to_string(StepAction action) {
    switch (action) {
        case StepAction::Regular: return "regular";
        case StepAction::SpecialPlus: return "special+";
        case StepAction::SpecialMinus: return "special-";
        case StepAction::CompPlus: return "comp+";
        case StepAction::CompMinus: return "comp-";
    }
    return "?";
}

const char* to_string(Origin origin) {
    switch (origin) {
        case Origin::Bmd: return "bmd";
        case Origin::Regular: return "regular";
        case Origin::Special: return "special";
        case Origin::Extra: return "extra";
        case Origin::Trial: return "trial";
    }
    return "?";
}

}  // namespace gmdrs
