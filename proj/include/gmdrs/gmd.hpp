// SPDX-License-Identifier: Apache-2.0
//
// The GMD extension of the EEA. Starting from the auxiliary pair handed
// over at the transition, each iteration forces the two freshly erased
// locator points to be zeros of delta1 while keeping its degree on the
// one-per-iteration budget; degenerate constellations (where the regular
// linear-combination update has no solution) fall back to multiplicative
// updates whose degree drift dd is repaid by later compensation steps.
// Candidates are collected once per iteration, in polynomial form or as
// length-n evaluation vectors with identical integer degree bookkeeping.
#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <utility>

#include "gmdrs/channel.hpp"
#include "gmdrs/eea.hpp"

namespace gmdrs {

enum class CaseTag : std::uint8_t { Regular, Fail1, Fail2, Mixed };

enum class StepAction : std::uint8_t {
    Regular,       // delta1' = a*delta2 + (x+b)*delta1
    SpecialPlus,   // delta1' = (x+a1)(x+a2)*delta1, dd+1  (Fail2 and Mixed)
    SpecialMinus,  // delta1 unchanged, delta2' = (x+a1)(x+a2)*delta2, dd-1
    CompPlus,      // delta1' = (x+a)*delta2 + b*delta1, dd-1
    CompMinus,     // delta1' = (x+a1)(x+a2)*delta1, delta2' = a*delta2 + (x+b)*delta1, dd+1
};

enum class D2Mode : std::uint8_t {
    LinearCombo,  // delta2' = delta1 + (a*x+b)*delta2
    SingleRoot,   // delta2' = (x + root)*delta2 (delta2 already vanishes at the other point)
    RootPair,     // delta2' = (x+a1)(x+a2)*delta2
    CombineComp,  // delta2' = a*delta2 + (x+b)*delta1 (CompMinus shape)
    Unchanged,
};

struct PairEvals {
    Gf d11, d12;  // delta1 at a1, a2
    Gf d21, d22;  // delta2 at a1, a2
    Gf dbar;      // d11*d22 - d12*d21
};

struct Classification {
    CaseTag tag;
    bool d2_single_zero;  // exactly one of d21, d22 is zero
    PairEvals evals;
};

struct StepPlan {
    CaseTag tag;
    StepAction action;
    D2Mode d2_mode;
    Gf ca = 0, cb = 0;    // delta1 combination coefficients
    Gf c2a = 0, c2b = 0;  // delta2 combination coefficients
    Gf single_root = 0;   // D2Mode::SingleRoot factor
    int dd_delta = 0;
    bool emit_extra = false;
    Gf ea = 0, eb = 0;    // extra = ea*delta2 + eb*delta1
};

// Dispatch per Algorithm 1: dd = 0 and dbar != 0 -> regular; dbar = 0 ->
// special with dd adjustment; dd != 0 and dbar != 0 -> compensation, unless
// the blocking rules force a regular update instead.
StepPlan plan_step(const Field& f, const PairEvals& e, Gf a1, Gf a2, int dd, bool qhat_used);

struct DeltaState {
    Poly delta1, delta2;
    int deg1 = 0, deg2 = 0;  // tracked degrees (vector form cannot observe them)
    int dd = 0;
    int j = 0;
    std::vector<int> erased_positions;
    std::vector<Gf> erased_points;
    int base_deg = 0;
    bool qhat_used = false;
};

struct EvalState {
    std::vector<Gf> v1, v2;  // component i = delta at locator point alpha^(-i)
    int deg1 = 0, deg2 = 0;
    int dd = 0;
    int j = 0;
    std::vector<int> erased_positions;
    std::vector<Gf> erased_points;
    int base_deg = 0;
    bool qhat_used = false;
};

DeltaState make_delta_state(const TransitionInfo& init, const Code& code);
EvalState make_eval_state(const TransitionInfo& init, const Code& code);

PairEvals eval_pair(const DeltaState& st, Gf a1, Gf a2);

Classification classify(const DeltaState& st, Gf a1, Gf a2);

// The per-case update operations. Each consumes one erasure pair and
// returns the advanced state; preconditions follow the classification.
DeltaState regular_update(const DeltaState& st, Gf a1, Gf a2);
DeltaState special_update_plus(const DeltaState& st, Gf a1, Gf a2);   // Fail2 / Mixed
DeltaState special_update_minus(const DeltaState& st, Gf a1, Gf a2);  // Fail1
DeltaState compensate_plus(const DeltaState& st, Gf a1, Gf a2);       // dd > 0
DeltaState compensate_minus(const DeltaState& st, Gf a1, Gf a2);      // dd < 0

enum class Origin : std::uint8_t { Bmd, Regular, Special, Extra, Trial };

struct Candidate {
    std::vector<Gf> evals;        // locator values at all n locator points
    std::optional<Poly> poly;     // present on the polynomial path
    int degree = 0;               // tracked degree
    std::vector<int> erased;      // positions forced to be roots
    int trial = 0;
    Origin origin = Origin::Bmd;
    int dd = 0;                   // drift at emission; nonzero marks the deferral tag
};

using CandidateList = std::vector<Candidate>;

// Additional solution available in degenerate iterations when the q-hat
// head was folded into delta2 at initialization.
std::optional<Candidate> extra_solution(const DeltaState& st, Gf a1, Gf a2);

struct GmdConfig {
    bool use_qhat = true;
    std::ostream* trace = nullptr;
};

CandidateList gmd_run(const TransitionInfo& init, const ErasureSchedule& schedule,
                      const Code& code, const GmdConfig& cfg = {});
CandidateList gmd_run_vectors(const TransitionInfo& init, const ErasureSchedule& schedule,
                              const Code& code, const GmdConfig& cfg = {});

const char* to_string(CaseTag tag);
const char* to_string(StepAction action);
const char* to_string(Origin origin);

}  // namespace gmdrs
