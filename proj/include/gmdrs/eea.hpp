// SPDX-License-Identifier: Apache-2.0
//
// Extended Euclidean algorithm on (S, x^(d-1)): classical decoding up to
// floor((d-1)/2), plus the probe that decides when the syndrome can no
// longer determine the next quotient and hands the auxiliary pair over to
// the GMD extension.
#pragma once

#include <optional>

#include "gmdrs/rs.hpp"

namespace gmdrs {

struct EeaState {
    Poly r_prev, r_cur;  // remainders r^(j-1), r^(j)
    Poly u_prev, u_cur;  // auxiliaries u^(j-1), u^(j)
    int step = 0;
};

EeaState eea_init(const Poly& syndrome, const Code& code);

// One division step; remainder degrees strictly decrease. Throws on a
// terminal state (r_cur = 0).
void eea_step(EeaState& st);

struct BmdSolution {
    Poly lambda, omega;
};

// Runs the EEA until deg u > deg r. When the true error count is within
// floor((d-1)/2), lambda's roots are exactly the locator points of the
// erred positions; validity is checked by the candidate selector.
BmdSolution decode_bmd(const Poly& syndrome, const Code& code);

struct TransitionInfo {
    int c_next = 0;                // computable coefficients of the next quotient
    std::optional<Poly> q_hat;     // its determinable head, when c_next > 0 and enabled
    Poly delta1_init, delta2_init;
    int base_deg = 0;              // deg delta1_init
    int deg2 = 0;                  // deg delta2_init
};

// CONTINUE (nullopt) while the next quotient is fully determined by the
// syndrome: deg q + 1 <= c_next and deg q <= floor((d-1)/2). Otherwise the
// returned pair seeds the GMD extension; with use_qhat the determinable
// quotient head is folded into delta2.
std::optional<TransitionInfo> probe_transition(const EeaState& st, const Code& code,
                                               bool use_qhat = true);

// Drives eea_step/probe_transition from the syndrome to the hand-over point
// (also handles exact termination, r_cur = 0).
TransitionInfo run_to_transition(const Poly& syndrome, const Code& code, bool use_qhat = true);

// The first `steps` coefficient steps of the long division num / den,
// i.e. the quotient's `steps` highest-degree coefficients.
Poly quotient_head(const Poly& num, const Poly& den, int steps);

}  // namespace gmdrs
