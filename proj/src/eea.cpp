// SPDX-License-Identifier: Apache-2.0

#include "gmdrs/eea.hpp"

#include <stdexcept>

namespace gmdrs {

EeaState eea_init(const Poly& syndrome, const Code& code) {
    const Field& f = code.field();
    if (syndrome.degree() >= static_cast<int>(code.d()) - 1)
        throw std::invalid_argument("eea: syndrome degree must be < d-1");
    EeaState st{Poly::monomial(f, static_cast<int>(code.d()) - 1), syndrome,
                Poly(f), Poly::one(f), 0};
    return st;
}

void eea_step(EeaState& st) {
    if (st.r_cur.is_zero()) throw std::logic_error("eea: step past terminal state");
    DivMod dm = divmod(st.r_prev, st.r_cur);
    Poly u_next = st.u_prev - dm.quot * st.u_cur;
    st.r_prev = std::move(st.r_cur);
    st.r_cur = std::move(dm.rem);
    st.u_prev = std::move(st.u_cur);
    st.u_cur = std::move(u_next);
    ++st.step;
}

BmdSolution decode_bmd(const Poly& syndrome, const Code& code) {
    const Field& f = code.field();
    if (syndrome.is_zero()) return {Poly::one(f), Poly(f)};
    EeaState st = eea_init(syndrome, code);
    while (st.u_cur.degree() <= st.r_cur.degree()) eea_step(st);
    return {st.u_cur, st.r_cur};  // omega = -r, and -1 = 1 in char 2
}

Poly quotient_head(const Poly& num, const Poly& den, int steps) {
    if (den.is_zero()) throw std::domain_error("eea: quotient head of division by zero");
    const Field& f = num.field();
    const int dq = num.degree() - den.degree();
    if (dq < 0 || steps <= 0) return Poly(f);
    if (steps > dq + 1) steps = dq + 1;

    Poly rem = num;
    Poly head(f);
    const Gf lead_inv = f.inv(den.lead());
    for (int i = 0; i < steps; ++i) {
        const int target = dq - i;
        const Gf c = f.mul(rem.coeff(target + den.degree()), lead_inv);
        if (c != 0) {
            head = head + Poly::monomial(f, target, c);
            rem = rem - den.shifted(target).scaled(c);
        }
    }
    return head;
}

std::optional<TransitionInfo> probe_transition(const EeaState& st, const Code& code,
                                               bool use_qhat) {
    if (st.r_cur.is_zero()) throw std::invalid_argument("eea: probe on terminal state");
    const int half = (static_cast<int>(code.d()) - 1) / 2;
    const int c_next = st.r_cur.degree() - st.u_cur.degree() + 1;
    const int deg_q = st.r_prev.degree() - st.r_cur.degree();
    if (deg_q + 1 <= c_next && deg_q <= half) return std::nullopt;

    TransitionInfo info;
    info.c_next = c_next;
    info.delta1_init = st.u_cur;
    if (c_next > 0 && use_qhat) {
        info.q_hat = quotient_head(st.r_prev, st.r_cur, c_next);
        info.delta2_init = st.u_prev - *info.q_hat * st.u_cur;
    } else {
        info.delta2_init = st.u_prev;
    }
    info.base_deg = info.delta1_init.degree();
    info.deg2 = info.delta2_init.degree();
    return info;
}

TransitionInfo run_to_transition(const Poly& syndrome, const Code& code, bool use_qhat) {
    EeaState st = eea_init(syndrome, code);
    while (true) {
        if (st.r_cur.is_zero()) {
            // Syndrome fully consumed; nothing left to determine.
            TransitionInfo info;
            info.c_next = Poly::kZeroDegree;
            info.delta1_init = st.u_cur;
            info.delta2_init = st.u_prev;
            info.base_deg = info.delta1_init.degree();
            info.deg2 = info.delta2_init.degree();
            return info;
        }
        if (auto info = probe_transition(st, code, use_qhat)) return *info;
        eea_step(st);
    }
}

}  // namespace gmdrs
