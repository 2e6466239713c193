// SPDX-License-Identifier: Apache-2.0

#include "gmdrs/oracle.hpp"

#include <stdexcept>

#include "gmdrs/eea.hpp"

namespace gmdrs {

std::vector<Word> all_codewords(const Code& code) {
    const std::size_t q = code.field().q();
    double total = 1.0;
    for (std::size_t i = 0; i < code.k(); ++i) total *= static_cast<double>(q);
    if (total > static_cast<double>(1u << 20))
        throw std::invalid_argument("exhaustive_ml: q^k exceeds 2^20");

    std::vector<Word> book;
    book.reserve(static_cast<std::size_t>(total));
    std::vector<Gf> info(code.k(), 0);
    while (true) {
        book.push_back(encode(info, code));
        std::size_t digit = 0;
        while (digit < info.size()) {
            if (++info[digit] < q) break;
            info[digit++] = 0;
        }
        if (digit == info.size()) break;
    }
    return book;
}

Word exhaustive_ml(const Word& r, std::span<const double> w, const Code&,
                   std::span<const Word> codebook) {
    const Word* best = nullptr;
    double best_dist = 0.0;
    for (const Word& c : codebook) {
        const double dist = weighted_distance(r, c, w);
        if (!best || dist < best_dist) {
            best = &c;
            best_dist = dist;
        }
    }
    if (!best) throw std::invalid_argument("exhaustive_ml: empty codebook");
    return *best;
}

Word exhaustive_ml(const Word& r, std::span<const double> w, const Code& code) {
    const auto book = all_codewords(code);
    return exhaustive_ml(r, w, code, book);
}

std::optional<Poly> trial_decode(const Word& r, std::span<const int> erased, const Code& code) {
    const Field& f = code.field();
    const std::size_t eps = erased.size();
    if (eps >= code.d()) throw std::invalid_argument("trial_decode: |X| must be < d");

    Poly gamma = Poly::one(f);
    for (int pos : erased) gamma = mul_linear(gamma, code.locator_point(static_cast<std::size_t>(pos)));

    const Poly S = syndrome(r, code);
    const Poly T = (gamma * S).truncated(static_cast<int>(code.d()) - 1);

    EeaState st{Poly::monomial(f, static_cast<int>(code.d()) - 1), T, Poly(f), Poly::one(f), 0};
    const int d1 = static_cast<int>(code.d()) - 1;
    // Stop at the first index satisfying both the remainder threshold and the
    // auxiliary-degree condition; at eps = 0 this is exactly the BMD stop.
    auto stopped = [&] {
        return 2 * st.r_cur.degree() < d1 + static_cast<int>(eps) &&
               st.u_cur.degree() + static_cast<int>(eps) > st.r_cur.degree();
    };
    while (!stopped()) eea_step(st);

    Poly locator = st.u_cur * gamma;
    std::vector<Gf> evals(code.n());
    for (std::size_t i = 0; i < code.n(); ++i) evals[i] = locator.eval(code.locator_point(i));
    if (!root_support(evals, locator.degree())) return std::nullopt;
    return locator;
}

TrialGmdOutput trial_gmd(const Word& r, const ErasureSchedule& schedule,
                         std::span<const double> w, const Code& code) {
    TrialGmdOutput out;
    const std::size_t trials = schedule.pairs.size() + 1;
    out.per_trial.resize(trials);
    for (std::size_t j = 0; j < trials; ++j) {
        const auto erased = schedule.prefix(j);
        out.per_trial[j] = trial_decode(r, erased, code);
        if (!out.per_trial[j]) continue;
        Candidate cand;
        cand.poly = *out.per_trial[j];
        cand.degree = cand.poly->degree();
        cand.evals.resize(code.n());
        for (std::size_t i = 0; i < code.n(); ++i)
            cand.evals[i] = cand.poly->eval(code.locator_point(i));
        cand.erased.assign(erased.begin(), erased.end());
        cand.trial = static_cast<int>(j);
        cand.origin = Origin::Trial;
        out.candidates.push_back(std::move(cand));
    }
    out.result = select_best(out.candidates, r, syndrome(r, code), w, code);
    return out;
}

}  // namespace gmdrs
