// SPDX-License-Identifier: Apache-2.0

#include "gmdrs/select.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace gmdrs {

std::optional<std::vector<int>> root_support(std::span<const Gf> evals, int degree) {
    std::vector<int> support;
    for (std::size_t i = 0; i < evals.size(); ++i)
        if (evals[i] == 0) support.push_back(static_cast<int>(i));
    if (degree < 0 || static_cast<int>(support.size()) != degree) return std::nullopt;
    return support;
}

std::optional<Word> recover_error(const Word& r, std::span<const int> support, const Poly& S,
                                  const Code& code) {
    (void)r;  // the error word is determined by the syndrome alone
    const Field& f = code.field();
    const std::size_t t = support.size();
    const std::size_t rows = code.d() - 1;
    if (t > rows) return std::nullopt;
    if (t == 0) {
        if (!S.is_zero()) return std::nullopt;
        return Word{std::vector<Gf>(code.n(), 0), Domain::Time};
    }

    // Row j of the full system is (alpha^{i_l})^j; the leading t x t block is
    // Vandermonde on distinct nonzero nodes, so elimination cannot fail.
    std::vector<Gf> nodes(t);
    for (std::size_t l = 0; l < t; ++l)
        nodes[l] = f.alpha_pow(support[l]);

    std::vector<std::vector<Gf>> a(t, std::vector<Gf>(t + 1));
    std::vector<Gf> row(t, 1);
    for (std::size_t j = 0; j < t; ++j) {
        for (std::size_t l = 0; l < t; ++l) a[j][l] = row[l];
        a[j][t] = S.coeff(static_cast<int>(j));
        for (std::size_t l = 0; l < t; ++l) row[l] = f.mul(row[l], nodes[l]);
    }

    for (std::size_t col = 0; col < t; ++col) {
        std::size_t pivot = col;
        while (pivot < t && a[pivot][col] == 0) ++pivot;
        if (pivot == t) return std::nullopt;
        std::swap(a[col], a[pivot]);
        const Gf inv = f.inv(a[col][col]);
        for (std::size_t c = col; c <= t; ++c) a[col][c] = f.mul(a[col][c], inv);
        for (std::size_t rrow = 0; rrow < t; ++rrow) {
            if (rrow == col || a[rrow][col] == 0) continue;
            const Gf factor = a[rrow][col];
            for (std::size_t c = col; c <= t; ++c)
                a[rrow][c] = f.sub(a[rrow][c], f.mul(factor, a[col][c]));
        }
    }

    std::vector<Gf> values(t);
    for (std::size_t l = 0; l < t; ++l) values[l] = a[l][t];

    // The remaining d-1-t syndrome rows must agree, otherwise the candidate
    // support cannot explain the received word. row still holds nodes^t.
    for (std::size_t j = t; j < rows; ++j) {
        Gf acc = 0;
        for (std::size_t l = 0; l < t; ++l) {
            acc = f.add(acc, f.mul(values[l], row[l]));
            row[l] = f.mul(row[l], nodes[l]);
        }
        if (acc != S.coeff(static_cast<int>(j))) return std::nullopt;
    }

    Word e{std::vector<Gf>(code.n(), 0), Domain::Time};
    for (std::size_t l = 0; l < t; ++l)
        e.symbols[static_cast<std::size_t>(support[l])] = values[l];
    return e;
}

double weighted_distance(const Word& a, const Word& b, std::span<const double> w) {
    if (a.symbols.size() != b.symbols.size() || w.size() != a.symbols.size())
        throw std::invalid_argument("weighted_distance: length mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (a.symbols[i] != b.symbols[i]) sum += w[i];
    return sum;
}

DecodeResult select_best(const CandidateList& candidates, const Word& r, const Poly& S,
                         std::span<const double> w, const Code& code) {
    if (w.size() != r.symbols.size())
        throw std::invalid_argument("select_best: reliability vector length mismatch");

    // The metric only needs to know which positions are in error, so each
    // candidate is keyed by the weight of its root support, O(n) apiece.
    struct Survivor {
        std::vector<int> support;
        double support_weight;
        std::size_t size;
        int trial;
    };
    std::vector<Survivor> survivors;
    std::set<std::vector<int>> seen;
    for (const Candidate& cand : candidates) {
        auto support = root_support(cand.evals, cand.degree);
        if (!support) continue;
        if (!seen.insert(*support).second) continue;
        double sw = 0.0;
        for (int pos : *support) sw += w[static_cast<std::size_t>(pos)];
        const std::size_t size = support->size();
        survivors.push_back({std::move(*support), sw, size, cand.trial});
    }
    std::stable_sort(survivors.begin(), survivors.end(), [](const Survivor& a, const Survivor& b) {
        return std::tie(a.support_weight, a.size, a.trial) <
               std::tie(b.support_weight, b.size, b.trial);
    });

    // Error values are evaluated lazily in metric order; the solve doubles as
    // a consistency check, so an inconsistent support just falls through to
    // the next survivor. Solved zeros can shrink the realized support below
    // the candidate's, so the scan continues while a later survivor could
    // still undercut the best realized distance.
    DecodeResult best;
    std::size_t best_errors = 0;
    for (const Survivor& s : survivors) {
        if (best.success && s.support_weight > best.weighted_distance) break;

        auto error = recover_error(r, s.support, S, code);
        if (!error) continue;

        Word cw = r;
        std::vector<int> actual;
        for (std::size_t i = 0; i < cw.symbols.size(); ++i) {
            if (error->symbols[i] != 0) {
                cw.symbols[i] ^= error->symbols[i];
                actual.push_back(static_cast<int>(i));
            }
        }
        const double dist = weighted_distance(r, cw, w);
        const auto key = std::make_tuple(dist, actual.size(), s.trial);
        if (!best.success || key < std::make_tuple(best.weighted_distance, best_errors, best.trial)) {
            best.success = true;
            best.codeword = std::move(cw);
            best.error_support = std::move(actual);
            best.trial = s.trial;
            best.weighted_distance = dist;
            best_errors = std::get<1>(key);
        }
    }
    return best;
}

}  // namespace gmdrs
