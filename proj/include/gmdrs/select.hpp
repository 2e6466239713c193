// SPDX-License-Identifier: Apache-2.0
//
// Candidate validation and final selection: extract root supports from
// evaluation vectors, recover error values by an exact linear solve on the
// syndrome equations (which doubles as a consistency check), and pick the
// codeword of minimum weighted Hamming distance.
#pragma once

#include "gmdrs/gmd.hpp"

namespace gmdrs {

struct DecodeResult {
    bool success = false;
    Word codeword;
    std::vector<int> error_support;  // positions where the codeword differs from r
    int trial = -1;
    double weighted_distance = 0.0;
};

// Positions where the locator vanishes; nullopt when the zero count does not
// match the tracked degree (the locator does not split into distinct
// in-range roots).
std::optional<std::vector<int>> root_support(std::span<const Gf> evals, int degree);

// Solves sum_{i in support} e_i * alpha^(i*j) = S_j for j = 0..d-2 (an
// overdetermined Vandermonde system); nullopt when inconsistent or the
// support exceeds d-1. On success r - e is a codeword.
std::optional<Word> recover_error(const Word& r, std::span<const int> support, const Poly& S,
                                  const Code& code);

double weighted_distance(const Word& a, const Word& b, std::span<const double> w);

// Validity gate, dedup by support, then argmin of the weighted metric with
// lazy error recovery: supports are scored in O(n) apiece, and values are
// only evaluated for candidates that can still win. Ties resolve by (fewer
// errors, lower trial index).
DecodeResult select_best(const CandidateList& candidates, const Word& r, const Poly& S,
                         std::span<const double> w, const Code& code);

}  // namespace gmdrs
