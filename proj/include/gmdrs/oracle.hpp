// SPDX-License-Identifier: Apache-2.0
//
// Independent slow references that certify the fast path: exhaustive
// weighted-ML decoding at tiny parameters, and classical trial-based GMD
// (a fresh error-erasure decode per trial).
#pragma once

#include "gmdrs/channel.hpp"
#include "gmdrs/select.hpp"

namespace gmdrs {

// All q^k codewords in information-word enumeration order (digit i of the
// index, base q, is info symbol i). Refuses q^k > 2^20.
std::vector<Word> all_codewords(const Code& code);

Word exhaustive_ml(const Word& r, std::span<const double> w, const Code& code);
Word exhaustive_ml(const Word& r, std::span<const double> w, const Code& code,
                   std::span<const Word> codebook);

// Standard error-erasure decoding with the modified syndrome T = Gamma * S
// mod x^(d-1): returns the joint locator u * Gamma when it splits into
// deg-many distinct locator points, nullopt otherwise. Succeeds whenever the
// residual error count t obeys 2t + |X| < d.
std::optional<Poly> trial_decode(const Word& r, std::span<const int> erased, const Code& code);

struct TrialGmdOutput {
    std::vector<std::optional<Poly>> per_trial;  // joint locator of trial j
    CandidateList candidates;
    DecodeResult result;
};

// Independent decodes for X_0, X_1, ..., selected with the same weighted
// metric; the merged decoder's behavioral reference.
TrialGmdOutput trial_gmd(const Word& r, const ErasureSchedule& schedule,
                         std::span<const double> w, const Code& code);

}  // namespace gmdrs
