// SPDX-License-Identifier: Apache-2.0
//
// Spectrally defined RS(n, k, d) codes: a word is a codeword iff its DFT
// vanishes on the first d-1 coefficients. Position i is marked in the
// locator domain by the point alpha^(-i): a locator polynomial vanishing
// there flags position i as erred or erased.
#pragma once

#include "gmdrs/poly.hpp"

namespace gmdrs {

enum class Domain : std::uint8_t { Time, Spectral };

struct Word {
    std::vector<Gf> symbols;
    Domain domain = Domain::Time;

    bool operator==(const Word& o) const = default;
};

class Code {
public:
    // Block length is the field's n; requires 1 <= k < n.
    Code(const Field& f, std::size_t k);

    const Field& field() const noexcept { return *f_; }
    std::size_t n() const noexcept { return f_->n(); }
    std::size_t k() const noexcept { return k_; }
    std::size_t d() const noexcept { return d_; }

    Gf locator_point(std::size_t i) const { return points_.at(i); }
    std::span<const Gf> locator_points() const noexcept { return points_; }

private:
    const Field* f_;
    std::size_t k_, d_;
    Gf n_inv_;
    std::vector<Gf> points_;  // points_[i] = alpha^(-i)

    friend Word idft(const Word&, const Code&);
};

Word dft(const Word& w, const Code& code);
Word idft(const Word& W, const Code& code);
Word encode(std::span<const Gf> info, const Code& code);
Poly syndrome(const Word& r, const Code& code);
bool is_codeword(const Word& w, const Code& code);

// "rs(15,7)@gf(2^4):0x13"
struct CodeSpec {
    std::size_t n, k;
    FieldSpec field;
};
CodeSpec parse_code_spec(std::string_view text);

}  // namespace gmdrs
