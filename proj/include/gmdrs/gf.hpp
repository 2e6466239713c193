// SPDX-License-Identifier: Apache-2.0
//
// GF(2^m) arithmetic context: log/antilog tables over a validated primitive
// polynomial, plus the order-n element used by the spectral transforms.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace gmdrs {

using Gf = std::uint16_t;

// Running tally of field multiplications (mul/div/inv/pow count; additions
// are free). Thread-local so concurrent decode jobs do not race.
std::uint64_t mul_count() noexcept;
void bump_mul_count(std::uint64_t k) noexcept;

class Field {
public:
    // n = 0 selects the full multiplicative group, n = q - 1. Otherwise n
    // must divide q - 1; the evaluation element alpha then has order n.
    Field(unsigned m, std::uint32_t primitive_poly, std::size_t n = 0);

    unsigned m() const noexcept { return m_; }
    std::size_t q() const noexcept { return q_; }
    std::size_t n() const noexcept { return n_; }
    std::uint32_t primitive_poly() const noexcept { return poly_; }

    Gf add(Gf a, Gf b) const noexcept { return a ^ b; }
    Gf sub(Gf a, Gf b) const noexcept { return a ^ b; }  // char 2

    Gf mul(Gf a, Gf b) const noexcept {
        bump_mul_count(1);
        if (a == 0 || b == 0) return 0;
        return antilog_[log_[a] + log_[b]];
    }
    Gf inv(Gf a) const;
    Gf div(Gf a, Gf b) const { return mul(a, inv(b)); }
    Gf pow(Gf a, long long e) const;

    // The order-n evaluation element.
    Gf alpha() const noexcept { return alpha_; }
    Gf alpha_pow(long long e) const noexcept;

    // Fields with equal parameters are interchangeable.
    bool operator==(const Field& o) const noexcept {
        return m_ == o.m_ && poly_ == o.poly_ && n_ == o.n_;
    }

private:
    unsigned m_ = 0;
    std::uint32_t poly_ = 0;
    std::size_t q_ = 0, n_ = 0;
    Gf alpha_ = 0;
    std::size_t alpha_log_ = 0;
    std::vector<std::size_t> log_;  // indexed by element, valid for 1..q-1
    std::vector<Gf> antilog_;       // doubled so mul can skip the mod
};

std::uint32_t default_primitive_poly(unsigned m);
std::uint32_t find_primitive_poly(unsigned m);

// "gf(2^4):0x13"
struct FieldSpec {
    unsigned m;
    std::uint32_t poly;
};
FieldSpec parse_field_spec(std::string_view text);

}  // namespace gmdrs
