// SPDX-License-Identifier: Apache-2.0
//
// Dense univariate polynomials over GF(2^m). Coefficients are stored by
// ascending power and kept normalized (no trailing zeros); the zero
// polynomial is the empty sequence with a sentinel degree.
#pragma once

#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gmdrs/gf.hpp"

namespace gmdrs {

class Poly {
public:
    // Far below any real degree, so degree comparisons in the EEA stop
    // conditions stay total without special-casing the zero polynomial.
    static constexpr int kZeroDegree = std::numeric_limits<int>::min() / 4;

    // Unbound placeholder, only meaningful as an assignment target.
    Poly() = default;

    explicit Poly(const Field& f) : f_(&f) {}
    Poly(const Field& f, std::vector<Gf> coeffs);

    static Poly one(const Field& f) { return Poly(f, {1}); }
    static Poly monomial(const Field& f, int degree, Gf coeff = 1);

    const Field& field() const noexcept { return *f_; }
    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept {
        return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1;
    }
    Gf coeff(int i) const noexcept {
        return (i < 0 || i >= static_cast<int>(c_.size())) ? Gf{0} : c_[static_cast<std::size_t>(i)];
    }
    Gf lead() const noexcept { return c_.empty() ? Gf{0} : c_.back(); }
    std::span<const Gf> coeffs() const noexcept { return c_; }

    Poly scaled(Gf s) const;
    Poly shifted(int k) const;       // * x^k
    Poly truncated(int k) const;     // mod x^k
    Gf eval(Gf x0) const;            // Horner

    bool operator==(const Poly& o) const { return *f_ == *o.f_ && c_ == o.c_; }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b) { return a + b; }  // char 2
    friend Poly operator*(const Poly& a, const Poly& b);

private:
    void normalize();

    const Field* f_ = nullptr;
    std::vector<Gf> c_;
};

struct DivMod {
    Poly quot, rem;
};
DivMod divmod(const Poly& a, const Poly& b);

// Monic gcd; test/validation support only, decoding paths never normalize.
Poly gcd_monic(Poly a, Poly b);

// (x + b) * p and (a*x + b) * p, the GMD update building blocks.
Poly mul_linear(const Poly& p, Gf b);
Poly mul_affine(const Poly& p, Gf a, Gf b);

bool proportional(const Poly& a, const Poly& b);

// Fixture form "c0,c1,...,cd", hex coefficients by ascending power.
std::string to_string(const Poly& p);
Poly parse_poly(const Field& f, std::string_view text);

}  // namespace gmdrs
