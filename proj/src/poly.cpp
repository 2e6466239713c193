// SPDX-License-Identifier: Apache-2.0

#include "gmdrs/poly.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace gmdrs {

namespace {

void check_same_field(const Poly& a, const Poly& b) {
    if (!(a.field() == b.field()))
        throw std::invalid_argument("poly: operands belong to different fields");
}

}  // namespace

Poly::Poly(const Field& f, std::vector<Gf> coeffs) : f_(&f), c_(std::move(coeffs)) {
    for (Gf c : c_) {
        if (c >= f.q()) throw std::invalid_argument("poly: coefficient outside field");
    }
    normalize();
}

Poly Poly::monomial(const Field& f, int degree, Gf coeff) {
    if (degree < 0) throw std::invalid_argument("poly: monomial degree must be >= 0");
    Poly p(f);
    if (coeff != 0) {
        p.c_.assign(static_cast<std::size_t>(degree) + 1, 0);
        p.c_.back() = coeff;
    }
    return p;
}

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::scaled(Gf s) const {
    Poly out(*f_);
    if (s == 0 || is_zero()) return out;
    out.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = f_->mul(c_[i], s);
    out.normalize();
    return out;
}

Poly Poly::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("poly: negative shift");
    Poly out(*f_);
    if (is_zero()) return out;
    out.c_.assign(static_cast<std::size_t>(k), 0);
    out.c_.insert(out.c_.end(), c_.begin(), c_.end());
    return out;
}

Poly Poly::truncated(int k) const {
    Poly out(*f_);
    if (k <= 0 || is_zero()) return out;
    out.c_.assign(c_.begin(), c_.begin() + std::min<std::size_t>(c_.size(), static_cast<std::size_t>(k)));
    out.normalize();
    return out;
}

Gf Poly::eval(Gf x0) const {
    if (is_zero()) return 0;
    Gf acc = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) acc = f_->add(f_->mul(acc, x0), c_[i]);
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    Poly out(a.field());
    out.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) out.c_[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out.c_[i] ^= b.c_[i];
    out.normalize();
    return out;
}

Poly operator*(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    Poly out(a.field());
    if (a.is_zero() || b.is_zero()) return out;
    const Field& f = a.field();
    out.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out.c_[i + j] ^= f.mul(a.c_[i], b.c_[j]);
    }
    out.normalize();
    return out;
}

DivMod divmod(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    if (b.is_zero()) throw std::domain_error("poly: division by zero polynomial");
    const Field& f = a.field();
    if (a.degree() < b.degree()) return {Poly(f), a};

    std::vector<Gf> rem(a.coeffs().begin(), a.coeffs().end());
    const int db = b.degree();
    const Gf lb_inv = f.inv(b.lead());
    std::vector<Gf> quot(static_cast<std::size_t>(a.degree() - db) + 1, 0);
    for (int i = a.degree(); i >= db; --i) {
        const Gf top = rem[static_cast<std::size_t>(i)];
        if (top == 0) continue;
        const Gf q = f.mul(top, lb_inv);
        quot[static_cast<std::size_t>(i - db)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] ^= f.mul(q, b.coeff(j));
    }
    return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly gcd_monic(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("poly: gcd(0, 0)");
    while (!b.is_zero()) {
        Poly r = divmod(a, b).rem;
        a = b;
        b = std::move(r);
    }
    return a.scaled(a.field().inv(a.lead()));
}

Poly mul_linear(const Poly& p, Gf b) {
    return p.shifted(1) + p.scaled(b);
}

Poly mul_affine(const Poly& p, Gf a, Gf b) {
    return p.scaled(a).shifted(1) + p.scaled(b);
}

bool proportional(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.degree() != b.degree()) return false;
    const Field& f = a.field();
    const Gf s = f.div(b.lead(), a.lead());
    for (int i = 0; i <= a.degree(); ++i)
        if (f.mul(a.coeff(i), s) != b.coeff(i)) return false;
    return true;
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    char buf[8];
    for (int i = 0; i <= p.degree(); ++i) {
        auto res = std::to_chars(buf, buf + sizeof buf, p.coeff(i), 16);
        if (i) out.push_back(',');
        out.append(buf, res.ptr);
    }
    return out;
}

Poly parse_poly(const Field& f, std::string_view text) {
    std::vector<Gf> coeffs;
    if (text == "0") return Poly(f);
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        unsigned v = 0;
        auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v, 16);
        if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
            throw std::invalid_argument("poly: bad coefficient token '" + std::string(tok) + "'");
        coeffs.push_back(static_cast<Gf>(v));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Poly(f, std::move(coeffs));
}

}  // namespace gmdrs
