// SPDX-License-Identifier: Apache-2.0

#include "gmdrs/gf.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace gmdrs {

namespace {

thread_local std::uint64_t t_mul_count = 0;

unsigned gf2_degree(std::uint32_t p) {
    unsigned d = 0;
    while (p >> (d + 1)) ++d;
    return d;
}

// Remainder of a / b over GF(2), both as bitmasks.
std::uint32_t gf2_mod(std::uint32_t a, std::uint32_t b) {
    const unsigned db = gf2_degree(b);
    while (a && gf2_degree(a) >= db) a ^= b << (gf2_degree(a) - db);
    return a;
}

bool gf2_is_irreducible(std::uint32_t p, unsigned m) {
    for (unsigned d = 1; 2 * d <= m; ++d) {
        for (std::uint32_t f = (1u << d); f < (2u << d); ++f) {
            if (gf2_mod(p, f) == 0) return false;
        }
    }
    return true;
}

std::string poly_name(std::uint32_t p, unsigned m) {
    std::ostringstream os;
    os << "0x" << std::hex << p << std::dec << " (degree " << m << ")";
    return os.str();
}

}  // namespace

std::uint64_t mul_count() noexcept { return t_mul_count; }
void bump_mul_count(std::uint64_t k) noexcept { t_mul_count += k; }

Field::Field(unsigned m, std::uint32_t primitive_poly, std::size_t n)
    : m_(m), poly_(primitive_poly) {
    if (m < 2 || m > 16) throw std::invalid_argument("gf: extension degree m must be in [2, 16]");
    q_ = std::size_t{1} << m;
    if ((primitive_poly >> m) != 1u)
        throw std::invalid_argument("gf: polynomial " + poly_name(primitive_poly, m) +
                                    " does not have degree " + std::to_string(m));

    const std::size_t ord = q_ - 1;
    log_.assign(q_, 0);
    antilog_.assign(2 * ord, 0);
    std::vector<bool> seen(q_, false);

    std::uint32_t b = 1;
    for (std::size_t i = 0; i < ord; ++i) {
        if (seen[b]) {
            if (!gf2_is_irreducible(primitive_poly, m))
                throw std::invalid_argument("gf: polynomial " + poly_name(primitive_poly, m) +
                                            " is reducible over GF(2)");
            throw std::invalid_argument("gf: polynomial " + poly_name(primitive_poly, m) +
                                        " is not primitive (x has order " + std::to_string(i) + ")");
        }
        seen[b] = true;
        log_[b] = i;
        antilog_[i] = static_cast<Gf>(b);
        antilog_[i + ord] = static_cast<Gf>(b);
        b <<= 1;
        if (b & q_) b ^= primitive_poly;
    }
    if (b != 1)
        throw std::invalid_argument("gf: polynomial " + poly_name(primitive_poly, m) +
                                    " is not primitive over GF(2)");

    n_ = (n == 0) ? ord : n;
    if (n_ < 2 || ord % n_ != 0)
        throw std::invalid_argument("gf: block order n = " + std::to_string(n_) +
                                    " does not divide q-1 = " + std::to_string(ord));
    alpha_log_ = ord / n_;
    alpha_ = antilog_[alpha_log_];
}

Gf Field::inv(Gf a) const {
    if (a == 0) throw std::domain_error("gf: inverse of zero");
    bump_mul_count(1);
    const std::size_t ord = q_ - 1;
    return antilog_[ord - log_[a]];
}

Gf Field::pow(Gf a, long long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw std::domain_error("gf: negative power of zero");
        return 0;
    }
    bump_mul_count(1);
    const long long ord = static_cast<long long>(q_) - 1;
    long long le = ((static_cast<long long>(log_[a]) * (e % ord)) % ord + ord) % ord;
    return antilog_[static_cast<std::size_t>(le)];
}

Gf Field::alpha_pow(long long e) const noexcept {
    const long long n = static_cast<long long>(n_);
    long long en = ((e % n) + n) % n;
    const std::size_t ord = q_ - 1;
    return antilog_[(alpha_log_ * static_cast<std::size_t>(en)) % ord];
}

std::uint32_t default_primitive_poly(unsigned m) {
    switch (m) {
        case 2: return 0x7;
        case 3: return 0xB;
        case 4: return 0x13;
        case 5: return 0x25;
        case 6: return 0x43;
        case 7: return 0x89;
        case 8: return 0x11D;
        case 9: return 0x211;
        case 10: return 0x409;
        case 11: return 0x805;
        case 12: return 0x1053;
        case 13: return 0x201B;
        case 14: return 0x4443;
        case 15: return 0x8003;
        case 16: return 0x1100B;
        default: throw std::invalid_argument("gf: no default polynomial for m = " + std::to_string(m));
    }
}

std::uint32_t find_primitive_poly(unsigned m) {
    if (m < 2 || m > 16) throw std::invalid_argument("gf: extension degree m must be in [2, 16]");
    for (std::uint32_t p = (1u << m) | 1u; p < (2u << m); p += 2) {
        try {
            Field probe(m, p);
            return p;
        } catch (const std::invalid_argument&) {
        }
    }
    throw std::logic_error("gf: no primitive polynomial found");  // unreachable
}

FieldSpec parse_field_spec(std::string_view text) {
    // gf(2^M):0xPP
    auto fail = [&] {
        throw std::invalid_argument("field spec '" + std::string(text) +
                                    "' does not match gf(2^m):0xPP");
    };
    if (text.substr(0, 5) != "gf(2^") fail();
    std::size_t close = text.find(')');
    if (close == std::string_view::npos) fail();
    unsigned m = 0;
    auto mres = std::from_chars(text.data() + 5, text.data() + close, m);
    if (mres.ec != std::errc{} || mres.ptr != text.data() + close) fail();
    std::string_view rest = text.substr(close + 1);
    if (rest.substr(0, 3) != ":0x" && rest.substr(0, 3) != ":0X") fail();
    std::uint32_t poly = 0;
    auto pres = std::from_chars(rest.data() + 3, rest.data() + rest.size(), poly, 16);
    if (pres.ec != std::errc{} || pres.ptr != rest.data() + rest.size()) fail();
    return FieldSpec{m, poly};
}

}  // namespace gmdrs
