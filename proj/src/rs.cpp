// SPDX-License-Identifier: Apache-2.0

#include "gmdrs/rs.hpp"

#include <charconv>
#include <stdexcept>

namespace gmdrs {

namespace {

void check_word(const Word& w, Domain want, const Code& code, const char* what) {
    if (w.symbols.size() != code.n())
        throw std::invalid_argument(std::string(what) + ": word length != n");
    if (w.domain != want)
        throw std::invalid_argument(std::string(what) + ": wrong word domain");
}

}  // namespace

Code::Code(const Field& f, std::size_t k) : f_(&f), k_(k) {
    const std::size_t n = f.n();
    if (k < 1 || k >= n) throw std::invalid_argument("rs: requires 1 <= k < n");
    d_ = n - k + 1;
    // n | q-1 and q-1 is odd, so n as a field element is 1.
    n_inv_ = 1;
    points_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        points_[i] = f.alpha_pow(-static_cast<long long>(i));
}

Word dft(const Word& w, const Code& code) {
    check_word(w, Domain::Time, code, "dft");
    const Field& f = code.field();
    const Poly p(f, w.symbols);
    Word out{std::vector<Gf>(code.n()), Domain::Spectral};
    for (std::size_t j = 0; j < code.n(); ++j)
        out.symbols[j] = p.eval(f.alpha_pow(static_cast<long long>(j)));
    return out;
}

Word idft(const Word& W, const Code& code) {
    check_word(W, Domain::Spectral, code, "idft");
    const Field& f = code.field();
    const Poly P(f, W.symbols);
    Word out{std::vector<Gf>(code.n()), Domain::Time};
    for (std::size_t i = 0; i < code.n(); ++i)
        out.symbols[i] = f.mul(code.n_inv_, P.eval(code.locator_point(i)));
    return out;
}

Word encode(std::span<const Gf> info, const Code& code) {
    if (info.size() != code.k())
        throw std::invalid_argument("encode: expected exactly k information symbols");
    Word spectrum{std::vector<Gf>(code.n(), 0), Domain::Spectral};
    for (std::size_t i = 0; i < code.k(); ++i)
        spectrum.symbols[code.d() - 1 + i] = info[i];
    return idft(spectrum, code);
}

Poly syndrome(const Word& r, const Code& code) {
    check_word(r, Domain::Time, code, "syndrome");
    const Field& f = code.field();
    const Poly p(f, r.symbols);
    std::vector<Gf> s(code.d() - 1);
    for (std::size_t j = 0; j + 1 < code.d(); ++j)
        s[j] = p.eval(f.alpha_pow(static_cast<long long>(j)));
    return Poly(f, std::move(s));
}

bool is_codeword(const Word& w, const Code& code) {
    return syndrome(w, code).is_zero();
}

CodeSpec parse_code_spec(std::string_view text) {
    auto fail = [&] {
        throw std::invalid_argument("code spec '" + std::string(text) +
                                    "' does not match rs(n,k)@gf(2^m):0xPP");
    };
    if (text.substr(0, 3) != "rs(") fail();
    std::size_t comma = text.find(',');
    std::size_t close = text.find(')');
    std::size_t at = text.find('@');
    if (comma == std::string_view::npos || close == std::string_view::npos ||
        at == std::string_view::npos || !(comma < close && close + 1 == at))
        fail();
    CodeSpec spec{};
    auto nres = std::from_chars(text.data() + 3, text.data() + comma, spec.n);
    auto kres = std::from_chars(text.data() + comma + 1, text.data() + close, spec.k);
    if (nres.ec != std::errc{} || nres.ptr != text.data() + comma ||
        kres.ec != std::errc{} || kres.ptr != text.data() + close)
        fail();
    spec.field = parse_field_spec(text.substr(at + 1));
    return spec;
}

}  // namespace gmdrs
