// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "gmdrs/rs.hpp"

using namespace gmdrs;

namespace {

Word random_time_word(const Code& code, std::mt19937_64& rng) {
    Word w{std::vector<Gf>(code.n()), Domain::Time};
    for (Gf& s : w.symbols) s = static_cast<Gf>(rng() % code.field().q());
    return w;
}

std::vector<Gf> random_info(const Code& code, std::mt19937_64& rng) {
    std::vector<Gf> info(code.k());
    for (Gf& s : info) s = static_cast<Gf>(rng() % code.field().q());
    return info;
}

}  // namespace

TEST_CASE("code parameter validation") {
    Field f(4, 0x13);
    Code code(f, 7);
    CHECK(code.n() == 15);
    CHECK(code.d() == 9);
    CHECK_THROWS_AS(Code(f, 0), std::invalid_argument);
    CHECK_THROWS_AS(Code(f, 15), std::invalid_argument);
}

TEST_CASE("dft basics and round-trip") {
    Field f(4, 0x13);
    Code code(f, 7);

    Word zero{std::vector<Gf>(15, 0), Domain::Time};
    CHECK(dft(zero, code).symbols == std::vector<Gf>(15, 0));

    Word delta{std::vector<Gf>(15, 0), Domain::Time};
    delta.symbols[0] = 1;  // c(x) = 1 evaluates to 1 everywhere
    CHECK(dft(delta, code).symbols == std::vector<Gf>(15, 1));

    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        Word w = random_time_word(code, rng);
        CHECK(idft(dft(w, code), code) == w);
    }
    CHECK_THROWS_AS(dft(Word{std::vector<Gf>(15), Domain::Spectral}, code),
                    std::invalid_argument);
}

TEST_CASE("encode places information in the upper spectrum") {
    Field f(4, 0x13);
    Code code(f, 7);

    CHECK(encode(std::vector<Gf>(7, 0), code).symbols == std::vector<Gf>(15, 0));
    CHECK_THROWS_AS(encode(std::vector<Gf>(6, 0), code), std::invalid_argument);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const auto info = random_info(code, rng);
        const Word c = encode(info, code);
        const Word C = dft(c, code);
        for (std::size_t j = 0; j < 8; ++j) CHECK(C.symbols[j] == 0);  // d-1 = 8 leading zeros
        for (std::size_t j = 0; j < 7; ++j) CHECK(C.symbols[8 + j] == info[j]);
        CHECK(is_codeword(c, code));
    }
}

TEST_CASE("encode is linear") {
    Field f(4, 0x13);
    Code code(f, 7);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        auto a = random_info(code, rng);
        auto b = random_info(code, rng);
        std::vector<Gf> sum(code.k());
        for (std::size_t j = 0; j < code.k(); ++j) sum[j] = static_cast<Gf>(a[j] ^ b[j]);
        const Word ca = encode(a, code), cb = encode(b, code), cs = encode(sum, code);
        for (std::size_t j = 0; j < code.n(); ++j)
            CHECK(cs.symbols[j] == (ca.symbols[j] ^ cb.symbols[j]));
    }
}

TEST_CASE("syndrome: codewords vanish, additivity, single-error closed form") {
    Field f(4, 0x13);
    Code code(f, 7);
    std::mt19937_64 rng(9);

    for (int i = 0; i < 50; ++i) {
        const Word c = encode(random_info(code, rng), code);
        CHECK(syndrome(c, code).is_zero());

        Word e = random_time_word(code, rng);
        Word r = c;
        for (std::size_t j = 0; j < code.n(); ++j) r.symbols[j] ^= e.symbols[j];
        CHECK(syndrome(r, code) == syndrome(e, code));
    }

    // Weight-1 error: S_j = v * alpha^(i*j), checked against the expansion.
    for (std::size_t pos = 0; pos < code.n(); ++pos) {
        const Gf v = static_cast<Gf>(1 + (rng() % 15));
        Word e{std::vector<Gf>(15, 0), Domain::Time};
        e.symbols[pos] = v;
        const Poly S = syndrome(e, code);
        for (int j = 0; j <= 7; ++j)
            CHECK(S.coeff(j) == f.mul(v, f.alpha_pow(static_cast<long long>(pos) * j)));
    }
}

TEST_CASE("is_codeword flags weight-1 offsets") {
    Field f(4, 0x13);
    Code code(f, 7);
    std::mt19937_64 rng(11);
    const Word c = encode(random_info(code, rng), code);
    CHECK(is_codeword(c, code));
    Word flipped = c;
    flipped.symbols[4] ^= 0x5;
    CHECK(!is_codeword(flipped, code));
    CHECK(is_codeword(Word{std::vector<Gf>(15, 0), Domain::Time}, code));
}

TEST_CASE("RS(7,3,5) attains minimum distance 5 exhaustively") {
    Field f(3, 0xB);
    Code code(f, 3);
    std::vector<Word> all;
    for (std::size_t idx = 0; idx < 512; ++idx) {
        std::vector<Gf> info{static_cast<Gf>(idx % 8), static_cast<Gf>((idx / 8) % 8),
                             static_cast<Gf>(idx / 64)};
        all.push_back(encode(info, code));
    }
    std::size_t min_dist = code.n();
    for (std::size_t a = 0; a < all.size(); ++a) {
        for (std::size_t b = a + 1; b < all.size(); ++b) {
            std::size_t dist = 0;
            for (std::size_t j = 0; j < code.n(); ++j)
                if (all[a].symbols[j] != all[b].symbols[j]) ++dist;
            CHECK(dist >= 5);
            min_dist = std::min(min_dist, dist);
        }
    }
    CHECK(min_dist == 5);
}

TEST_CASE("locator point convention: the annihilator vanishes on the support") {
    // For support T, lambda(x) = prod_{i in T} (x - alpha^(-i)) must vanish
    // at alpha^(-i) exactly for i in T.
    Field f(4, 0x13);
    Code code(f, 7);
    Poly lambda = Poly::one(f);
    const std::vector<int> support{2, 8, 13};
    for (int i : support)
        lambda = mul_linear(lambda, code.locator_point(static_cast<std::size_t>(i)));
    for (std::size_t i = 0; i < code.n(); ++i) {
        const bool in_support =
            std::find(support.begin(), support.end(), static_cast<int>(i)) != support.end();
        CHECK((lambda.eval(code.locator_point(i)) == 0) == in_support);
    }
}

TEST_CASE("code spec parsing") {
    const CodeSpec spec = parse_code_spec("rs(15,7)@gf(2^4):0x13");
    CHECK(spec.n == 15);
    CHECK(spec.k == 7);
    CHECK(spec.field.m == 4);
    CHECK(spec.field.poly == 0x13);
    CHECK_THROWS_AS(parse_code_spec("rs(15;7)@gf(2^4):0x13"), std::invalid_argument);
    CHECK_THROWS_AS(parse_code_spec("rs(15,7)"), std::invalid_argument);
}
