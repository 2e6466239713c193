// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gmdrs/gf.hpp"

using namespace gmdrs;

namespace {

// Independent reference: carry-less multiply then reduction mod the
// defining polynomial, no tables involved.
Gf clmul_reduce(Gf a, Gf b, std::uint32_t poly, unsigned m) {
    std::uint32_t acc = 0;
    for (unsigned i = 0; i < m; ++i)
        if (b & (1u << i)) acc ^= static_cast<std::uint32_t>(a) << i;
    for (int i = 2 * static_cast<int>(m) - 2; i >= static_cast<int>(m); --i)
        if (acc & (1u << i)) acc ^= poly << (i - static_cast<int>(m));
    return static_cast<Gf>(acc);
}

}  // namespace

TEST_CASE("defining relation of GF(16) with x^4+x+1") {
    Field f(4, 0x13);
    CHECK(f.pow(0x2, 4) == 0x3);  // alpha^4 = alpha + 1
}

TEST_CASE("non-primitive polynomial is rejected with a named error") {
    // x^4+x^3+x^2+x+1 is irreducible but its root has order 5.
    CHECK_THROWS_WITH_AS(Field(4, 0x1F), doctest::Contains("not primitive"),
                         std::invalid_argument);
    // x^4+x^2+1 = (x^2+x+1)^2.
    CHECK_THROWS_WITH_AS(Field(4, 0x15), doctest::Contains("reducible"), std::invalid_argument);
    CHECK_THROWS_AS(Field(4, 0x3), std::invalid_argument);   // wrong degree
    CHECK_THROWS_AS(Field(1, 0x3), std::invalid_argument);   // m out of range
    CHECK_THROWS_AS(Field(17, 0x3), std::invalid_argument);  // m out of range
}

TEST_CASE("GF(8): the full group has order 7") {
    Field f(3, 0xB);
    CHECK(f.q() == 8);
    CHECK(f.n() == 7);
    CHECK(f.pow(f.alpha(), 7) == 1);
    for (int k = 1; k < 7; ++k) CHECK(f.pow(f.alpha(), k) != 1);
}

TEST_CASE("multiplication agrees with carry-less reference") {
    Field f(4, 0x13);
    CHECK(f.mul(0x2, 0x9) == 0x1);  // stated example: x * (x^3 + 1) = 1
    for (unsigned a = 0; a < 16; ++a)
        for (unsigned b = 0; b < 16; ++b)
            CHECK(f.mul(static_cast<Gf>(a), static_cast<Gf>(b)) ==
                  clmul_reduce(static_cast<Gf>(a), static_cast<Gf>(b), 0x13, 4));
}

TEST_CASE("absorbing zero and identity inverse") {
    Field f(4, 0x13);
    for (unsigned x = 0; x < 16; ++x) {
        CHECK(f.mul(0, static_cast<Gf>(x)) == 0);
        CHECK(f.mul(static_cast<Gf>(x), 0) == 0);
    }
    CHECK(f.inv(1) == 1);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
}

TEST_CASE("field axioms on random triples") {
    Field f(8, 0x11D);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        const Gf a = static_cast<Gf>(rng() % 256);
        const Gf b = static_cast<Gf>(rng() % 256);
        const Gf c = static_cast<Gf>(rng() % 256);
        CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    }
}

TEST_CASE("mul/inv round-trip, exhaustive for m <= 8") {
    for (unsigned m : {2u, 3u, 4u, 8u}) {
        Field f(m, default_primitive_poly(m));
        for (std::size_t a = 1; a < f.q(); ++a)
            CHECK(f.mul(static_cast<Gf>(a), f.inv(static_cast<Gf>(a))) == 1);
    }
}

TEST_CASE("alpha order for a divisor block length") {
    Field f(4, 0x13, 5);  // 5 | 15
    CHECK(f.n() == 5);
    CHECK(f.pow(f.alpha(), 5) == 1);
    for (int k = 1; k < 5; ++k) CHECK(f.pow(f.alpha(), k) != 1);
    CHECK_THROWS_AS(Field(4, 0x13, 4), std::invalid_argument);  // 4 does not divide 15
    CHECK(f.alpha_pow(-1) == f.inv(f.alpha()));
}

TEST_CASE("default polynomials are primitive for every supported m") {
    for (unsigned m = 2; m <= 16; ++m) CHECK_NOTHROW(Field(m, default_primitive_poly(m)));
    CHECK(find_primitive_poly(4) == 0x13);
}

TEST_CASE("field spec parsing") {
    const FieldSpec spec = parse_field_spec("gf(2^4):0x13");
    CHECK(spec.m == 4);
    CHECK(spec.poly == 0x13);
    CHECK_THROWS_AS(parse_field_spec("gf(4):0x13"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field_spec("gf(2^4)"), std::invalid_argument);
}

TEST_CASE("multiplication counter advances") {
    Field f(4, 0x13);
    const std::uint64_t before = mul_count();
    (void)f.mul(3, 5);
    (void)f.inv(3);
    CHECK(mul_count() == before + 2);
}
