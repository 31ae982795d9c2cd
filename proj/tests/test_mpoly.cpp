/* Copyright 2026 The coefcount Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <random>

#include "coefcount/mpoly.hpp"
#include "doctest.h"

using namespace coefcount;

namespace {

template <class P>
P naive_pow(const P& f, std::uint64_t n) {
    P out = P::one(f.ring(), f.nvars());
    for (std::uint64_t i = 0; i < n; ++i) out = poly_mul(out, f);
    return out;
}

FieldPoly random_poly(const FieldSpec& F, std::size_t k, std::mt19937_64& rng) {
    FieldPoly f(FieldRing{F}, k);
    for (int t = 0; t < 4; ++t) {
        Monomial m(k);
        for (auto& e : m) e = rng() % 3;
        f.add_term(m, static_cast<Residue>(1 + rng() % (F.q() - 1)));
    }
    if (f.is_zero()) f.add_term(Monomial(k, 0), 1);
    return f;
}

}  // namespace

TEST_CASE("parsing and printing") {
    FieldSpec F2;
    FieldPoly f = parse_poly("1+x1+x2+x1*x2^2", 2, F2);
    CHECK(f.size() == 4);
    CHECK(f.coeff({1, 2}) == 1);
    CHECK(f.to_string() == "1 + x2 + x1 + x1*x2^2");
    CHECK(parse_poly("x+x", 1, F2).is_zero());
    FieldSpec F4 = FieldSpec::extension(2, 2);
    FieldPoly g = parse_poly("1+a*x1+a^2*x2", 2, F4);
    CHECK(g.coeff({1, 0}) == F4.generator());
    CHECK(g.coeff({0, 1}) == 3);
    IntPoly h = parse_int_poly("3*x1^2-2*x2+5", 2);
    CHECK(h.coeff({2, 0}) == 3);
    CHECK(h.coeff({0, 1}) == -2);
    CHECK(to_field(h, FieldSpec::prime(3)).coeff({0, 1}) == 1);
}

TEST_CASE("parse errors carry a position") {
    FieldSpec F2;
    CHECK_THROWS_AS(parse_poly("1+*x", 1, F2), ParseError);
    CHECK_THROWS_AS(parse_poly("x3", 2, F2), ParseError);
    CHECK_THROWS_AS(parse_poly("a*x", 1, F2), ParseError);
    try {
        parse_poly("1+x^", 1, F2);
        FAIL("expected a ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() >= 3);
    }
}

TEST_CASE("graded lexicographic order") {
    CHECK(grlex_less({0, 1}, {1, 1}));
    CHECK(grlex_less({0, 2}, {2, 0}));
    CHECK_FALSE(grlex_less({1, 0}, {1, 0}));
}

TEST_CASE("poly_pow agrees with repeated multiplication") {
    std::mt19937_64 rng(11);
    for (const char* spec : {"2", "3", "2^2", "5"}) {
        FieldSpec F = FieldSpec::parse(spec);
        for (int trial = 0; trial < 6; ++trial) {
            FieldPoly f = random_poly(F, 1 + trial % 3, rng);
            for (std::uint64_t n = 0; n <= 12; ++n) CHECK(poly_pow(f, n) == naive_pow(f, n));
        }
    }
    IntPoly g = parse_int_poly("1+x1-x2", 2);
    for (std::uint64_t n = 0; n <= 8; ++n) CHECK(poly_pow(g, n) == naive_pow(g, n));
}

TEST_CASE("Frobenius map is the p-th power") {
    std::mt19937_64 rng(3);
    for (const char* spec : {"2", "3", "2^2", "3^2"}) {
        FieldSpec F = FieldSpec::parse(spec);
        FieldPoly f = random_poly(F, 2, rng);
        CHECK(frobenius_map(f) == naive_pow(f, F.p()));
    }
}

TEST_CASE("coefficient census") {
    FieldSpec F3 = FieldSpec::prime(3);
    FieldPoly f = poly_pow(parse_poly("1+x", 1, F3), 4);  // 1, 4, 6, 4, 1 mod 3
    auto census = coeff_census(f);
    CHECK(census.size() == 1);
    CHECK(census[1] == 4);
    CHECK(nonzero_count(f) == 4);
}

TEST_CASE("term budget") {
    FieldSpec F2;
    FieldPoly f = parse_poly("1+x1+x2+x3", 3, F2);
    CHECK_THROWS_AS(poly_mul(f, f, 5), ResourceLimitError);
    CHECK_THROWS_AS(poly_pow(f, 1000, 1000), ResourceLimitError);
}
