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

#include "coefcount/ratgen.hpp"
#include "doctest.h"

using namespace coefcount;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) {
    std::vector<BigInt> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("Fibonacci recurrence and generating function") {
    std::vector<BigInt> fib{0, 1};
    for (int i = 2; i < 30; ++i) fib.push_back(fib[i - 1] + fib[i - 2]);
    LinearRecurrence rec = fit_recurrence(fib, 5);
    REQUIRE(rec.order() == 2);
    CHECK(rec.coefficients[0] == 1);
    CHECK(rec.coefficients[1] == 1);
    CHECK(rec.fits(fib));
    RationalGF g = seq_to_genfun(fib, rec);
    CHECK(g.numerator == ints({0, 1}));
    CHECK(g.denominator == ints({1, -1, -1}));
    CHECK(genfun_expand(g, 30) == fib);
    auto cp = characteristic_polynomial(rec);
    CHECK(cp == std::vector<Rational>{1, -1, -1});
}

TEST_CASE("small recurrences") {
    // a_n = 3 a_{n-1} - a_{n-2}: 1, 2, 5, 13, 34, ...
    std::vector<BigInt> s{1, 2};
    for (int i = 2; i < 20; ++i) s.push_back(3 * s[i - 1] - s[i - 2]);
    LinearRecurrence rec = fit_recurrence(s, 4);
    CHECK(rec.coefficients == std::vector<Rational>{3, -1});
    std::vector<BigInt> constant(12, BigInt(7));
    LinearRecurrence c = fit_recurrence(constant, 3);
    CHECK(c.order() == 1);
    RationalGF g = seq_to_genfun(constant, c);
    CHECK(g.to_string() == "(7)/(1 - z)");
    std::vector<BigInt> zeros(10, BigInt(0));
    CHECK(fit_recurrence(zeros, 3).order() == 0);
}

TEST_CASE("generating function arithmetic") {
    RationalGF a = RationalGF::geometric(2);
    RationalGF b = RationalGF::geometric(-1);
    CHECK(genfun_expand(a, 5) == ints({1, 2, 4, 8, 16}));
    CHECK(genfun_expand(a + b, 4) == ints({2, 1, 5, 7}));
    CHECK(genfun_expand(a * b, 4) == ints({1, 1, 3, 5}));
    CHECK(genfun_expand(RationalGF::polynomial(ints({1, 2})), 4) == ints({1, 2, 0, 0}));
    // 2/(2 - 2z) reduces to 1/(1 - z).
    RationalGF r = RationalGF::make(ints({2}), ints({2, -2}));
    CHECK(r.numerator == ints({1}));
    CHECK(r.denominator == ints({1, -1}));
    RationalGF s = RationalGF::make(ints({1, 1}), ints({1, -1, -2}));  // (1+z)/((1+z)(1-2z))
    CHECK(genfun_equal_as_series(s, a, 20));
    CHECK_FALSE(genfun_equal_as_series(a, b, 5));
}

TEST_CASE("round trip through random rational functions") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t d = 1 + rng() % 4;
        ZPoly den{1};
        for (std::size_t i = 0; i < d; ++i) den.emplace_back(static_cast<long>(rng() % 7) - 3);
        ZPoly num;
        for (std::size_t i = 0; i < d; ++i) num.emplace_back(static_cast<long>(rng() % 7) - 3);
        RationalGF g = RationalGF::make(num, den);
        auto seq = genfun_expand(g, 2 * d + 12);
        LinearRecurrence rec = fit_recurrence(seq, d);
        CHECK(rec.order() <= d);
        CHECK(rec.fits(seq));
        RationalGF back = seq_to_genfun(seq, rec);
        CHECK(genfun_equal_as_series(back, g, 40));
        CHECK(back.denominator.size() <= g.denominator.size());
    }
}

TEST_CASE("recurrence errors") {
    CHECK_THROWS_AS(fit_recurrence(ints({1, 2, 3}), 2), std::invalid_argument);
    std::vector<BigInt> fact{1};
    for (int i = 1; i < 20; ++i) fact.push_back(fact.back() * i);
    CHECK_THROWS_AS(fit_recurrence(fact, 4), std::runtime_error);
    CHECK_THROWS_AS(genfun_expand(RationalGF::make(ints({1}), ints({2, 1})), 3), std::invalid_argument);
    CHECK_THROWS_AS(RationalGF::make(ints({1}), ints({0})), std::invalid_argument);
}

TEST_CASE("zpoly helpers") {
    CHECK(zpoly_trim(ints({1, 0, 0})) == ints({1}));
    CHECK(zpoly_mul(ints({1, 1}), ints({1, -1})) == ints({1, 0, -1}));
    CHECK(zpoly_to_string(ints({1, -3, 1})) == "1 - 3z + z^2");
}
