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

#include "coefcount/automaton.hpp"
#include "coefcount/closed_forms.hpp"
#include "coefcount/oracle.hpp"
#include "doctest.h"

using namespace coefcount;

namespace {

BigInt big(std::uint64_t v) { return BigInt(std::to_string(v)); }

}  // namespace

TEST_CASE("Lucas' theorem agrees with binomials reduced mod p") {
    for (std::uint64_t p : {2, 3, 5, 7})
        for (long n = 0; n < 60; ++n)
            for (long k = 0; k <= n; ++k) {
                BigInt r = binomial(n, k) % big(p);
                CHECK(lucas_binomial(n, k, p) == r.get_ui());
            }
    CHECK(lucas_binomial(5, 7, 3) == 0);
    CHECK_THROWS_AS(lucas_binomial(5, 2, 4), std::invalid_argument);
}

TEST_CASE("binomial row census agrees with the oracle") {
    for (std::uint64_t p : {2, 3, 5}) {
        FieldSpec F = FieldSpec::prime(static_cast<std::uint32_t>(p));
        auto sweep = brute_power_sweep(parse_poly("1+x", 1, F), 200);
        for (std::uint64_t n = 0; n <= 200; ++n) {
            RowCensus rc = binomial_row_census(big(n), p);
            BigInt total = 0;
            for (const auto& [a, c] : rc.counts) total += c;
            CHECK(total == rc.total);
            std::map<Residue, BigInt> want;
            for (const auto& [a, c] : sweep[n]) want[a] = big(c);
            CHECK(rc.counts == want);
        }
    }
    RowCensus small = binomial_row_census(4, 3);
    CHECK(small.counts.size() == 1);
    CHECK(small.counts.at(1) == 4);
}

TEST_CASE("coefficients of (1 + x + ... + x^{p-1})^n") {
    for (std::uint64_t p : {2, 3, 5}) {
        FieldSpec F = FieldSpec::prime(static_cast<std::uint32_t>(p));
        FieldPoly base(FieldRing{F}, 1);
        for (std::uint64_t i = 0; i < p; ++i) base.add_term({i}, 1);
        for (std::uint64_t n = 1; n <= 25; ++n) {
            FieldPoly pw = poly_pow(base, n);
            for (std::uint64_t k = 0; k <= (p - 1) * n; ++k) CHECK(prop23_coeff(n, k, p) == pw.coeff({k}));
            CHECK(prop23_count(n, p) == big(nonzero_count(pw)));
        }
    }
    CHECK_THROWS_AS(prop23_count(0, 3), std::invalid_argument);
}

TEST_CASE("ternary split of (1 + x + x^2)^n") {
    FieldSpec F3 = FieldSpec::prime(3);
    auto sweep = brute_power_sweep(parse_poly("1+x+x^2", 1, F3), 120);
    for (std::uint64_t n = 0; n <= 120; ++n) {
        Split3 s = example24_split(n);
        CHECK(s.n1 == big(sweep[n][1]));
        CHECK(s.n2 == big(sweep[n][2]));
        CHECK(s.n0 + s.n1 + s.n2 == big(2 * n + 1));
    }
}

TEST_CASE("run decomposition of omega") {
    CHECK(run_lengths(6039) == std::vector<unsigned>{3, 1, 4, 1});
    CHECK(omega_runs(6039) == 2079);
    CHECK(omega_runs(0) == 1);
    CHECK(omega_runs(1) == 3);
    for (unsigned k = 1; k < 12; k += 2) CHECK(omega_run_factor(k) == (pow_big(2, k + 2) + 1) / 3);
    auto sweep = brute_power_sweep(parse_poly("1+x+x^2", 1, FieldSpec()), 512);
    for (std::uint64_t n = 0; n <= 512; ++n) CHECK(omega_runs(big(n)) == big(sweep[n][1]));
}

TEST_CASE("first bivariate family") {
    CHECK(family22_count(2, 1) == 4);
    CHECK(family22_count(2, 3) == 46);
    for (std::uint64_t k = 1; k < 6; ++k) CHECK(family22_count(k, 0) == 1);
    DigitAutomaton A = build_automaton(parse_poly("1+x1+x2+x1*x2^2", 2, FieldSpec()));
    for (unsigned n = 0; n < 12; ++n) CHECK(family22_count(2, n) == count_via_automaton(A, pow_big(2, n) - 1, 1));
}

TEST_CASE("averaging identity and the functional equation") {
    for (unsigned n = 0; n <= 12; ++n) CHECK(omega_average(n) == Rational(fibonacci(n + 2)));
    LambdaCheck lam = lambda_functional_check(128);
    CHECK_FALSE(lam.holds);
    CHECK(lam.first_mismatch == 1);
    CHECK(lam.lhs == 3);
    CHECK(lam.rhs == 2);
}
