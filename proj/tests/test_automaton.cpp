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

#include "coefcount/automaton.hpp"
#include "coefcount/oracle.hpp"
#include "doctest.h"

using namespace coefcount;

namespace {

BigInt big(std::uint64_t v) { return BigInt(std::to_string(v)); }

BigInt oracle_count(const FieldPoly& f, std::uint64_t n, Residue alpha, const FieldPoly* prefix = nullptr) {
    FieldPoly p = poly_pow(f, n);
    if (prefix) p = poly_mul(p, *prefix);
    auto census = coeff_census(p);
    auto it = census.find(alpha);
    return it == census.end() ? BigInt(0) : big(it->second);
}

}  // namespace

TEST_CASE("binomial powers over F_2 count 2^popcount") {
    FieldPoly f = parse_poly("1+x", 1, FieldSpec());
    DigitAutomaton A = build_automaton(f);
    CHECK(count_via_automaton(A, 11, 1) == 8);
    for (std::uint64_t n = 0; n < 300; ++n)
        CHECK(count_via_automaton(A, big(n), 1) == pow_big(2, static_cast<unsigned>(std::popcount(n))));
    BigInt huge = pow_big(2, 200) - 1;
    CHECK(count_via_automaton(A, huge, 1) == pow_big(2, 200));
    auto rep = repunit_counts(A, 1, 10);
    for (std::size_t m = 0; m < rep.size(); ++m) CHECK(rep[m] == pow_big(2, static_cast<unsigned>(m)));
}

TEST_CASE("constant polynomial") {
    FieldSpec F3 = FieldSpec::prime(3);
    DigitAutomaton A = build_automaton(parse_poly("2", 1, F3));
    for (std::uint64_t n = 0; n < 10; ++n) {
        CHECK(count_via_automaton(A, big(n), 1) == (n % 2 == 0 ? 1 : 0));
        CHECK(count_via_automaton(A, big(n), 2) == (n % 2 == 1 ? 1 : 0));
    }
}

TEST_CASE("bivariate example agrees with the oracle") {
    FieldPoly f = parse_poly("1+x1+x2+x1*x2^2", 2, FieldSpec());
    DigitAutomaton A = build_automaton(f);
    CHECK(A.columns_stochastic());
    CHECK(count_via_automaton(A, 7, 1) == oracle_count(f, 7, 1));
    for (std::uint64_t n = 0; n <= 40; ++n) CHECK(count_via_automaton(A, big(n), 1) == oracle_count(f, n, 1));
}

TEST_CASE("leading zero digits do not change the count") {
    FieldPoly f = parse_poly("1+x1+x2^2+x1*x2", 2, FieldSpec());
    DigitAutomaton A = build_automaton(f);
    for (std::uint64_t n = 1; n < 40; ++n) {
        auto d = digits_lsb(n, 2);
        BigInt base = count_via_digits(A, d, 1);
        d.push_back(0);
        d.push_back(0);
        CHECK(count_via_digits(A, d, 1) == base);
    }
}

TEST_CASE("random polynomials over several fields agree with the oracle") {
    std::mt19937_64 rng(2026);
    for (const char* spec : {"2", "3", "2^2", "5"}) {
        FieldSpec F = FieldSpec::parse(spec);
        for (int trial = 0; trial < 4; ++trial) {
            std::size_t k = 1 + trial % 2;
            FieldPoly f(FieldRing{F}, k);
            f.add_term(Monomial(k, 0), 1);
            for (int t = 0; t < 3; ++t) {
                Monomial m(k);
                for (auto& e : m) e = rng() % 3;
                f.add_term(m, static_cast<Residue>(1 + rng() % (F.q() - 1)));
            }
            if (f.is_zero()) f = FieldPoly::variable(FieldRing{F}, k, 0);
            DigitAutomaton A = build_automaton(f);
            CHECK(A.columns_stochastic());
            for (std::uint64_t n = 0; n <= 30; ++n)
                for (Residue a = 1; a < F.q(); ++a) CHECK(count_via_automaton(A, big(n), a) == oracle_count(f, n, a));
        }
    }
}

TEST_CASE("prefix polynomial") {
    FieldSpec F3 = FieldSpec::prime(3);
    FieldPoly f = parse_poly("2+x+x^2", 1, F3);
    FieldPoly g = parse_poly("1+2*x^3", 1, F3);
    DigitAutomaton A = build_automaton(f);
    DigitAutomaton B = build_automaton(f, {}, g);
    for (std::uint64_t n = 0; n <= 30; ++n)
        for (Residue a = 1; a < 3; ++a) {
            BigInt want = oracle_count(f, n, a, &g);
            CHECK(count_via_automaton(B, big(n), a) == want);
            CHECK(count_via_automaton(A, big(n), a, g) == want);
        }
}

TEST_CASE("automaton errors and limits") {
    FieldPoly f = parse_poly("1+x1+x2+x1*x2^2", 2, FieldSpec());
    DigitAutomaton A = build_automaton(f);
    CHECK_THROWS_AS(count_via_automaton(A, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(count_via_automaton(A, -1, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_automaton(f, AutomatonOptions{1, FieldPoly::kDefaultBudget}), ResourceLimitError);
    CHECK_THROWS_AS(count_via_digits(A, {2}, 1), std::invalid_argument);
}

TEST_CASE("exponent parsing and JSON export") {
    CHECK(parse_exponent("rep:3", 2) == 7);
    CHECK(parse_exponent("rep:2", 3) == 4);
    CHECK(parse_exponent("123", 2) == 123);
    CHECK_THROWS(parse_exponent("rep:x", 2));
    CHECK_THROWS(parse_exponent("-4", 2));
    DigitAutomaton A = build_automaton(parse_poly("1+x", 1, FieldSpec()));
    std::string json = automaton_to_json(A);
    CHECK(json.find("\"states\"") != std::string::npos);
    CHECK(reachable_states(A, 0) >= 1);
}
