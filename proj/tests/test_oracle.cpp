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

IntPoly prefix_sum(std::size_t k, std::size_t len) {
    IntPoly p(IntegerRing{}, k);
    for (std::size_t i = 0; i < len; ++i) p = poly_add(p, IntPoly::variable(IntegerRing{}, k, i));
    return p;
}

template <class P>
std::vector<P> vandermonde(std::size_t n, const typename P::Coeff& minus_one, const decltype(P(std::declval<P>()).ring())& ring) {
    std::vector<P> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            out.push_back(poly_add(P::variable(ring, n, i), poly_scale(P::variable(ring, n, j), minus_one)));
    return out;
}

}  // namespace

TEST_CASE("products of prefix sums") {
    // (x1)(x1+x2)(x1+x2+x3) has C_3 = 5 distinct monomials.
    CHECK(brute_product_census(std::vector<IntPoly>{prefix_sum(3, 1), prefix_sum(3, 2), prefix_sum(3, 3)}).distinct == 5);
    CHECK(brute_product_census(std::vector<IntPoly>{prefix_sum(3, 3)}).distinct == 3);
}

TEST_CASE("Vandermonde products") {
    FieldRing f2{FieldSpec()};
    CHECK(brute_product_census(vandermonde<FieldPoly>(3, 1, f2)).distinct == 6);
    const unsigned long factorial[] = {1, 1, 2, 6, 24, 120};
    for (std::size_t n = 2; n <= 5; ++n) {
        auto census = brute_product_census(vandermonde<IntPoly>(n, -1, IntegerRing{}));
        CHECK(census.distinct == factorial[n]);
        CHECK(census.values.size() == 2);
        CHECK(census.values[1] == factorial[n] / 2);
        CHECK(census.values[-1] == factorial[n] / 2);
    }
}

TEST_CASE("power sweep agrees with poly_pow and the automaton") {
    std::mt19937_64 rng(5);
    for (const char* spec : {"2", "3", "2^2"}) {
        FieldSpec F = FieldSpec::parse(spec);
        for (std::size_t k = 1; k <= 3; ++k) {
            FieldPoly f(FieldRing{F}, k);
            f.add_term(Monomial(k, 0), 1);
            for (int t = 0; t < 3; ++t) {
                Monomial m(k);
                for (auto& e : m) e = rng() % 3;
                f.add_term(m, static_cast<Residue>(1 + rng() % (F.q() - 1)));
            }
            auto sweep = brute_power_sweep(f, 12);
            DigitAutomaton A = build_automaton(f);
            for (std::uint64_t n = 0; n <= 12; ++n) {
                auto census = coeff_census(poly_pow(f, n));
                CHECK(sweep[n] == census);
                for (Residue a = 1; a < F.q(); ++a) {
                    BigInt want = census.count(a) ? BigInt(static_cast<unsigned long>(census[a])) : BigInt(0);
                    CHECK(count_via_automaton(A, BigInt(static_cast<unsigned long>(n)), a) == want);
                    CHECK(brute_power_census(f, n, a) == want);
                }
            }
        }
    }
}

TEST_CASE("oracle budget") {
    FieldPoly f = parse_poly("1+x1+x2+x3", 3, FieldSpec());
    CHECK_THROWS_AS(brute_power_sweep(f, 50, 1000), ResourceLimitError);
}
