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

#include "coefcount/oracle.hpp"
#include "coefcount/traveling.hpp"
#include "doctest.h"

using namespace coefcount;

namespace {

BigInt big(std::uint64_t v) { return BigInt(std::to_string(v)); }

std::vector<BigInt> ints(std::initializer_list<long> v) {
    std::vector<BigInt> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

template <class P>
BigInt oracle_distinct(const std::vector<P>& factors) {
    return big(brute_product_census(factors).distinct);
}

}  // namespace

TEST_CASE("H sequences") {
    CHECK(h_seq(2, 5) == ints({1, 3, 7, 17, 41}));
    CHECK(h_seq(3, 4) == ints({1, 3, 8, 20}));
    CHECK(genfun_expand(h_genfun(3), 10) == h_seq(3, 10));
    for (unsigned n = 1; n <= 4; ++n) CHECK(oracle_distinct(h_factors(n, 3)) == h_seq(3, n + 1)[n]);
    CHECK(cor33_check(3, 4));
    CHECK_THROWS_AS(cor33_check(2, 3), std::invalid_argument);
}

TEST_CASE("traveling products") {
    // W(1, 3, n) = F(2n + 2).
    auto w = traveling_seq(1, 3, 12);
    for (unsigned n = 0; n < 12; ++n) CHECK(w[n] == fibonacci(2 * n + 2));
    for (unsigned j = 1; j <= 2; ++j)
        for (unsigned k = j; k <= 3; ++k) {
            auto seq = traveling_seq(j, k, 5);
            CHECK(genfun_expand(traveling_genfun(j, k), 5) == seq);
            for (unsigned n = 1; n <= 4; ++n) CHECK(oracle_distinct(traveling_factors(j, k, n)) == seq[n]);
        }
}

TEST_CASE("G family and sign balance") {
    for (unsigned n = 1; n <= 5; ++n) CHECK(oracle_distinct(g_factors(n)) == g_count(n));
    auto g = genfun_expand(g_genfun(), 10);
    for (unsigned n = 1; n < 10; ++n) CHECK(g[n] == g_count(n));
    for (unsigned n = 1; n <= 4; ++n) {
        CHECK(b_sign_balance(n, 1).balanced());
        CHECK(b_sign_balance(n, 2).balanced());
    }
    auto b1 = genfun_expand(b1_genfun(), 6);
    for (unsigned n = 1; n <= 4; ++n) CHECK(oracle_distinct(b_factors(n, 1)) == b1[n]);
}

TEST_CASE("connectivity matrix and its characteristic polynomial") {
    for (unsigned k = 1; k <= 4; ++k)
        for (unsigned m = 1; m <= 3; ++m) CHECK(theta_closed(k, m) == theta_by_determinant(k, m));
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned m = 1; m <= 2; ++m) {
            auto phi = phi_values(k, m, 6);
            CHECK(genfun_expand(v_genfun(k, m), 6) == phi);
            for (unsigned n = 1; n <= 3; ++n) CHECK(oracle_distinct(v_factors(n, k, m)) == phi[n]);
        }
}

TEST_CASE("J and D families") {
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned k = 0; k <= 2; ++k)
            for (unsigned m = 1; m <= 2; ++m) CHECK(oracle_distinct(j_factors(n, k, m)) == j_count(n, k, m));
    const long schroeder_small[] = {1, 2, 6, 22, 90, 394};
    for (unsigned n = 1; n < 6; ++n) CHECK(schroeder(n) == schroeder_small[n]);
    for (unsigned n = 1; n <= 4; ++n) CHECK(oracle_distinct(d_factors(n + 1, 0)) == d0_count(n));
    auto nu = nu_sequence(8);
    CHECK(nu[0] == 0);
    CHECK(nu[2] == 1);
}
