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

#include <algorithm>

#include "coefcount/lattice.hpp"
#include "coefcount/oracle.hpp"
#include "doctest.h"

using namespace coefcount;

namespace {

BigInt big(std::uint64_t v) { return BigInt(std::to_string(v)); }

BigInt oracle_distinct(const std::vector<IntPoly>& factors) { return big(brute_product_census(factors).distinct); }

// All weakly decreasing partitions with parts in [1, max_part] and at most len parts.
void partitions(std::size_t len, std::uint64_t max_part, Partition& cur, std::vector<Partition>& out) {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == len) return;
    std::uint64_t top = cur.empty() ? max_part : cur.back();
    for (std::uint64_t p = 1; p <= top; ++p) {
        cur.push_back(p);
        partitions(len, max_part, cur, out);
        cur.pop_back();
    }
}

}  // namespace

TEST_CASE("draconian sequences are counted by Catalan numbers") {
    auto k3 = enum_draconian(3);
    CHECK(k3.size() == 5);
    CHECK(k3.front() == Composition{0, 0, 3});
    for (unsigned n = 0; n <= 9; ++n) CHECK(big(enum_draconian(n).size()) == catalan(n));
    CHECK_THROWS_AS(enum_draconian(kDraconianCap + 1), ResourceLimitError);
    for (unsigned n = 1; n <= 5; ++n)
        for (const auto& k : enum_shifted_draconian(n, 2)) {
            std::uint64_t s = 0;
            for (std::size_t j = 0; j < k.size(); ++j) {
                s += k[j];
                CHECK(s <= 2 * (j + 1) - 1);
            }
            CHECK(s == 2 * n - 1);
        }
}

TEST_CASE("omega counts agree with the product oracle") {
    std::vector<Partition> parts;
    Partition cur;
    partitions(4, 4, cur, parts);
    for (const auto& lambda : parts) CHECK(omega_count(lambda) == oracle_distinct(omega_factors(lambda)));
    CHECK(omega_count({3, 2, 1}) == 5);
    CHECK_THROWS_AS(require_partition({1, 2}), std::invalid_argument);
}

TEST_CASE("omega recurrence in each part") {
    std::vector<Partition> parts;
    Partition cur;
    partitions(4, 4, cur, parts);
    for (const auto& lambda : parts)
        for (std::size_t i = 1; i <= lambda.size(); ++i) {
            if (i == 1 || lambda[i - 2] > lambda[i - 1])
                CHECK(omega_recurrence_check(lambda, i));
            else
                CHECK_THROWS_AS(omega_recurrence_check(lambda, i), std::invalid_argument);
        }
}

TEST_CASE("Catalan inversion") {
    for (unsigned n = 2; n <= 20; ++n) CHECK(catalan_inversion(n) == catalan(n));
}

TEST_CASE("lattice points of the staircase polytope") {
    for (std::uint64_t a = 0; a <= 3; ++a)
        for (std::uint64_t b = 0; b <= 3; ++b)
            for (std::uint64_t c = 0; c <= 2; ++c) {
                std::vector<std::uint64_t> t{a, b, c};
                CHECK(ps_lattice_points_direct(t) == ps_lattice_points_formula(t));
            }
    for (unsigned n = 1; n <= 5; ++n)
        for (std::uint64_t t = 1; t <= 3; ++t) {
            std::vector<std::uint64_t> tv(n, t);
            tv.back() = t - 1;
            CHECK(ps_staircase_closed(n, t) == ps_lattice_points_direct(tv));
        }
}

TEST_CASE("shifted lattice paths") {
    for (unsigned s = 1; s <= 3; ++s)
        for (unsigned t = 1; t <= 3; ++t) {
            CHECK(shifted_path_count(1, s, t, PathMode::direct) == binomial(s + t - 2, s - 1));
            for (unsigned n = 1; n <= 5; ++n) {
                BigInt direct = shifted_path_count(n, s, t, PathMode::direct);
                CHECK(shifted_path_count(n, s, t, PathMode::closed) == direct);
                CHECK(shifted_path_count(n, s, t, PathMode::lsum) == direct);
                CHECK(shifted_path_count(n, s, t, PathMode::ksum) == direct);
                if (s == 1) CHECK(shifted_path_count(n, s, t, PathMode::closed_literal) == direct);
            }
        }
    // Catalan numbers at s = t = 1.
    for (unsigned n = 1; n <= 8; ++n) CHECK(shifted_path_count(n, 1, 1, PathMode::direct) == catalan(n - 1));
    for (unsigned n = 1; n <= 4; ++n) {
        Partition lambda = shifted_path_partition(n, 2, 1);
        CHECK(omega_count(lambda) == shifted_path_count(n, 2, 1, PathMode::direct));
    }
}

TEST_CASE("noncrossing identity and Ehrhart reciprocity") {
    CHECK(noncrossing_identity({1, 1}).lhs == 2);
    CHECK(noncrossing_identity({1, 2}).lhs == 5);
    for (std::uint64_t a = 1; a <= 3; ++a)
        for (std::uint64_t b = 1; b <= 3; ++b) {
            CHECK(noncrossing_identity({a, b}).equal());
            CHECK(noncrossing_identity({a, b, 1}).equal());
            CHECK(ehrhart_spot_check({a, b, 2}).consistent());
        }
}

TEST_CASE("product families with closed forms") {
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned m = 0; m <= std::min(n, 2u); ++m) CHECK(ex433a_formula(n, m) == oracle_distinct(ex433a_factors(n, m)));
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned k = 1; k <= 2; ++k) CHECK(ex433b_formula(n, k) == oracle_distinct(ex433b_factors(n, k)));
    auto grid = ex433c_grid(3, 2);
    CHECK_FALSE(grid.empty());
    for (const auto& row : grid) CHECK(Rational(row.oracle) == row.r_shifted);
}
