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

#include "coefcount/integers.hpp"
#include "doctest.h"

using namespace coefcount;

TEST_CASE("binomial with generalized upper index") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(2, 5) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(0, 0) == 1);
    // (-1)(-2)(-3)/3! = -1 and (-2)(-3)/2! = 3.
    CHECK(binomial(-1, 3) == -1);
    CHECK(binomial(-2, 2) == 3);
}

TEST_CASE("binomial agrees with Pascal's rule") {
    for (long long n = -6; n <= 20; ++n)
        for (long long k = 1; k <= 12; ++k) CHECK(binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1));
}

TEST_CASE("multichoose conventions") {
    CHECK(multichoose(0, 0) == 1);
    CHECK(multichoose(0, 3) == 0);
    CHECK(multichoose(3, 2) == 6);
    CHECK(multichoose(1, 7) == 1);
}

TEST_CASE("Catalan, Fibonacci and Narayana numbers") {
    const long catalan_small[] = {1, 1, 2, 5, 14, 42, 132};
    for (unsigned n = 0; n < 7; ++n) CHECK(catalan(n) == catalan_small[n]);
    // Segner's recurrence as the oracle.
    std::vector<BigInt> c{1};
    for (unsigned n = 1; n <= 30; ++n) {
        BigInt s = 0;
        for (unsigned i = 0; i < n; ++i) s += c[i] * c[n - 1 - i];
        c.push_back(s);
        CHECK(catalan(n) == s);
    }
    const long fib_small[] = {0, 1, 1, 2, 3, 5, 8, 13};
    for (unsigned n = 0; n < 8; ++n) CHECK(fibonacci(n) == fib_small[n]);
    for (unsigned n = 2; n < 90; ++n) CHECK(fibonacci(n) == fibonacci(n - 1) + fibonacci(n - 2));
    CHECK(narayana(0, 0) == 1);
    CHECK(narayana(3, 0) == 0);
    for (unsigned n = 1; n <= 12; ++n) {
        BigInt s = 0;
        for (unsigned j = 0; j <= n; ++j) s += narayana(n, j);
        CHECK(s == catalan(n));
    }
}

TEST_CASE("digits least significant first") {
    CHECK(digits_lsb(std::uint64_t{11}, 2) == std::vector<std::uint64_t>{1, 1, 0, 1});
    CHECK(digits_lsb(std::uint64_t{0}, 3).empty());
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        std::uint64_t n = rng() >> 4;
        std::uint64_t base = 2 + rng() % 9;
        auto d = digits_lsb(n, base);
        CHECK(d == digits_lsb(BigInt(std::to_string(n)), base));
        std::uint64_t back = 0;
        for (std::size_t j = d.size(); j-- > 0;) back = back * base + d[j];
        CHECK(back == n);
    }
}

TEST_CASE("factorization and primality") {
    auto f = factor_integer(360);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<BigInt, unsigned>{2, 3});
    CHECK(f[1] == std::pair<BigInt, unsigned>{3, 2});
    CHECK(f[2] == std::pair<BigInt, unsigned>{5, 1});
    std::vector<bool> sieve(1000, true);
    sieve[0] = sieve[1] = false;
    for (std::size_t i = 2; i < 1000; ++i)
        if (sieve[i])
            for (std::size_t j = i * i; j < 1000; j += i) sieve[j] = false;
    for (std::uint64_t n = 0; n < 1000; ++n) CHECK(is_prime(n) == sieve[n]);
    for (long n = 2; n < 500; ++n) {
        BigInt back = 1;
        for (const auto& [p, e] : factor_integer(n)) back *= pow_big(p, e);
        CHECK(back == n);
    }
}

TEST_CASE("string forms") {
    CHECK(to_string(pow_big(2, 70)) == "1180591620717411303424");
    Rational r(6, 4);
    r.canonicalize();
    CHECK(to_string(r) == "3/2");
    CHECK(to_string(Rational(-5)) == "-5");
}
