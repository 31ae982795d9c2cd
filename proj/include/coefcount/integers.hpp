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

#ifndef COEFCOUNT_INTEGERS_HPP
#define COEFCOUNT_INTEGERS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace coefcount {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient, generalized in the upper index:
/// n(n-1)...(n-k+1)/k! for any integer n, and 0 for k < 0.
BigInt binomial(long long n, long long k);

/// C(a+b-1, b): b-multisets from a types. multichoose(0, 0) = 1, multichoose(0, b>0) = 0.
BigInt multichoose(long long a, long long b);

BigInt catalan(unsigned n);
/// F(0) = 0, F(1) = F(2) = 1.
BigInt fibonacci(unsigned n);
/// Y(n, j) = (1/j) C(n, j-1) C(n-1, j-1), with Y(0, 0) = 1 and Y(n, 0) = 0 for n >= 1.
BigInt narayana(unsigned n, unsigned j);

BigInt pow_big(const BigInt& base, unsigned long exponent);

/// Base-b digits, least significant first; zero has no digits.
std::vector<std::uint64_t> digits_lsb(std::uint64_t n, std::uint64_t base);
std::vector<std::uint64_t> digits_lsb(const BigInt& n, std::uint64_t base);

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<BigInt, unsigned>> factor_integer(BigInt n);

bool is_prime(std::uint64_t n);

std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);  // "num/den", or "num" when the denominator is 1

}  // namespace coefcount

#endif
