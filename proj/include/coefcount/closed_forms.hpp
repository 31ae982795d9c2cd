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

#ifndef COEFCOUNT_CLOSED_FORMS_HPP
#define COEFCOUNT_CLOSED_FORMS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "coefcount/ffield.hpp"
#include "coefcount/integers.hpp"

namespace coefcount {

/// C(n, k) mod p as the digitwise product of C(a_i, b_i). Throws if p is not prime.
Residue lucas_binomial(const BigInt& n, const BigInt& k, std::uint64_t p);

/// Value census of the coefficients of (1+x)^n mod p.
struct RowCensus {
    std::map<Residue, BigInt> counts;  // nonzero residue -> count
    BigInt total;                      // prod (1 + a_i)
};
RowCensus binomial_row_census(const BigInt& n, std::uint64_t p);

/// [x^k] (1 + x + ... + x^{p-1})^n mod p, as (-1)^k C(pn - n, k).
Residue prop23_coeff(std::uint64_t n, std::uint64_t k, std::uint64_t p);
/// prod (1 + b_i) over the base-p digits b_i of (p-1)n.
BigInt prop23_count(std::uint64_t n, std::uint64_t p);

/// Coefficient census (N_0, N_1, N_2) of (1+x+x^2)^n over F_3.
struct Split3 {
    BigInt n0, n1, n2;
    friend bool operator==(const Split3&, const Split3&) = default;
};
Split3 example24_split(std::uint64_t n);

/// Lengths of the maximal runs of 1s in the binary expansion, least significant first.
std::vector<unsigned> run_lengths(const BigInt& n);
/// (2^{k+2} + (-1)^{k+1}) / 3, the nonzero count of (1+x+x^2)^{2^k-1} over F_2.
BigInt omega_run_factor(unsigned k);
/// Nonzero count of (1+x+x^2)^n over F_2 from the run decomposition of n. omega(0) = 1.
BigInt omega_runs(const BigInt& n);

/// k (k+1)^n - (k-1) k^n.
BigInt family22_count(std::uint64_t k, std::uint64_t n);

/// (1/2^n) sum_{j < 2^n} omega(j), to be compared with F(n+2).
Rational omega_average(unsigned n);

/// Coefficientwise comparison of Lambda(z) = sum omega(m) z^m against (1+2z) Lambda(z^2).
struct LambdaCheck {
    bool holds = true;
    std::size_t first_mismatch = 0;  // meaningful when !holds
    BigInt lhs, rhs;                 // coefficients at first_mismatch
};
LambdaCheck lambda_functional_check(std::size_t order);

}  // namespace coefcount

#endif
