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

#ifndef COEFCOUNT_TRAVELING_HPP
#define COEFCOUNT_TRAVELING_HPP

#include <cstdint>
#include <vector>

#include "coefcount/mpoly.hpp"
#include "coefcount/ratgen.hpp"

namespace coefcount {

/// (1 - z^p) / ((1 - z)^2 - z (1 - z^p)).
RationalGF h_genfun(std::uint64_t p);
std::vector<BigInt> h_seq(std::uint64_t p, std::size_t terms);
/// prod_{i=1..n} (1 + x_i + x_{i+1}) over F_p, in n + 1 variables.
std::vector<FieldPoly> h_factors(unsigned n, std::uint64_t p);
/// Nonzero count of (1 + x + x^p)^{(p^n - 1)/(p - 1)} over F_p.
BigInt cor33_count(std::uint64_t p, unsigned n, std::uint64_t budget = FieldPoly::kDefaultBudget);
/// cor33_count agrees with h_seq for every n <= n_max. Requires p >= 3.
bool cor33_check(std::uint64_t p, unsigned n_max);

/// sum_h (-1)^h C(k - j(h-1), h) z^h, stopping at the first h with k - j(h-1) < 0.
ZPoly traveling_denominator(unsigned j, unsigned k);
RationalGF traveling_genfun(unsigned j, unsigned k);
/// f(n) = sum_{h>=1} (-1)^{h+1} C(k - j(h-1), h) f(n-h), f(0) = 1.
std::vector<BigInt> traveling_seq(unsigned j, unsigned k, std::size_t terms);
/// W_{j,k,n}: prod_{i=1..n} (x_{(i-1)j+1} + ... + x_{(i-1)j+k}).
std::vector<IntPoly> traveling_factors(unsigned j, unsigned k, unsigned n);

/// F(n+2)^2 - eta(n), eta(n) = n mod 2.
BigInt g_count(unsigned n);
RationalGF g_genfun();
/// prod_{i=1..n} (x_i + x_{i+2} + x_{i+4}).
std::vector<IntPoly> g_factors(unsigned n);
RationalGF b1_genfun();
RationalGF b2_genfun();
/// prod_{i=1..n} (1 - x_i + x_{i+t}).
std::vector<IntPoly> b_factors(unsigned n, unsigned t);

struct SignBalance {
    std::uint64_t plus = 0, minus = 0, other = 0;
    bool balanced() const { return other == 0 && plus == minus + 1; }
};
SignBalance b_sign_balance(unsigned n, unsigned t);

using IntMatrix = std::vector<std::vector<BigInt>>;

/// (k+1) x (k+1) matrix with A_{i,0} = C(m-1+i, m-1) and A_{i,j} = C(m+i-j, m-1).
/// Binomials with a negative upper index are [a = b]; with a negative lower index 0.
IntMatrix connectivity_matrix(unsigned k, unsigned m);
/// Closed form: coefficients of rho^0..rho^{k+1}.
ZPoly theta_closed(unsigned k, unsigned m);
/// det(rho I - A) by Laplace expansion over row subsets.
ZPoly theta_by_determinant(unsigned k, unsigned m);

/// Phi_xi = first-column sum of A^xi for xi < count.
std::vector<BigInt> phi_values(unsigned k, unsigned m, std::size_t count);
RationalGF v_genfun(unsigned k, unsigned m);
/// V_{n,k,m}: prod_{i=1..n} (x_i + ... + x_{i+k})^m.
std::vector<IntPoly> v_factors(unsigned n, unsigned k, unsigned m);
/// The closed-form templates for k = 2, 3, 4 as functions of m.
RationalGF v_template(unsigned k, unsigned m);

/// 1 + (n k + C(n+1, 2)) m.
BigInt j_count(unsigned n, unsigned k, unsigned m);
/// prod_{i=1..n} (1 + x^i + ... + x^{i+k})^m, univariate.
std::vector<IntPoly> j_factors(unsigned n, unsigned k, unsigned m);

/// D_{n,k}: prod_{i=1..n} (y_1 + ... + y_{i-1} + x_i + ... + x_{i+k}); y first, then x.
std::vector<IntPoly> d_factors(unsigned n, unsigned k);
/// sum_j 2^j Y(n, j), the count for D_{n+1,0}.
BigInt d0_count(unsigned n);
/// Large Schroeder number via sum_{j=1..n} 2^j (1/n) C(n,j) C(n,j-1).
BigInt schroeder(unsigned n);
/// nu_n = sum_{j>=1} (-1)^{j+1} C(n+1-2j, j) nu_{n-j}, nu_2 = 1, nu_n = 0 for n < 2.
std::vector<BigInt> nu_sequence(unsigned n_max);

struct NuRow {
    unsigned n = 0;
    BigInt gamma;  // oracle count of D_{n-2,2}
    BigInt nu;
    bool half_matches = false;  // 2 gamma == nu
};
std::vector<NuRow> nu_table(unsigned n_max);

}  // namespace coefcount

#endif
