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

#ifndef COEFCOUNT_LATTICE_HPP
#define COEFCOUNT_LATTICE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "coefcount/integers.hpp"
#include "coefcount/mpoly.hpp"

namespace coefcount {

using Partition = std::vector<std::uint64_t>;  // weakly decreasing, nonnegative
using Composition = std::vector<std::uint64_t>;

constexpr unsigned kDraconianCap = 15;
constexpr std::uint64_t kEnumerationCap = 20'000'000;

/// All k in N^n with k_1+...+k_i <= i and total n, in lexicographic order. |K_n| = C_n.
std::vector<Composition> enum_draconian(unsigned n, unsigned cap = kDraconianCap);

/// All k in N^n with k_1+...+k_j <= t j - 1 and total t n - 1.
std::vector<Composition> enum_shifted_draconian(unsigned n, unsigned t, std::uint64_t cap = kEnumerationCap);

/// Throws std::invalid_argument unless lambda is weakly decreasing.
void require_partition(const Partition& lambda);

/// Distinct monomials of prod_i (x_1 + ... + x_{lambda_i}), summed over K_n.
BigInt omega_count(const Partition& lambda);

/// The factors x_1 + ... + x_{lambda_i} as integer polynomials in lambda_1 variables.
std::vector<IntPoly> omega_factors(const Partition& lambda);

/// Checks the recurrence in the i-th part (1-based) for lambda and lambda with lambda_i + 1.
bool omega_recurrence_check(const Partition& lambda, std::size_t i);

/// sum_{j>=1} (-1)^{j+1} C(n+2-j, j) C_{n-j}; equals C_n for n >= 2.
BigInt catalan_inversion(unsigned n);

/// Lattice points y >= 0 with y_1 + ... + y_i <= t_n + ... + t_{n-i+1}.
BigInt ps_lattice_points_direct(const std::vector<std::uint64_t>& t, std::uint64_t cap = kEnumerationCap);
/// sum_{k in K_n} multichoose(t_n + 1, k_n) prod_{i<n} multichoose(t_i, k_i).
BigInt ps_lattice_points_formula(const std::vector<std::uint64_t>& t);

/// (1/(n+1)) C((t+1)(n+1) - 2, n): lattice points of the n-dimensional polytope with
/// t = (t, ..., t, t-1).
BigInt ps_staircase_closed(unsigned n, std::uint64_t t);
/// (1/n) C((t+1)n - 2, n - 1), the same expression one dimension lower.
BigInt ps_staircase_literal(unsigned n, std::uint64_t t);

/// closed: (1/n) C((s+t)n - 2, sn - 1); closed_literal: (1/n) C((s+t)n - 2, n - 1), which
/// agrees only when s = 1; direct: dynamic programming over the lattice paths.
enum class PathMode { closed, closed_literal, lsum, ksum, direct };

/// Paths from (0,0) to (sn-1, tn-1) weakly beneath U^{t-1} (R^s U^t)^{n-1} R^{s-1}.
BigInt shifted_path_count(unsigned n, unsigned s, unsigned t, PathMode mode);
/// The partition whose Omega product is Z_{n,s,t}.
Partition shifted_path_partition(unsigned n, unsigned s, unsigned t);

/// Sum over partitions of n-1 with C(top, l) multinomial weights, where l is the
/// number of parts and top = n (or n + 1 when literal is set).
BigInt partition_sum_t1(unsigned n, unsigned s, bool literal = false);

struct IdentityValue {
    BigInt lhs, rhs;
    bool equal() const { return lhs == rhs; }
};

/// Both sides of the noncrossing matching identity over K_n.
IdentityValue noncrossing_identity(const std::vector<std::uint64_t>& m);

/// Ehrhart reciprocity spot check for the polytope with bounds m_n + ... + m_{n+1-i}.
struct EhrhartCheck {
    BigInt interior;       // strict interior lattice points, by enumeration
    BigInt shifted;        // lattice points of the shifted closed polytope, by enumeration
    BigInt reciprocity;    // sum over K_n of C(m_n - 1, k_n) prod C(m_i, k_i)
    bool consistent() const { return interior == shifted && shifted == reciprocity; }
};
EhrhartCheck ehrhart_spot_check(const std::vector<std::uint64_t>& m);

/// ((m+2)/(2n+m)) C(2n+m, n+m+1).
BigInt ex433a_formula(unsigned n, unsigned m);
std::vector<IntPoly> ex433a_factors(unsigned n, unsigned m);
/// (1/(kn+1)) C((k+1)n, n).
BigInt ex433b_formula(unsigned n, unsigned k);
std::vector<IntPoly> ex433b_factors(unsigned n, unsigned k);
std::vector<IntPoly> ex433c_factors(unsigned n, unsigned k);

/// R = M N^{-1} truncated to size x size, exact.
std::vector<std::vector<Rational>> ex433c_matrix(unsigned size);
/// sum over y in Pi_{n-1}(t_1 - 1, t_2, ..., t_{n-1}) of (1 + y_{n-1}) with t_i = k + n - i.
BigInt ex433c_polytope_sum(unsigned n, unsigned k);

struct GridRow {
    unsigned n = 0, k = 0;
    BigInt oracle, polytope;
    Rational r_same, r_shifted;  // R(n, k), R(n+k, k)
};
std::vector<GridRow> ex433c_grid(unsigned n_max, unsigned k_max);

}  // namespace coefcount

#endif
