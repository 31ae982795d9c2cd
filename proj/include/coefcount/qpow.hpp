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

#ifndef COEFCOUNT_QPOW_HPP
#define COEFCOUNT_QPOW_HPP

#include <cstdint>
#include <vector>

#include "coefcount/mpoly.hpp"
#include "coefcount/upoly.hpp"

namespace coefcount {

/// N_alpha(m) = u(m) q^m + v(m) for m >= l, with u and v of period d.
struct QPowProfile {
    UPoly g;
    std::uint64_t c = 1;
    Residue alpha = 1;
    unsigned d = 1;
    unsigned mu = 1;
    unsigned l = 0;
    std::vector<Rational> u;  // indexed by m mod d
    std::vector<Rational> v;

    Rational u_at(std::uint64_t m) const { return u[m % d]; }
    Rational v_at(std::uint64_t m) const { return v[m % d]; }
    /// u(m) q^m + v(m).
    Rational predict(std::uint64_t m) const;
};

constexpr std::uint64_t kQPowDegreeBudget = 1ULL << 27;

/// Univariate view of a one-variable polynomial.
UPoly to_upoly(const FieldPoly& g);

/// lcm of the degrees of the irreducible factors. Throws for constant g or g(0) = 0.
unsigned splitting_degree(const UPoly& g);
/// Largest multiplicity of an irreducible factor.
unsigned max_multiplicity(const UPoly& g);
/// Least l with q^l >= mu * c.
unsigned validity_threshold(const UPoly& g, std::uint64_t c);

/// Coefficients of g^{q^m - c} by dense powering over the base-p digits of the exponent.
std::vector<Residue> qpow_coefficients(const UPoly& g, std::uint64_t c, unsigned m,
                                       std::uint64_t degree_budget = kQPowDegreeBudget);
/// The same polynomial as g(x^{q^m}) / g^c by exact long division.
std::vector<Residue> qpow_coefficients_by_division(const UPoly& g, std::uint64_t c, unsigned m,
                                                   std::uint64_t degree_budget = kQPowDegreeBudget);

/// N_alpha(m): coefficients of g^{q^m - c} equal to alpha. Requires q^m >= c.
BigInt count_qpow(const UPoly& g, std::uint64_t c, Residue alpha, unsigned m,
                  std::uint64_t degree_budget = kQPowDegreeBudget);
/// Counts for every nonzero alpha at once, indexed by alpha.
std::vector<BigInt> count_qpow_all(const UPoly& g, std::uint64_t c, unsigned m,
                                   std::uint64_t degree_budget = kQPowDegreeBudget);

/// Fits u and v per residue class mod d from m1 >= l and m1 + d, then checks m1 + 2d.
/// Throws VerificationError if the check fails.
QPowProfile fit_qpow_profile(const UPoly& g, std::uint64_t c, Residue alpha,
                             std::uint64_t degree_budget = kQPowDegreeBudget);

/// d q^{d-1} / (q^d - 1) for primitive g; throws std::invalid_argument otherwise.
Rational primitive_u_check(const UPoly& g);

}  // namespace coefcount

#endif
