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

#ifndef COEFCOUNT_UPOLY_HPP
#define COEFCOUNT_UPOLY_HPP

#include <utility>
#include <vector>

#include "coefcount/ffield.hpp"
#include "coefcount/integers.hpp"

namespace coefcount {

/// Dense univariate polynomial over F_q, coefficients constant term first and
/// trimmed so the leading coefficient is nonzero. The zero polynomial has degree -1.
class UPoly {
   public:
    explicit UPoly(FieldSpec field) : field_(std::move(field)) {}
    UPoly(FieldSpec field, std::vector<Residue> coeffs);

    static UPoly constant(const FieldSpec& field, Residue c);
    static UPoly monomial(const FieldSpec& field, std::size_t degree, Residue c = 1);
    static UPoly x(const FieldSpec& field) { return monomial(field, 1); }

    const FieldSpec& field() const noexcept { return field_; }
    const std::vector<Residue>& coeffs() const noexcept { return c_; }
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    Residue operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    Residue leading() const noexcept { return c_.empty() ? 0 : c_.back(); }

    friend bool operator==(const UPoly& a, const UPoly& b) noexcept { return a.c_ == b.c_; }

   private:
    void trim();
    FieldSpec field_;
    std::vector<Residue> c_;
};

UPoly operator+(const UPoly& a, const UPoly& b);
UPoly operator-(const UPoly& a, const UPoly& b);
UPoly operator*(const UPoly& a, const UPoly& b);
UPoly scale(const UPoly& a, Residue c);

/// Quotient and remainder; throws std::domain_error when b is zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly operator%(const UPoly& a, const UPoly& b);
UPoly operator/(const UPoly& a, const UPoly& b);

UPoly make_monic(const UPoly& a);
/// Monic gcd (zero when both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly derivative(const UPoly& a);
UPoly powmod(const UPoly& base, const BigInt& exponent, const UPoly& modulus);
Residue evaluate(const UPoly& a, Residue x);

/// Square-free factorization of a nonconstant polynomial: pairs (factor, multiplicity)
/// with monic square-free pairwise-coprime factors and a = lc * prod factor^mult.
std::vector<std::pair<UPoly, unsigned>> squarefree_decomposition(const UPoly& a);

/// Distinct-degree factorization of a monic square-free polynomial: pairs
/// (d, product of all irreducible factors of degree d), for each d that occurs.
std::vector<std::pair<unsigned, UPoly>> distinct_degree_factorization(const UPoly& a);

/// Rabin's irreducibility test.
bool is_irreducible(const UPoly& a);

/// True iff a root of the irreducible polynomial g generates the multiplicative group
/// of F_{q^deg g}. Throws std::invalid_argument for reducible or constant g.
bool is_primitive(const UPoly& g);

}  // namespace coefcount

#endif
