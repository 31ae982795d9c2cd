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

#ifndef COEFCOUNT_RATGEN_HPP
#define COEFCOUNT_RATGEN_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "coefcount/integers.hpp"

namespace coefcount {

/// Dense integer polynomial in z, constant term first, trimmed.
using ZPoly = std::vector<BigInt>;

ZPoly zpoly_trim(ZPoly p);
ZPoly zpoly_add(const ZPoly& a, const ZPoly& b);
ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b);
ZPoly zpoly_scale(const ZPoly& a, const BigInt& s);
/// "1 - 3z + z^2".
std::string zpoly_to_string(const ZPoly& p);

/// a_n = sum_{i=1..d} c_i a_{n-i} for every n >= order (the supplied initial terms).
struct LinearRecurrence {
    std::vector<Rational> coefficients;  // c_1..c_d
    std::vector<BigInt> initial;         // a_0..a_{d-1}

    std::size_t order() const noexcept { return coefficients.size(); }
    bool fits(const std::vector<BigInt>& seq) const;
};

/// numerator / denominator with integer coefficients, positive denominator constant
/// term and unit content.
struct RationalGF {
    ZPoly numerator;
    ZPoly denominator;

    static RationalGF make(ZPoly numerator, ZPoly denominator);
    /// 1 / (1 - a z).
    static RationalGF geometric(const BigInt& a);
    static RationalGF polynomial(ZPoly p);

    std::string to_string() const;
};

RationalGF operator+(const RationalGF& a, const RationalGF& b);
RationalGF operator*(const RationalGF& a, const RationalGF& b);

/// Minimal-order recurrence via Berlekamp-Massey over the rationals. Needs at least
/// 2 * max_order + 1 terms; throws std::invalid_argument when too few terms are given
/// and std::runtime_error when no recurrence of order <= max_order fits.
LinearRecurrence fit_recurrence(const std::vector<BigInt>& seq, std::size_t max_order);

RationalGF seq_to_genfun(const std::vector<BigInt>& seq, const LinearRecurrence& rec);

/// First `terms` Taylor coefficients; the denominator constant term must be +-1.
std::vector<BigInt> genfun_expand(const RationalGF& g, std::size_t terms);

/// Cross-multiplied equality a.num * b.den == b.num * a.den, confirmed on the first
/// `terms` coefficients.
bool genfun_equal_as_series(const RationalGF& a, const RationalGF& b, std::size_t terms);

/// Characteristic polynomial rho^d - c_1 rho^{d-1} - ... - c_d, leading coefficient first.
std::vector<Rational> characteristic_polynomial(const LinearRecurrence& rec);

}  // namespace coefcount

#endif
