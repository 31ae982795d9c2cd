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

#ifndef COEFCOUNT_ORACLE_HPP
#define COEFCOUNT_ORACLE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "coefcount/mpoly.hpp"

// Brute-force expansion used to check every other module. Nothing here shares
// code with poly_pow or the hash-map product: powers are built by repeated
// multiplication on a dense grid, products by sort-and-merge on packed keys.

namespace coefcount {

constexpr std::uint64_t kOracleBudget = 20'000'000;

template <class Coeff>
struct ProductCensus {
    std::uint64_t distinct = 0;              // N, the number of nonzero coefficients
    std::map<Coeff, std::uint64_t> values;  // value -> multiplicity
};

/// Census of f^n for every n in [0, n_max].
std::vector<std::map<Residue, std::uint64_t>> brute_power_sweep(const FieldPoly& f, std::uint64_t n_max,
                                                                std::uint64_t budget = kOracleBudget);

/// Number of coefficients of f^n equal to alpha.
BigInt brute_power_census(const FieldPoly& f, std::uint64_t n, Residue alpha, std::uint64_t budget = kOracleBudget);

/// Expands the product left to right and censuses the result.
ProductCensus<Residue> brute_product_census(const std::vector<FieldPoly>& factors,
                                            std::uint64_t budget = kOracleBudget);
ProductCensus<BigInt> brute_product_census(const std::vector<IntPoly>& factors, std::uint64_t budget = kOracleBudget);

}  // namespace coefcount

#endif
