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

#include "coefcount/upoly.hpp"
#include "doctest.h"

using namespace coefcount;

namespace {

UPoly from_bits(const FieldSpec& F, std::uint32_t bits) {
    std::vector<Residue> c;
    for (; bits; bits >>= 1) c.push_back(bits & 1);
    return UPoly(F, c);
}

// Irreducibility by trial division over all monic polynomials of lower degree.
bool irreducible_by_trial(const UPoly& g) {
    if (g.degree() < 1) return false;
    for (std::uint32_t bits = 2; bits < (1u << g.degree()); ++bits) {
        UPoly d = from_bits(g.field(), bits);
        if (d.degree() >= 1 && d.degree() < g.degree() && (g % d).is_zero()) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("division and gcd") {
    FieldSpec F3 = FieldSpec::prime(3);
    UPoly a(F3, {1, 0, 1});  // x^2 + 1
    UPoly b(F3, {1, 1});     // x + 1
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    CHECK(gcd(a * b, b * b) == make_monic(b));
    CHECK_THROWS_AS(divmod(a, UPoly(F3)), std::domain_error);
}

TEST_CASE("irreducibility agrees with trial division over F_2") {
    FieldSpec F2;
    for (std::uint32_t bits = 2; bits < 256; ++bits) {
        UPoly g = from_bits(F2, bits);
        CHECK(is_irreducible(g) == irreducible_by_trial(g));
    }
}

TEST_CASE("square-free and distinct-degree factorizations reconstruct the input") {
    FieldSpec F2;
    for (std::uint32_t bits = 3; bits < 512; bits += 2) {
        UPoly g = from_bits(F2, bits);
        if (g.degree() < 1) continue;
        UPoly back = UPoly::constant(F2, 1);
        for (const auto& [f, e] : squarefree_decomposition(g)) {
            UPoly prod = UPoly::constant(F2, 1);
            for (const auto& [d, part] : distinct_degree_factorization(f)) {
                CHECK(part.degree() % d == 0);
                prod = prod * part;
            }
            CHECK(prod == f);
            for (unsigned i = 0; i < e; ++i) back = back * f;
        }
        CHECK(back == g);
    }
}

TEST_CASE("primitivity") {
    FieldSpec F2;
    CHECK(is_primitive(UPoly(F2, {1, 0, 1, 0, 0, 1})));   // 1 + x^2 + x^5
    CHECK(is_primitive(UPoly(F2, {1, 1, 0, 1, 1, 1})));   // 1 + x + x^3 + x^4 + x^5
    CHECK_FALSE(is_primitive(UPoly(F2, {1, 1, 1, 1, 1})));  // 1 + ... + x^4 has order 5
    CHECK_THROWS_AS(is_primitive(UPoly(F2, {1, 0, 1})), std::invalid_argument);
    FieldSpec F3 = FieldSpec::prime(3);
    CHECK(is_primitive(UPoly(F3, {2, 1, 1})));
    CHECK_FALSE(is_primitive(UPoly(F3, {2, 0, 1, 1})));
}

TEST_CASE("powmod and evaluation") {
    FieldSpec F5 = FieldSpec::prime(5);
    UPoly x = UPoly::x(F5);
    UPoly m(F5, {2, 0, 1});
    // x^5 mod (x^2 + 2): x^2 = -2, x^4 = 4, x^5 = 4x.
    CHECK(powmod(x, 5, m) == UPoly(F5, {0, 4}));
    CHECK(evaluate(UPoly(F5, {1, 2, 3}), 2) == (1 + 4 + 12) % 5);
    CHECK(derivative(UPoly(F5, {1, 2, 3})) == UPoly(F5, {2, 1}));
}
