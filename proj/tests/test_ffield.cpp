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

#include <stdexcept>

#include "coefcount/ffield.hpp"
#include "doctest.h"

using namespace coefcount;

namespace {

void check_axioms(const FieldSpec& F) {
    const Residue q = F.q();
    for (Residue a = 0; a < q; ++a) {
        CHECK(F.add(a, 0) == a);
        CHECK(F.mul(a, 1) == a);
        CHECK(F.add(a, F.neg(a)) == 0);
        CHECK(F.frobenius(a) == F.pow(a, std::uint64_t{F.p()}));
        if (a != 0) {
            CHECK(F.mul(a, F.inv(a)) == 1);
            CHECK(F.pow(a, std::uint64_t{q - 1}) == 1);
        }
        for (Residue b = 0; b < q; ++b) {
            CHECK(F.add(a, b) == F.add(b, a));
            CHECK(F.mul(a, b) == F.mul(b, a));
            CHECK(F.sub(F.add(a, b), b) == a);
            if (b != 0) CHECK(F.mul(F.div(a, b), b) == a);
            for (Residue c = 0; c < q; ++c) {
                CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            }
        }
    }
}

}  // namespace

TEST_CASE("prime fields") {
    FieldSpec F2;
    CHECK(F2.q() == 2);
    CHECK(F2.add(1, 1) == 0);
    FieldSpec F5 = FieldSpec::prime(5);
    CHECK(F5.mul(3, 4) == 2);
    CHECK(F5.inv(2) == 3);
    CHECK(F5.from_int(-1) == 4);
    check_axioms(F5);
    check_axioms(FieldSpec::prime(7));
}

TEST_CASE("extension fields satisfy the field axioms") {
    check_axioms(FieldSpec::extension(2, 2));
    check_axioms(FieldSpec::extension(2, 3));
    check_axioms(FieldSpec::extension(3, 2));
}

TEST_CASE("F_4 in the polynomial basis") {
    FieldSpec F4 = FieldSpec::extension(2, 2);
    CHECK(F4.modulus() == std::vector<std::uint32_t>{1, 1, 1});
    Residue a = F4.generator();
    CHECK(a == 2);
    // a^2 = a + 1 modulo t^2 + t + 1.
    CHECK(F4.mul(a, a) == 3);
    CHECK(F4.describe() == "2^2:1,1,1");
    CHECK(FieldSpec::parse("2^2:1,1,1") == F4);
    CHECK(FieldSpec::parse("2^2") == F4);
    CHECK(F4.coeffs(3) == std::vector<std::uint32_t>{1, 1});
}

TEST_CASE("smallest irreducible moduli") {
    CHECK(find_irreducible(2, 1) == std::vector<std::uint32_t>{0, 1});
    CHECK(find_irreducible(2, 3) == std::vector<std::uint32_t>{1, 1, 0, 1});
    CHECK(find_irreducible(3, 2) == std::vector<std::uint32_t>{1, 0, 1});
}

TEST_CASE("field elements") {
    FieldSpec F4 = FieldSpec::extension(2, 2);
    FieldElem a(F4, F4.generator());
    CHECK((a * a) == a + FieldElem(F4, 1));
    CHECK((a / a) == FieldElem(F4, 1));
    CHECK(a.pow(3) == FieldElem(F4, 1));
    CHECK(field_arith(a, a, ArithOp::add).is_zero());
    CHECK_THROWS_AS(a + FieldElem(FieldSpec(), 1), std::invalid_argument);
}

TEST_CASE("field errors") {
    CHECK_THROWS_AS(FieldSpec::prime(4), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::extension(2, 2, {1, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec().inv(0), std::domain_error);
    CHECK_THROWS(FieldSpec::extension(2, 20));
}
