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

#include <random>

#include "coefcount/oracle.hpp"
#include "coefcount/qpow.hpp"
#include "doctest.h"

using namespace coefcount;

namespace {

UPoly up(const char* text, const FieldSpec& F) { return to_upoly(parse_poly(text, 1, F)); }

BigInt oracle_qpow(const UPoly& g, std::uint64_t c, Residue alpha, unsigned m) {
    const FieldSpec& F = g.field();
    FieldPoly f(FieldRing{F}, 1);
    for (std::size_t i = 0; i <= static_cast<std::size_t>(g.degree()); ++i)
        if (g[i] != 0) f.add_term({i}, g[i]);
    std::uint64_t e = 1;
    for (unsigned i = 0; i < m; ++i) e *= F.q();
    return brute_power_census(f, e - c, alpha);
}

}  // namespace

TEST_CASE("factorization data") {
    FieldSpec F2;
    CHECK(splitting_degree(up("1+x+x^2", F2)) == 2);
    CHECK(splitting_degree(up("1+x^2+x^5", F2)) == 5);
    // (1+x)(1+x+x^2) splits over F_4.
    CHECK(splitting_degree(up("1+x^3", F2)) == 2);
    CHECK(max_multiplicity(up("1+x^2", F2)) == 2);
    CHECK(max_multiplicity(up("1+x+x^2", F2)) == 1);
    CHECK(validity_threshold(up("1+x^2", F2), 3) == 3);
    CHECK(validity_threshold(up("1+x+x^2", F2), 1) == 0);
    CHECK_THROWS_AS(splitting_degree(up("x+x^2", F2)), std::invalid_argument);
    CHECK_THROWS_AS(splitting_degree(up("1", F2)), std::invalid_argument);
}

TEST_CASE("dense powering agrees with division and with the oracle") {
    for (const char* spec : {"2", "3"}) {
        FieldSpec F = FieldSpec::parse(spec);
        for (const char* g_text : {"1+x+x^2", "2+x+x^2", "1+x^2+x^3", "1+x+x^3+x^4"}) {
            UPoly g = up(g_text, F);
            if (g.is_zero() || g[0] == 0) continue;
            for (std::uint64_t c : {1, 2}) {
                for (unsigned m = 1; m <= (F.q() == 2 ? 7u : 4u); ++m) {
                    std::uint64_t qm = 1;
                    for (unsigned i = 0; i < m; ++i) qm *= F.q();
                    if (qm < c) continue;
                    CHECK(qpow_coefficients(g, c, m) == qpow_coefficients_by_division(g, c, m));
                    auto all = count_qpow_all(g, c, m);
                    for (Residue a = 1; a < F.q(); ++a) {
                        BigInt want = oracle_qpow(g, c, a, m);
                        CHECK(count_qpow(g, c, a, m) == want);
                        CHECK(all[a] == want);
                    }
                }
            }
        }
    }
}

TEST_CASE("primitive polynomials") {
    FieldSpec F2;
    CHECK(primitive_u_check(up("1+x^2+x^5", F2)) == Rational(80, 31));
    QPowProfile p = fit_qpow_profile(up("1+x^2+x^5", F2), 1, 1);
    CHECK(p.d == 5);
    CHECK_THROWS_AS(primitive_u_check(up("1+x+x^2+x^3+x^4", F2)), std::invalid_argument);
}

TEST_CASE("fitted profiles predict later counts") {
    std::mt19937_64 rng(99);
    FieldSpec F2;
    for (int trial = 0; trial < 12; ++trial) {
        unsigned deg = 2 + rng() % 4;
        std::vector<Residue> coeffs(deg + 1);
        coeffs[0] = coeffs[deg] = 1;
        for (unsigned i = 1; i < deg; ++i) coeffs[i] = rng() & 1;
        UPoly g(F2, coeffs);
        std::uint64_t c = 1 + rng() % 3;
        QPowProfile prof = fit_qpow_profile(g, c, 1);
        CHECK(prof.d == splitting_degree(g));
        CHECK(prof.l == validity_threshold(g, c));
        for (unsigned m = prof.l; m <= prof.l + 2 * prof.d + 2 && m <= 16; ++m)
            CHECK(prof.predict(m) == Rational(count_qpow(g, c, 1, m)));
    }
}

TEST_CASE("qpow errors") {
    FieldSpec F2;
    UPoly g = up("1+x+x^2", F2);
    CHECK_THROWS_AS(count_qpow(g, 5, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(count_qpow(g, 1, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(qpow_coefficients(g, 1, 30, 1000), ResourceLimitError);
}
