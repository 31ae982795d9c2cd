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

#include "coefcount/ratgen.hpp"

#include <algorithm>
#include <stdexcept>

namespace coefcount {

ZPoly zpoly_trim(ZPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

ZPoly zpoly_add(const ZPoly& a, const ZPoly& b) {
    ZPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return zpoly_trim(std::move(out));
}

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return zpoly_trim(std::move(out));
}

ZPoly zpoly_scale(const ZPoly& a, const BigInt& s) {
    ZPoly out(a);
    for (auto& c : out) c *= s;
    return zpoly_trim(std::move(out));
}

std::string zpoly_to_string(const ZPoly& p) {
    if (p.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        BigInt mag = abs(p[i]);
        if (out.empty()) out += p[i] < 0 ? "-" : "";
        else out += p[i] < 0 ? " - " : " + ";
        if (i == 0 || mag != 1) out += mag.get_str();
        if (i > 0) out += "z";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

bool LinearRecurrence::fits(const std::vector<BigInt>& seq) const {
    const std::size_t d = order();
    for (std::size_t i = 0; i < std::min(d, seq.size()); ++i)
        if (initial.size() > i && initial[i] != seq[i]) return false;
    for (std::size_t n = d; n < seq.size(); ++n) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= d; ++i) acc += coefficients[i - 1] * seq[n - i];
        if (acc != Rational(seq[n])) return false;
    }
    return true;
}

RationalGF RationalGF::make(ZPoly numerator, ZPoly denominator) {
    numerator = zpoly_trim(std::move(numerator));
    denominator = zpoly_trim(std::move(denominator));
    if (denominator.empty() || denominator[0] == 0)
        throw std::invalid_argument("generating function denominator needs a nonzero constant term");
    BigInt g = 0;
    for (const auto& c : numerator) g = gcd(g, c);
    for (const auto& c : denominator) g = gcd(g, c);
    if (denominator[0] < 0) g = -g;
    for (auto& c : numerator) c /= g;
    for (auto& c : denominator) c /= g;
    return {std::move(numerator), std::move(denominator)};
}

RationalGF RationalGF::geometric(const BigInt& a) { return make({1}, {1, -a}); }

RationalGF RationalGF::polynomial(ZPoly p) { return make(std::move(p), {1}); }

std::string RationalGF::to_string() const {
    return "(" + zpoly_to_string(numerator) + ")/(" + zpoly_to_string(denominator) + ")";
}

RationalGF operator+(const RationalGF& a, const RationalGF& b) {
    return RationalGF::make(zpoly_add(zpoly_mul(a.numerator, b.denominator), zpoly_mul(b.numerator, a.denominator)),
                            zpoly_mul(a.denominator, b.denominator));
}

RationalGF operator*(const RationalGF& a, const RationalGF& b) {
    return RationalGF::make(zpoly_mul(a.numerator, b.numerator), zpoly_mul(a.denominator, b.denominator));
}

LinearRecurrence fit_recurrence(const std::vector<BigInt>& seq, std::size_t max_order) {
    if (seq.size() < 2 * max_order + 1)
        throw std::invalid_argument("fit_recurrence needs at least " + std::to_string(2 * max_order + 1) + " terms, got " +
                                    std::to_string(seq.size()));
    // Connection polynomial C with C_0 = 1 and sum_i C_i a_{n-i} = 0 for n >= L.
    std::vector<Rational> C{1}, B{1};
    std::size_t L = 0, shift = 1;
    Rational b = 1;
    for (std::size_t n = 0; n < seq.size(); ++n) {
        Rational disc = seq[n];
        for (std::size_t i = 1; i <= L && i < C.size(); ++i) disc += C[i] * seq[n - i];
        if (disc == 0) {
            ++shift;
            continue;
        }
        std::vector<Rational> T = C;
        Rational factor = disc / b;
        if (C.size() < B.size() + shift) C.resize(B.size() + shift, 0);
        for (std::size_t i = 0; i < B.size(); ++i) C[i + shift] -= factor * B[i];
        if (2 * L <= n) {
            L = n + 1 - L;
            B = std::move(T);
            b = disc;
            shift = 1;
        } else {
            ++shift;
        }
    }
    if (L > max_order)
        throw std::runtime_error("no linear recurrence of order <= " + std::to_string(max_order) + " fits " +
                                 std::to_string(seq.size()) + " terms");
    C.resize(L + 1, 0);
    LinearRecurrence rec;
    for (std::size_t i = 1; i <= L; ++i) rec.coefficients.push_back(-C[i]);
    rec.initial.assign(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(L));
    if (!rec.fits(seq)) throw std::logic_error("Berlekamp-Massey produced a non-fitting recurrence");
    return rec;
}

RationalGF seq_to_genfun(const std::vector<BigInt>& seq, const LinearRecurrence& rec) {
    const std::size_t d = rec.order();
    if (seq.size() < d) throw std::invalid_argument("seq_to_genfun: sequence shorter than the recurrence order");
    // Q = 1 - sum c_i z^i; P = (A * Q) mod z^d.
    std::vector<Rational> Q(d + 1);
    Q[0] = 1;
    for (std::size_t i = 1; i <= d; ++i) Q[i] = -rec.coefficients[i - 1];
    std::vector<Rational> P(d, 0);
    for (std::size_t n = 0; n < d; ++n)
        for (std::size_t i = 0; i <= n; ++i) P[n] += Q[i] * seq[n - i];
    BigInt den = 1;
    for (const auto& c : Q) den = lcm(den, c.get_den());
    for (const auto& c : P) den = lcm(den, c.get_den());
    ZPoly num, dq;
    for (const auto& c : P) num.push_back(BigInt(c * den));
    for (const auto& c : Q) dq.push_back(BigInt(c * den));
    return RationalGF::make(std::move(num), std::move(dq));
}

std::vector<BigInt> genfun_expand(const RationalGF& g, std::size_t terms) {
    const auto& Q = g.denominator;
    if (Q.empty() || (Q[0] != 1 && Q[0] != -1))
        throw std::invalid_argument("genfun_expand: denominator constant term must be +-1");
    std::vector<BigInt> out(terms, 0);
    for (std::size_t n = 0; n < terms; ++n) {
        BigInt acc = n < g.numerator.size() ? g.numerator[n] : BigInt(0);
        for (std::size_t i = 1; i < Q.size() && i <= n; ++i) acc -= Q[i] * out[n - i];
        out[n] = Q[0] == 1 ? acc : BigInt(-acc);
    }
    return out;
}

bool genfun_equal_as_series(const RationalGF& a, const RationalGF& b, std::size_t terms) {
    bool cross = zpoly_mul(a.numerator, b.denominator) == zpoly_mul(b.numerator, a.denominator);
    bool unit_a = !a.denominator.empty() && (a.denominator[0] == 1 || a.denominator[0] == -1);
    bool unit_b = !b.denominator.empty() && (b.denominator[0] == 1 || b.denominator[0] == -1);
    if (cross && unit_a && unit_b && genfun_expand(a, terms) != genfun_expand(b, terms))
        throw std::logic_error("series disagree although cross products match");
    return cross;
}

std::vector<Rational> characteristic_polynomial(const LinearRecurrence& rec) {
    std::vector<Rational> out{1};
    for (const auto& c : rec.coefficients) out.push_back(-c);
    return out;
}

}  // namespace coefcount
