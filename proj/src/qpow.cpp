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

#include "coefcount/qpow.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace coefcount {

Rational QPowProfile::predict(std::uint64_t m) const {
    return u_at(m) * Rational(pow_big(BigInt(g.field().q()), static_cast<unsigned long>(m))) + v_at(m);
}

UPoly to_upoly(const FieldPoly& g) {
    if (g.nvars() != 1) throw std::invalid_argument("expected a univariate polynomial");
    std::vector<Residue> c;
    for (const auto& [m, v] : g.terms()) {
        if (m[0] >= c.size()) c.resize(m[0] + 1, 0);
        c[m[0]] = v;
    }
    return UPoly(g.ring().field, std::move(c));
}

namespace {

void require_usable(const UPoly& g) {
    if (g.degree() < 1) throw std::invalid_argument("g must be nonconstant");
    if (g[0] == 0) throw std::invalid_argument("g(0) must be nonzero");
}

std::uint64_t exponent_of(const UPoly& g, std::uint64_t c, unsigned m, std::uint64_t degree_budget) {
    const std::uint64_t q = g.field().q();
    unsigned __int128 qm = 1;
    for (unsigned i = 0; i < m; ++i) {
        qm *= q;
        if (qm > (static_cast<unsigned __int128>(1) << 62)) throw ResourceLimitError("q^m is too large");
    }
    if (qm < c) throw std::invalid_argument("q^m must be at least c");
    std::uint64_t e = static_cast<std::uint64_t>(qm) - c;
    if (static_cast<unsigned __int128>(e) * static_cast<std::uint64_t>(g.degree()) > degree_budget)
        throw ResourceLimitError("degree of g^(q^m-c) exceeds the budget of " + std::to_string(degree_budget));
    return e;
}

// Bit-packed F_2 powering: the accumulator is multiplied by the sparse factors g^{2^i}.
std::vector<Residue> power_f2(const UPoly& g, std::uint64_t e) {
    const std::uint64_t dg = static_cast<std::uint64_t>(g.degree());
    const std::uint64_t total = e * dg + 1;
    std::vector<std::uint64_t> acc((total + 63) / 64 + 1, 0), next(acc.size(), 0);
    acc[0] = 1;
    std::uint64_t acc_deg = 0;
    std::vector<std::uint64_t> support;
    for (std::uint64_t j = 0; j <= dg; ++j)
        if (g[j] != 0) support.push_back(j);
    std::uint64_t scale = 1;  // 2^i
    for (std::uint64_t rest = e; rest > 0; rest >>= 1, scale <<= 1) {
        if ((rest & 1) == 0) continue;
        const std::uint64_t words = acc_deg / 64 + 1;
        const std::uint64_t new_deg = acc_deg + dg * scale;
        std::fill(next.begin(), next.begin() + static_cast<std::ptrdiff_t>(new_deg / 64 + 1), 0);
        for (auto j : support) {
            const std::uint64_t shift = j * scale;
            const std::uint64_t ws = shift / 64, bs = shift % 64;
            for (std::uint64_t w = 0; w < words; ++w) {
                next[w + ws] ^= acc[w] << bs;
                if (bs != 0 && w + ws + 1 < next.size()) next[w + ws + 1] ^= acc[w] >> (64 - bs);
            }
        }
        std::swap(acc, next);
        acc_deg = new_deg;
    }
    std::vector<Residue> out(total, 0);
    for (std::uint64_t i = 0; i < total; ++i) out[i] = (acc[i / 64] >> (i % 64)) & 1;
    return out;
}

std::vector<Residue> power_general(const UPoly& g, std::uint64_t e) {
    const FieldSpec& F = g.field();
    const std::uint64_t p = F.p();
    const std::uint64_t dg = static_cast<std::uint64_t>(g.degree());
    std::vector<Residue> acc{1};
    // Sparse g^{p^i}: exponents scaled by p^i, coefficients raised to p^i.
    std::vector<std::pair<std::uint64_t, Residue>> factor;
    for (std::uint64_t j = 0; j <= dg; ++j)
        if (g[j] != 0) factor.emplace_back(j, g[j]);
    for (std::uint64_t rest = e; rest > 0; rest /= p) {
        for (std::uint64_t t = 0; t < rest % p; ++t) {
            std::uint64_t span = factor.back().first;
            std::vector<Residue> next(acc.size() + span, 0);
            for (const auto& [off, c] : factor)
                for (std::size_t i = 0; i < acc.size(); ++i)
                    if (acc[i] != 0) next[i + off] = F.add(next[i + off], F.mul(acc[i], c));
            acc = std::move(next);
        }
        if (rest / p > 0)
            for (auto& [off, c] : factor) {
                off *= p;
                c = F.frobenius(c);
            }
    }
    acc.resize(e * dg + 1, 0);
    return acc;
}

}  // namespace

unsigned splitting_degree(const UPoly& g) {
    require_usable(g);
    unsigned d = 1;
    for (const auto& [factor, mult] : squarefree_decomposition(g))
        for (const auto& [deg, part] : distinct_degree_factorization(factor)) d = std::lcm(d, deg);
    return d;
}

unsigned max_multiplicity(const UPoly& g) {
    require_usable(g);
    unsigned mu = 0;
    for (const auto& [factor, mult] : squarefree_decomposition(g)) mu = std::max(mu, mult);
    return mu;
}

unsigned validity_threshold(const UPoly& g, std::uint64_t c) {
    if (c < 1) throw std::invalid_argument("c must be positive");
    const BigInt target = BigInt(max_multiplicity(g)) * BigInt(std::to_string(c));
    unsigned l = 0;
    BigInt power = 1;
    while (power < target) {
        power *= g.field().q();
        ++l;
    }
    return l;
}

std::vector<Residue> qpow_coefficients(const UPoly& g, std::uint64_t c, unsigned m, std::uint64_t degree_budget) {
    require_usable(g);
    const std::uint64_t e = exponent_of(g, c, m, degree_budget);
    if (g.field().q() == 2) return power_f2(g, e);
    return power_general(g, e);
}

std::vector<Residue> qpow_coefficients_by_division(const UPoly& g, std::uint64_t c, unsigned m,
                                                   std::uint64_t degree_budget) {
    require_usable(g);
    const FieldSpec& F = g.field();
    const std::uint64_t e = exponent_of(g, c, m, degree_budget);
    const std::uint64_t qm = e + c;
    const std::uint64_t dg = static_cast<std::uint64_t>(g.degree());
    // g(x^{q^m}); coefficients are fixed by the q-power Frobenius.
    std::vector<Residue> num(dg * qm + 1, 0);
    for (std::uint64_t j = 0; j <= dg; ++j) num[j * qm] = g[j];
    UPoly gc = UPoly::constant(F, 1);
    for (std::uint64_t i = 0; i < c; ++i) gc = gc * g;
    const auto& den = gc.coeffs();
    const std::uint64_t dd = den.size() - 1;
    const Residue lead_inv = F.inv(den.back());
    std::vector<Residue> quot(num.size() - dd, 0);
    for (std::uint64_t i = num.size(); i-- > dd;) {
        Residue v = num[i];
        if (v == 0) continue;
        Residue f = F.mul(v, lead_inv);
        quot[i - dd] = f;
        for (std::uint64_t j = 0; j <= dd; ++j)
            if (den[j] != 0) num[i - dd + j] = F.sub(num[i - dd + j], F.mul(f, den[j]));
    }
    for (std::uint64_t i = 0; i < dd; ++i)
        if (num[i] != 0) throw VerificationError("g^c does not divide g(x^{q^m})");
    return quot;
}

std::vector<BigInt> count_qpow_all(const UPoly& g, std::uint64_t c, unsigned m, std::uint64_t degree_budget) {
    auto coeffs = qpow_coefficients(g, c, m, degree_budget);
    std::vector<std::uint64_t> counts(g.field().q(), 0);
    for (auto v : coeffs) ++counts[v];
    std::vector<BigInt> out(counts.size());
    for (std::size_t a = 0; a < counts.size(); ++a) out[a] = BigInt(std::to_string(counts[a]));
    out[0] = 0;
    return out;
}

BigInt count_qpow(const UPoly& g, std::uint64_t c, Residue alpha, unsigned m, std::uint64_t degree_budget) {
    if (alpha == 0 || !g.field().contains(alpha)) throw std::invalid_argument("alpha must be a nonzero field element");
    return count_qpow_all(g, c, m, degree_budget)[alpha];
}

QPowProfile fit_qpow_profile(const UPoly& g, std::uint64_t c, Residue alpha, std::uint64_t degree_budget) {
    if (alpha == 0 || !g.field().contains(alpha)) throw std::invalid_argument("alpha must be a nonzero field element");
    QPowProfile prof{g, c, alpha, 1, 1, 0, {}, {}};
    prof.d = splitting_degree(g);
    prof.mu = max_multiplicity(g);
    prof.l = validity_threshold(g, c);
    const BigInt q = g.field().q();
    std::map<unsigned, BigInt> cache;
    auto N = [&](unsigned m) -> const BigInt& {
        auto it = cache.find(m);
        if (it == cache.end()) it = cache.emplace(m, count_qpow(g, c, alpha, m, degree_budget)).first;
        return it->second;
    };
    prof.u.assign(prof.d, 0);
    prof.v.assign(prof.d, 0);
    for (unsigned rho = 0; rho < prof.d; ++rho) {
        unsigned m1 = prof.l + ((rho + prof.d - prof.l % prof.d) % prof.d);
        unsigned m2 = m1 + prof.d;
        BigInt q1 = pow_big(q, m1), q2 = pow_big(q, m2);
        Rational u = Rational(N(m2) - N(m1)) / Rational(q2 - q1);
        u.canonicalize();
        Rational v = Rational(N(m1)) - u * Rational(q1);
        v.canonicalize();
        prof.u[rho] = u;
        prof.v[rho] = v;
    }
    for (unsigned rho = 0; rho < prof.d; ++rho) {
        unsigned m3 = prof.l + ((rho + prof.d - prof.l % prof.d) % prof.d) + 2 * prof.d;
        if (prof.predict(m3) != Rational(N(m3)))
            throw VerificationError("fitted profile fails at m = " + std::to_string(m3) + ": predicted " +
                                    to_string(prof.predict(m3)) + ", counted " + to_string(N(m3)));
    }
    return prof;
}

Rational primitive_u_check(const UPoly& g) {
    if (!is_primitive(g)) throw std::invalid_argument("g is not primitive");
    const unsigned d = static_cast<unsigned>(g.degree());
    const BigInt q = g.field().q();
    Rational u(BigInt(d) * pow_big(q, d - 1), pow_big(q, d) - 1);
    u.canonicalize();
    return u;
}

}  // namespace coefcount
