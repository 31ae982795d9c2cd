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

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace coefcount {

UPoly::UPoly(FieldSpec field, std::vector<Residue> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (auto v : c_)
        if (!field_.contains(v)) throw std::invalid_argument("coefficient index out of range for F_" + std::to_string(field_.q()));
    trim();
}

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::constant(const FieldSpec& field, Residue c) { return UPoly(field, {c}); }

UPoly UPoly::monomial(const FieldSpec& field, std::size_t degree, Residue c) {
    std::vector<Residue> v(degree + 1, 0);
    v[degree] = c;
    return UPoly(field, std::move(v));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    const auto& F = a.field();
    std::vector<Residue> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(a[i], b[i]);
    return UPoly(F, std::move(out));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    const auto& F = a.field();
    std::vector<Residue> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.sub(a[i], b[i]);
    return UPoly(F, std::move(out));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly(a.field());
    const auto& F = a.field();
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<Residue> out(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (y[j] != 0) out[i + j] = F.add(out[i + j], F.mul(x[i], y[j]));
    }
    return UPoly(F, std::move(out));
}

UPoly scale(const UPoly& a, Residue c) {
    std::vector<Residue> out(a.coeffs());
    for (auto& v : out) v = a.field().mul(v, c);
    return UPoly(a.field(), std::move(out));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const auto& F = a.field();
    if (a.degree() < b.degree()) return {UPoly(F), a};
    std::vector<Residue> rem(a.coeffs());
    const auto& d = b.coeffs();
    const std::size_t db = d.size() - 1;
    std::vector<Residue> quot(rem.size() - db, 0);
    const Residue lead_inv = F.inv(d.back());
    for (std::size_t i = rem.size(); i-- > db;) {
        Residue c = rem[i];
        if (c == 0) continue;
        Residue factor = F.mul(c, lead_inv);
        quot[i - db] = factor;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = F.sub(rem[i - db + j], F.mul(factor, d[j]));
    }
    rem.resize(db);
    return {UPoly(F, std::move(quot)), UPoly(F, std::move(rem))};
}

UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }
UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }

UPoly make_monic(const UPoly& a) {
    if (a.is_zero()) return a;
    return scale(a, a.field().inv(a.leading()));
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return make_monic(x);
}

UPoly derivative(const UPoly& a) {
    const auto& F = a.field();
    std::vector<Residue> out;
    for (std::size_t i = 1; i < a.coeffs().size(); ++i) out.push_back(F.mul(F.from_int(static_cast<long long>(i % F.p())), a[i]));
    return UPoly(F, std::move(out));
}

UPoly powmod(const UPoly& base, const BigInt& exponent, const UPoly& modulus) {
    if (exponent < 0) throw std::invalid_argument("powmod: negative exponent");
    const auto& F = base.field();
    UPoly result = UPoly::constant(F, 1) % modulus;
    UPoly b = base % modulus;
    const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % modulus;
        if (mpz_tstbit(exponent.get_mpz_t(), i)) result = (result * b) % modulus;
    }
    return result;
}

Residue evaluate(const UPoly& a, Residue x) {
    const auto& F = a.field();
    Residue acc = 0;
    for (std::size_t i = a.coeffs().size(); i-- > 0;) acc = F.add(F.mul(acc, x), a[i]);
    return acc;
}

namespace {

// b with b^p = a, for a polynomial whose derivative vanishes.
UPoly pth_root(const UPoly& a) {
    const auto& F = a.field();
    const std::uint64_t root_exp = F.q() / F.p();  // inverse Frobenius on F_q
    std::vector<Residue> out;
    for (std::size_t i = 0; i < a.coeffs().size(); i += F.p()) out.push_back(F.pow(a[i], root_exp));
    return UPoly(F, std::move(out));
}

void squarefree_into(const UPoly& f, unsigned scale_mult, std::vector<std::pair<UPoly, unsigned>>& out) {
    const auto& F = f.field();
    UPoly c = gcd(f, derivative(f));
    UPoly w = f / c;
    unsigned i = 1;
    while (w.degree() > 0) {
        UPoly y = gcd(w, c);
        UPoly fac = w / y;
        if (fac.degree() > 0) out.emplace_back(make_monic(fac), i * scale_mult);
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) squarefree_into(pth_root(c), scale_mult * F.p(), out);
}

}  // namespace

std::vector<std::pair<UPoly, unsigned>> squarefree_decomposition(const UPoly& a) {
    if (a.degree() < 1) throw std::invalid_argument("squarefree_decomposition: nonconstant polynomial required");
    std::vector<std::pair<UPoly, unsigned>> out;
    squarefree_into(make_monic(a), 1, out);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
    return out;
}

std::vector<std::pair<unsigned, UPoly>> distinct_degree_factorization(const UPoly& a) {
    const auto& F = a.field();
    std::vector<std::pair<unsigned, UPoly>> out;
    UPoly f = make_monic(a);
    const UPoly x = UPoly::x(F);
    UPoly h = x % f;
    const BigInt q = F.q();
    for (unsigned i = 1; f.degree() >= 2 * static_cast<long>(i); ++i) {
        h = powmod(h, q, f);
        UPoly g = gcd(f, h - x);
        if (g.degree() > 0) {
            out.emplace_back(i, g);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(static_cast<unsigned>(f.degree()), f);
    return out;
}

bool is_irreducible(const UPoly& a) {
    if (a.degree() < 1) return false;
    const auto& F = a.field();
    const UPoly f = make_monic(a);
    const unsigned n = static_cast<unsigned>(f.degree());
    const UPoly x = UPoly::x(F);
    const BigInt q = F.q();
    auto x_pow_q_iter = [&](unsigned times) {
        UPoly h = x % f;
        for (unsigned i = 0; i < times; ++i) h = powmod(h, q, f);
        return h;
    };
    for (const auto& [ell, e] : factor_integer(BigInt(n))) {
        (void)e;
        unsigned sub = n / static_cast<unsigned>(ell.get_ui());
        if (gcd(f, x_pow_q_iter(sub) - x).degree() != 0) return false;
    }
    return ((x_pow_q_iter(n) - x) % f).is_zero();
}

bool is_primitive(const UPoly& g) {
    if (g.degree() < 1) throw std::invalid_argument("is_primitive: constant polynomial");
    if (!is_irreducible(g)) throw std::invalid_argument("is_primitive: polynomial is reducible");
    if (g[0] == 0) return false;
    const auto& F = g.field();
    const UPoly f = make_monic(g);
    const BigInt order = pow_big(BigInt(F.q()), static_cast<unsigned long>(f.degree())) - 1;
    const UPoly x = UPoly::x(F);
    for (const auto& [ell, e] : factor_integer(order)) {
        (void)e;
        if (powmod(x, order / ell, f).is_one()) return false;
    }
    return true;
}

}  // namespace coefcount
