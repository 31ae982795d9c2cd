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

#include "coefcount/traveling.hpp"

#include <stdexcept>

#include "coefcount/oracle.hpp"

namespace coefcount {

namespace {

IntPoly linear_form(std::size_t nvars, const std::vector<std::pair<std::size_t, long>>& terms, long constant = 0) {
    IntPoly p(IntegerRing{}, nvars);
    if (constant != 0) p.add_term(Monomial(nvars, 0), constant);
    for (const auto& [var, c] : terms) {
        Monomial m(nvars, 0);
        m.at(var) = 1;
        p.add_term(m, c);
    }
    return p;
}

// Range sum x_{lo} + ... + x_{hi} with 1-based variable indices.
IntPoly range_sum(std::size_t nvars, std::size_t lo, std::size_t hi) {
    std::vector<std::pair<std::size_t, long>> terms;
    for (std::size_t v = lo; v <= hi; ++v) terms.emplace_back(v - 1, 1);
    return linear_form(nvars, terms);
}

// Binomial convention for the connectivity matrix.
BigInt conn_binomial(long long a, long long b) {
    if (a < 0) return a == b ? 1 : 0;
    if (b < 0) return 0;
    return binomial(a, b);
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size();
    IntMatrix out(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

ZPoly denominator_513(unsigned k, unsigned m) {
    ZPoly den;
    for (unsigned i = 0; i <= k + 1; ++i) {
        BigInt c = binomial(1 + static_cast<long long>(k + 1 - i) * m, i);
        den.push_back(i % 2 == 0 ? c : BigInt(-c));
    }
    return zpoly_trim(den);
}

}  // namespace

RationalGF h_genfun(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    ZPoly one_minus_zp(p + 1, 0);
    one_minus_zp[0] = 1;
    one_minus_zp[p] = -1;
    ZPoly den = zpoly_add(ZPoly{1, -2, 1}, zpoly_mul(ZPoly{0, -1}, one_minus_zp));
    return RationalGF::make(one_minus_zp, den);
}

std::vector<BigInt> h_seq(std::uint64_t p, std::size_t terms) { return genfun_expand(h_genfun(p), terms); }

std::vector<FieldPoly> h_factors(unsigned n, std::uint64_t p) {
    FieldSpec F = FieldSpec::prime(p);
    const std::size_t nvars = n + 1;
    std::vector<FieldPoly> out;
    for (unsigned i = 1; i <= n; ++i)
        out.push_back(to_field(linear_form(nvars, {{i - 1, 1}, {i, 1}}, 1), F));
    return out;
}

BigInt cor33_count(std::uint64_t p, unsigned n, std::uint64_t budget) {
    if (!is_prime(p) || p < 3) throw std::invalid_argument("cor33 needs an odd prime");
    FieldSpec F = FieldSpec::prime(p);
    FieldPoly base(FieldRing{F}, 1);
    base.add_term({0}, 1);
    base.add_term({1}, 1);
    base.add_term({p}, 1);
    BigInt e = (pow_big(BigInt(std::to_string(p)), n) - 1) / BigInt(std::to_string(p - 1));
    return BigInt(std::to_string(nonzero_count(poly_pow(base, e.get_ui(), budget))));
}

bool cor33_check(std::uint64_t p, unsigned n_max) {
    auto series = h_seq(p, n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n)
        if (cor33_count(p, n) != series[n]) return false;
    return true;
}

ZPoly traveling_denominator(unsigned j, unsigned k) {
    if (j < 1 || k < 1) throw std::invalid_argument("traveling needs j, k >= 1");
    ZPoly den;
    for (long long h = 0;; ++h) {
        long long top = static_cast<long long>(k) - static_cast<long long>(j) * (h - 1);
        if (top < 0) break;
        BigInt c = binomial(top, h);
        den.push_back(h % 2 == 0 ? c : BigInt(-c));
    }
    return zpoly_trim(den);
}

RationalGF traveling_genfun(unsigned j, unsigned k) { return RationalGF::make({1}, traveling_denominator(j, k)); }

std::vector<BigInt> traveling_seq(unsigned j, unsigned k, std::size_t terms) {
    ZPoly den = traveling_denominator(j, k);
    std::vector<BigInt> f(terms, 0);
    for (std::size_t n = 0; n < terms; ++n) {
        if (n == 0) {
            f[0] = 1;
            continue;
        }
        BigInt acc = 0;
        for (std::size_t h = 1; h < den.size() && h <= n; ++h) acc -= den[h] * f[n - h];
        f[n] = acc;
    }
    return f;
}

std::vector<IntPoly> traveling_factors(unsigned j, unsigned k, unsigned n) {
    const std::size_t nvars = n == 0 ? 1 : static_cast<std::size_t>(n - 1) * j + k;
    std::vector<IntPoly> out;
    for (unsigned i = 1; i <= n; ++i) {
        std::size_t lo = static_cast<std::size_t>(i - 1) * j + 1;
        out.push_back(range_sum(nvars, lo, lo + k - 1));
    }
    return out;
}

BigInt g_count(unsigned n) {
    BigInt f = fibonacci(n + 2);
    return f * f - (n % 2);
}

RationalGF g_genfun() { return RationalGF::make({1}, zpoly_mul({1, 0, -1}, {1, -3, 1})); }

std::vector<IntPoly> g_factors(unsigned n) {
    const std::size_t nvars = n + 4;
    std::vector<IntPoly> out;
    for (unsigned i = 1; i <= n; ++i) out.push_back(linear_form(nvars, {{i - 1, 1}, {i + 1, 1}, {i + 3, 1}}));
    return out;
}

RationalGF b1_genfun() { return RationalGF::make({1, 1}, {1, -2, -1}); }

RationalGF b2_genfun() {
    RationalGF inner = RationalGF::make({0, 0, 1}, {1, 0, 1}) + RationalGF::make({1}, {1, -2, -1});
    return RationalGF::make({1}, {1, -1}) * inner;
}

std::vector<IntPoly> b_factors(unsigned n, unsigned t) {
    const std::size_t nvars = n + t;
    std::vector<IntPoly> out;
    for (unsigned i = 1; i <= n; ++i) out.push_back(linear_form(nvars, {{i - 1, -1}, {i - 1 + t, 1}}, 1));
    return out;
}

SignBalance b_sign_balance(unsigned n, unsigned t) {
    auto census = brute_product_census(b_factors(n, t));
    SignBalance out;
    for (const auto& [value, count] : census.values) {
        if (value == 1) out.plus += count;
        else if (value == -1) out.minus += count;
        else out.other += count;
    }
    return out;
}

IntMatrix connectivity_matrix(unsigned k, unsigned m) {
    IntMatrix A(k + 1, std::vector<BigInt>(k + 1, 0));
    const long long mm = m;
    for (long long i = 0; i <= k; ++i)
        for (long long j = 0; j <= k; ++j)
            A[i][j] = j == 0 ? conn_binomial(mm - 1 + i, mm - 1) : conn_binomial(mm + i - j, mm - 1);
    return A;
}

ZPoly theta_closed(unsigned k, unsigned m) {
    ZPoly out(k + 2, 0);
    for (unsigned tau = 0; tau <= k + 1; ++tau) {
        BigInt c = binomial(1 + static_cast<long long>(k + 1 - tau) * m, tau);
        out[k + 1 - tau] = tau % 2 == 0 ? c : BigInt(-c);
    }
    return zpoly_trim(out);
}

ZPoly theta_by_determinant(unsigned k, unsigned m) {
    IntMatrix A = connectivity_matrix(k, m);
    const std::size_t n = k + 1;
    if (n > 20) throw std::invalid_argument("matrix too large for subset expansion");
    auto entry = [&](std::size_t i, std::size_t j) {
        ZPoly e{-A[i][j]};
        if (i == j) e.push_back(1);
        return zpoly_trim(e);
    };
    // D[S] = determinant of rows S against the first |S| columns.
    std::vector<ZPoly> D(std::size_t{1} << n);
    D[0] = {1};
    for (std::size_t S = 0; S < D.size(); ++S) {
        if (D[S].empty()) continue;
        const std::size_t col = static_cast<std::size_t>(__builtin_popcountll(S));
        if (col == n) continue;
        for (std::size_t i = 0; i < n; ++i) {
            if (S & (std::size_t{1} << i)) continue;
            ZPoly e = entry(i, col);
            if (e.empty()) continue;
            // Sign from the rows already placed that lie below row i.
            std::size_t above = static_cast<std::size_t>(__builtin_popcountll(S >> (i + 1)));
            ZPoly term = zpoly_mul(D[S], e);
            if (above % 2 == 1) term = zpoly_scale(term, -1);
            std::size_t T = S | (std::size_t{1} << i);
            D[T] = zpoly_add(D[T], term);
        }
    }
    return D.back();
}

std::vector<BigInt> phi_values(unsigned k, unsigned m, std::size_t count) {
    IntMatrix A = connectivity_matrix(k, m);
    IntMatrix P(k + 1, std::vector<BigInt>(k + 1, 0));
    for (unsigned i = 0; i <= k; ++i) P[i][i] = 1;
    std::vector<BigInt> out;
    for (std::size_t xi = 0; xi < count; ++xi) {
        BigInt s = 0;
        for (unsigned i = 0; i <= k; ++i) s += P[i][0];
        out.push_back(s);
        P = mat_mul(A, P);
    }
    return out;
}

RationalGF v_genfun(unsigned k, unsigned m) {
    if (k < 1 || m < 1) throw std::invalid_argument("v_genfun needs k, m >= 1");
    ZPoly den = denominator_513(k, m);
    auto phi = phi_values(k, m, k);
    ZPoly num(k, 0);
    for (unsigned nu = 0; nu < k; ++nu)
        for (unsigned i = 0; i <= nu; ++i) {
            BigInt c = binomial(1 + static_cast<long long>(k + 1 - i) * m, i) * phi[nu - i];
            num[nu] += i % 2 == 0 ? c : BigInt(-c);
        }
    return RationalGF::make(num, den);
}

std::vector<IntPoly> v_factors(unsigned n, unsigned k, unsigned m) {
    const std::size_t nvars = n + k;
    std::vector<IntPoly> out;
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned r = 0; r < m; ++r) out.push_back(range_sum(nvars, i, i + k));
    return out;
}

RationalGF v_template(unsigned k, unsigned m) {
    auto C = [](long long a, long long b) { return binomial(a, b); };
    const long long M = m;
    switch (k) {
        case 2:
            return RationalGF::make({1, narayana(m, 2)}, {1, -C(2 * M + 1, 1), C(M + 1, 2)});
        case 3:
            return RationalGF::make({1, 2 * C(M, 2) + C(M + 1, 3), narayana(m, 3)},
                                    {1, -C(3 * M + 1, 1), C(2 * M + 1, 2), -C(M + 1, 3)});
        case 4: {
            BigInt a = 3 * C(M, 2) + 2 * C(M + 1, 3) + C(M + 2, 4);
            BigInt b = 10 * C(M, 3) + 23 * C(M, 4) + 10 * C(M, 5);
            return RationalGF::make({1, a, b, narayana(m, 4)},
                                    {1, -C(4 * M + 1, 1), C(3 * M + 1, 2), -C(2 * M + 1, 3), C(M + 1, 4)});
        }
        default:
            throw std::invalid_argument("templates exist for k = 2, 3, 4");
    }
}

BigInt j_count(unsigned n, unsigned k, unsigned m) {
    BigInt inner = BigInt(n) * k + binomial(n + 1, 2);
    return 1 + inner * m;
}

std::vector<IntPoly> j_factors(unsigned n, unsigned k, unsigned m) {
    std::vector<IntPoly> out;
    for (unsigned i = 1; i <= n; ++i) {
        IntPoly f(IntegerRing{}, 1);
        f.add_term({0}, 1);
        for (unsigned e = i; e <= i + k; ++e) f.add_term({e}, 1);
        for (unsigned r = 0; r < m; ++r) out.push_back(f);
    }
    return out;
}

std::vector<IntPoly> d_factors(unsigned n, unsigned k) {
    const std::size_t ny = n == 0 ? 0 : n - 1;
    const std::size_t nx = n + k;
    const std::size_t nvars = std::max<std::size_t>(1, ny + nx);
    std::vector<IntPoly> out;
    for (unsigned i = 1; i <= n; ++i) {
        std::vector<std::pair<std::size_t, long>> terms;
        for (std::size_t y = 1; y < i; ++y) terms.emplace_back(y - 1, 1);
        for (std::size_t x = i; x <= i + k; ++x) terms.emplace_back(ny + x - 1, 1);
        out.push_back(linear_form(nvars, terms));
    }
    return out;
}

BigInt d0_count(unsigned n) {
    BigInt sum = 0;
    for (unsigned j = 0; j <= n; ++j) sum += pow_big(2, j) * narayana(n, j);
    return sum;
}

BigInt schroeder(unsigned n) {
    if (n < 1) throw std::invalid_argument("schroeder needs n >= 1");
    BigInt sum = 0;
    for (unsigned j = 1; j <= n; ++j) sum += pow_big(2, j) * binomial(n, j) * binomial(n, j - 1);
    return sum / n;
}

std::vector<BigInt> nu_sequence(unsigned n_max) {
    std::vector<BigInt> nu(n_max + 1, 0);
    if (n_max >= 2) nu[2] = 1;
    for (unsigned n = 3; n <= n_max; ++n) {
        BigInt acc = 0;
        for (long long j = 1;; ++j) {
            long long top = static_cast<long long>(n) + 1 - 2 * j;
            if (top < 0 || j > static_cast<long long>(n)) break;
            BigInt term = binomial(top, j) * nu[n - j];
            acc += j % 2 == 1 ? term : BigInt(-term);
        }
        nu[n] = acc;
    }
    return nu;
}

std::vector<NuRow> nu_table(unsigned n_max) {
    auto nu = nu_sequence(n_max);
    std::vector<NuRow> rows;
    for (unsigned n = 3; n <= n_max; ++n) {
        NuRow row;
        row.n = n;
        row.gamma = BigInt(std::to_string(brute_product_census(d_factors(n - 2, 2)).distinct));
        row.nu = nu[n];
        row.half_matches = 2 * row.gamma == row.nu;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace coefcount
