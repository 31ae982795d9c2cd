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

#include "coefcount/closed_forms.hpp"

#include <stdexcept>

#include "coefcount/errors.hpp"

namespace coefcount {

namespace {

void require_prime(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

Residue small_binomial_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    if (b > a) return 0;
    BigInt c = binomial(static_cast<long long>(a), static_cast<long long>(b)) % BigInt(p);
    return static_cast<Residue>(c.get_ui());
}

}  // namespace

Residue lucas_binomial(const BigInt& n, const BigInt& k, std::uint64_t p) {
    require_prime(p);
    if (n < 0 || k < 0) throw std::invalid_argument("lucas_binomial needs n, k >= 0");
    auto a = digits_lsb(n, p);
    auto b = digits_lsb(k, p);
    if (b.size() > a.size()) return 0;
    std::uint64_t acc = 1;
    for (std::size_t i = 0; i < b.size(); ++i) acc = acc * small_binomial_mod(a[i], b[i], p) % p;
    return static_cast<Residue>(acc);
}

RowCensus binomial_row_census(const BigInt& n, std::uint64_t p) {
    require_prime(p);
    if (n < 0) throw std::invalid_argument("binomial_row_census needs n >= 0");
    // dp[v] = number of digit prefixes whose binomial product is v mod p.
    std::vector<BigInt> dp(p, 0);
    dp[1] = 1;
    RowCensus out;
    out.total = 1;
    for (auto a : digits_lsb(n, p)) {
        std::vector<BigInt> next(p, 0);
        for (std::uint64_t b = 0; b <= a; ++b) {
            std::uint64_t c = small_binomial_mod(a, b, p);
            for (std::uint64_t v = 1; v < p; ++v)
                if (dp[v] != 0) next[v * c % p] += dp[v];
        }
        dp = std::move(next);
        out.total *= a + 1;
    }
    for (std::uint64_t v = 1; v < p; ++v)
        if (dp[v] != 0) out.counts[static_cast<Residue>(v)] = dp[v];
    return out;
}

Residue prop23_coeff(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
    require_prime(p);
    if (n < 1) throw std::invalid_argument("prop23 needs n >= 1");
    const std::uint64_t top = (p - 1) * n;
    if (k > top) throw std::invalid_argument("k out of range [0, (p-1)n]");
    Residue c = lucas_binomial(BigInt(std::to_string(top)), BigInt(std::to_string(k)), p);
    return (k % 2 == 1 && c != 0) ? static_cast<Residue>(p - c) : c;
}

BigInt prop23_count(std::uint64_t n, std::uint64_t p) {
    require_prime(p);
    if (n < 1) throw std::invalid_argument("prop23 needs n >= 1");
    BigInt out = 1;
    for (auto b : digits_lsb((p - 1) * n, p)) out *= b + 1;
    return out;
}

Split3 example24_split(std::uint64_t n) {
    BigInt total = 1;
    bool has_one = false;
    for (auto b : digits_lsb(2 * n, 3)) {
        total *= b + 1;
        has_one = has_one || b == 1;
    }
    Split3 out;
    if (has_one) {
        out.n1 = total / 2;
        out.n2 = total / 2;
    } else {
        out.n1 = total;
        out.n2 = 0;
    }
    out.n0 = BigInt(std::to_string(2 * n + 1)) - out.n1 - out.n2;
    return out;
}

std::vector<unsigned> run_lengths(const BigInt& n) {
    if (n < 0) throw std::invalid_argument("run_lengths needs n >= 0");
    std::vector<unsigned> runs;
    unsigned current = 0;
    for (auto bit : digits_lsb(n, 2)) {
        if (bit == 1) {
            ++current;
        } else if (current > 0) {
            runs.push_back(current);
            current = 0;
        }
    }
    if (current > 0) runs.push_back(current);
    return runs;
}

BigInt omega_run_factor(unsigned k) {
    BigInt top = pow_big(2, k + 2);
    top += (k % 2 == 1) ? 1 : -1;
    return top / 3;
}

BigInt omega_runs(const BigInt& n) {
    BigInt out = 1;
    for (auto k : run_lengths(n)) out *= omega_run_factor(k);
    return out;
}

BigInt family22_count(std::uint64_t k, std::uint64_t n) {
    if (k < 1) throw std::invalid_argument("family22 needs k >= 1");
    BigInt kk(std::to_string(k));
    return kk * pow_big(kk + 1, n) - (kk - 1) * pow_big(kk, n);
}

Rational omega_average(unsigned n) {
    if (n > 40) throw ResourceLimitError("omega_average is limited to n <= 40");
    BigInt sum = 0;
    for (std::uint64_t j = 0; j < (std::uint64_t{1} << n); ++j) sum += omega_runs(BigInt(std::to_string(j)));
    Rational out(sum, pow_big(2, n));
    out.canonicalize();
    return out;
}

LambdaCheck lambda_functional_check(std::size_t order) {
    LambdaCheck out;
    for (std::size_t m = 0; m <= order; ++m) {
        BigInt lhs = omega_runs(BigInt(std::to_string(m)));
        BigInt rhs = m % 2 == 0 ? omega_runs(BigInt(std::to_string(m / 2)))
                                : BigInt(2 * omega_runs(BigInt(std::to_string((m - 1) / 2))));
        if (lhs != rhs) {
            out.holds = false;
            out.first_mismatch = m;
            out.lhs = lhs;
            out.rhs = rhs;
            return out;
        }
    }
    return out;
}

}  // namespace coefcount
