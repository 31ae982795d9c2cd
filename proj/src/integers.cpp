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

#include "coefcount/integers.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace coefcount {

BigInt binomial(long long n, long long k) {
    if (k < 0) return 0;
    BigInt result;
    BigInt top = static_cast<long>(n);
    mpz_bin_ui(result.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
    return result;
}

BigInt multichoose(long long a, long long b) { return binomial(a + b - 1, b); }

BigInt catalan(unsigned n) { return binomial(2LL * n, n) / (n + 1); }

BigInt fibonacci(unsigned n) {
    BigInt result;
    mpz_fib_ui(result.get_mpz_t(), n);
    return result;
}

BigInt narayana(unsigned n, unsigned j) {
    if (j == 0) return n == 0 ? 1 : 0;
    return binomial(n, j - 1LL) * binomial(n - 1LL, j - 1LL) / j;
}

BigInt pow_big(const BigInt& base, unsigned long exponent) {
    BigInt result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
    return result;
}

std::vector<std::uint64_t> digits_lsb(std::uint64_t n, std::uint64_t base) {
    if (base < 2) throw std::invalid_argument("digits_lsb: base must be >= 2");
    std::vector<std::uint64_t> out;
    for (; n > 0; n /= base) out.push_back(n % base);
    return out;
}

std::vector<std::uint64_t> digits_lsb(const BigInt& n, std::uint64_t base) {
    if (base < 2) throw std::invalid_argument("digits_lsb: base must be >= 2");
    if (n < 0) throw std::invalid_argument("digits_lsb: negative value");
    std::vector<std::uint64_t> out;
    BigInt rest = n;
    BigInt b = static_cast<unsigned long>(base);
    while (rest > 0) {
        BigInt r = rest % b;
        out.push_back(r.get_ui());
        rest /= b;
    }
    return out;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    BigInt v = static_cast<unsigned long>(n);
    return mpz_probab_prime_p(v.get_mpz_t(), 40) != 0;
}

namespace {

bool probably_prime(const BigInt& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0; }

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
BigInt pollard_brent(const BigInt& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        auto step = [&](const BigInt& x) {
            BigInt y = x * x + c;
            return BigInt(y % n);
        };
        BigInt y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1;
        const unsigned long m = 128;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = step(y);
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = step(y);
                    BigInt diff = abs(x - y);
                    q = (q * diff) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            do {
                ys = step(ys);
                BigInt diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(const BigInt& n, std::map<BigInt, unsigned>& out) {
    if (n == 1) return;
    if (probably_prime(n)) {
        ++out[n];
        return;
    }
    BigInt d = pollard_brent(n);
    factor_into(d, out);
    factor_into(BigInt(n / d), out);
}

}  // namespace

std::vector<std::pair<BigInt, unsigned>> factor_integer(BigInt n) {
    if (n < 1) throw std::invalid_argument("factor_integer: argument must be positive");
    std::map<BigInt, unsigned> found;
    for (unsigned long p = 2; p < (1UL << 16); p += (p == 2 ? 1 : 2)) {
        if (BigInt(static_cast<unsigned long>(p)) * p > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++found[BigInt(p)];
            n /= p;
        }
    }
    factor_into(n, found);
    return {found.begin(), found.end()};
}

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
    Rational c = x;
    c.canonicalize();
    return c.get_str();
}

}  // namespace coefcount
