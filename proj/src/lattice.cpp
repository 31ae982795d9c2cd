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

#include "coefcount/lattice.hpp"

#include <functional>
#include <stdexcept>

#include "coefcount/errors.hpp"
#include "coefcount/oracle.hpp"

namespace coefcount {

namespace {

using Weight = std::function<BigInt(std::size_t, std::uint64_t)>;  // (0-based position, k_i)

// sum over k in N^n with k_1+...+k_i <= bound[i] and total k of prod weight(i, k_i),
// by dynamic programming on the running prefix sum.
BigInt bounded_composition_sum(const std::vector<long long>& bound, long long total, const Weight& weight) {
    const std::size_t n = bound.size();
    if (n == 0) return total == 0 ? BigInt(1) : BigInt(0);
    if (total < 0) return 0;
    std::vector<BigInt> dp(static_cast<std::size_t>(total) + 1, 0);
    dp[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<BigInt> next(dp.size(), 0);
        const long long cap = std::min(bound[i], total);
        for (long long s = 0; s <= cap; ++s) {
            if (dp[static_cast<std::size_t>(s)] == 0) continue;
            for (long long k = 0; s + k <= cap; ++k) {
                BigInt w = weight(i, static_cast<std::uint64_t>(k));
                if (w != 0) next[static_cast<std::size_t>(s + k)] += dp[static_cast<std::size_t>(s)] * w;
            }
        }
        dp = std::move(next);
    }
    return dp[static_cast<std::size_t>(total)];
}

BigInt draconian_sum(std::size_t n, const Weight& weight) {
    std::vector<long long> bound(n);
    for (std::size_t i = 0; i < n; ++i) bound[i] = static_cast<long long>(i + 1);
    return bounded_composition_sum(bound, static_cast<long long>(n), weight);
}

void enumerate_bounded(const std::vector<long long>& bound, long long total, std::uint64_t cap,
                       std::vector<Composition>& out) {
    Composition current;
    std::function<void(std::size_t, long long)> rec = [&](std::size_t i, long long s) {
        if (i == bound.size()) {
            if (s == total) {
                if (out.size() >= cap) throw ResourceLimitError("enumeration exceeds the cap");
                out.push_back(current);
            }
            return;
        }
        const long long hi = std::min(bound[i], total);
        for (long long k = 0; s + k <= hi; ++k) {
            current.push_back(static_cast<std::uint64_t>(k));
            rec(i + 1, s + k);
            current.pop_back();
        }
    };
    rec(0, 0);
}

// Points y in Z^n with y_i >= lower and y_1 + ... + y_i <= bound[i] (strict when asked).
void visit_prefix_bounded(const std::vector<long long>& bound, long long lower, bool strict, std::uint64_t cap,
                          const std::function<void(const std::vector<long long>&)>& visit) {
    std::vector<long long> y;
    std::uint64_t visited = 0;
    std::function<void(std::size_t, long long)> rec = [&](std::size_t i, long long s) {
        if (i == bound.size()) {
            if (++visited > cap) throw ResourceLimitError("lattice point enumeration exceeds the cap");
            visit(y);
            return;
        }
        const long long hi = strict ? bound[i] - 1 : bound[i];
        for (long long v = lower; s + v <= hi; ++v) {
            y.push_back(v);
            rec(i + 1, s + v);
            y.pop_back();
        }
    };
    rec(0, 0);
}

std::vector<long long> ps_bounds(const std::vector<std::uint64_t>& t) {
    const std::size_t n = t.size();
    std::vector<long long> bound(n);
    long long acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += static_cast<long long>(t[n - 1 - i]);
        bound[i] = acc;
    }
    return bound;
}

BigInt binom_ll(long long a, long long b) { return binomial(a, b); }

IntPoly prefix_sum_poly(std::size_t nvars, std::size_t len) {
    IntPoly p(IntegerRing{}, nvars);
    for (std::size_t i = 0; i < len; ++i) {
        Monomial m(nvars, 0);
        m[i] = 1;
        p.add_term(m, 1);
    }
    return p;
}

}  // namespace

std::vector<Composition> enum_draconian(unsigned n, unsigned cap) {
    if (n > cap) throw ResourceLimitError("enum_draconian: n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    std::vector<long long> bound(n);
    for (unsigned i = 0; i < n; ++i) bound[i] = i + 1;
    std::vector<Composition> out;
    enumerate_bounded(bound, n, ~std::uint64_t{0}, out);
    return out;
}

std::vector<Composition> enum_shifted_draconian(unsigned n, unsigned t, std::uint64_t cap) {
    if (n < 1 || t < 1) throw std::invalid_argument("enum_shifted_draconian needs n, t >= 1");
    std::vector<long long> bound(n);
    for (unsigned j = 0; j < n; ++j) bound[j] = static_cast<long long>(t) * (j + 1) - 1;
    std::vector<Composition> out;
    enumerate_bounded(bound, static_cast<long long>(t) * n - 1, cap, out);
    return out;
}

void require_partition(const Partition& lambda) {
    for (std::size_t i = 1; i < lambda.size(); ++i)
        if (lambda[i] > lambda[i - 1]) throw std::invalid_argument("parts must be weakly decreasing");
}

BigInt omega_count(const Partition& lambda) {
    require_partition(lambda);
    const std::size_t n = lambda.size();
    return draconian_sum(n, [&](std::size_t i, std::uint64_t k) {
        long long next = i + 1 < n ? static_cast<long long>(lambda[i + 1]) : 0;
        return multichoose(static_cast<long long>(lambda[i]) - next, static_cast<long long>(k));
    });
}

std::vector<IntPoly> omega_factors(const Partition& lambda) {
    require_partition(lambda);
    const std::size_t nvars = lambda.empty() ? 1 : std::max<std::size_t>(1, lambda[0]);
    std::vector<IntPoly> out;
    for (auto part : lambda) out.push_back(prefix_sum_poly(nvars, part));
    return out;
}

bool omega_recurrence_check(const Partition& lambda, std::size_t i) {
    require_partition(lambda);
    if (i < 1 || i > lambda.size()) throw std::invalid_argument("index out of range");
    if (i > 1 && lambda[i - 2] < lambda[i - 1] + 1)
        throw std::invalid_argument("incrementing part " + std::to_string(i) + " breaks monotonicity");
    Partition bumped = lambda;
    ++bumped[i - 1];
    Partition head;
    for (std::size_t j = 0; j + 1 < i; ++j) head.push_back(lambda[j] - lambda[i - 1]);
    head.push_back(1);
    Partition tail(lambda.begin() + static_cast<std::ptrdiff_t>(i), lambda.end());
    return omega_count(bumped) == omega_count(lambda) + omega_count(head) * omega_count(tail);
}

BigInt catalan_inversion(unsigned n) {
    if (n < 1) throw std::invalid_argument("catalan_inversion needs n >= 1");
    BigInt sum = 0;
    for (unsigned j = 1; j <= n; ++j) {
        BigInt term = binom_ll(static_cast<long long>(n) + 2 - j, j) * catalan(n - j);
        if (j % 2 == 1) sum += term;
        else sum -= term;
    }
    return sum;
}

BigInt ps_lattice_points_direct(const std::vector<std::uint64_t>& t, std::uint64_t cap) {
    BigInt count = 0;
    visit_prefix_bounded(ps_bounds(t), 0, false, cap, [&](const std::vector<long long>&) { ++count; });
    return count;
}

BigInt ps_lattice_points_formula(const std::vector<std::uint64_t>& t) {
    const std::size_t n = t.size();
    return draconian_sum(n, [&](std::size_t i, std::uint64_t k) {
        long long a = static_cast<long long>(t[i]) + (i + 1 == n ? 1 : 0);
        return multichoose(a, static_cast<long long>(k));
    });
}

BigInt ps_staircase_closed(unsigned n, std::uint64_t t) {
    if (t < 1) throw std::invalid_argument("needs t >= 1");
    long long top = static_cast<long long>((t + 1) * (n + 1)) - 2;
    return binom_ll(top, n) / (n + 1);
}

BigInt ps_staircase_literal(unsigned n, std::uint64_t t) {
    if (n < 1 || t < 1) throw std::invalid_argument("needs n, t >= 1");
    long long top = static_cast<long long>((t + 1) * n) - 2;
    BigInt b = binom_ll(top, n - 1);
    if (b % n != 0) throw std::logic_error("closed form is not integral");
    return b / n;
}

Partition shifted_path_partition(unsigned n, unsigned s, unsigned t) {
    Partition lambda(t - 1, static_cast<std::uint64_t>(s) * n);
    for (unsigned j = 1; j < n; ++j)
        for (unsigned r = 0; r < t; ++r) lambda.push_back(static_cast<std::uint64_t>(s) * (n - j));
    return lambda;
}

BigInt shifted_path_count(unsigned n, unsigned s, unsigned t, PathMode mode) {
    if (n < 1 || s < 1 || t < 1) throw std::invalid_argument("shifted_path_count needs n, s, t >= 1");
    switch (mode) {
        case PathMode::closed: {
            BigInt b = binom_ll(static_cast<long long>(s + t) * n - 2, static_cast<long long>(s) * n - 1);
            return b / n;
        }
        case PathMode::closed_literal: {
            BigInt b = binom_ll(static_cast<long long>(s + t) * n - 2, n - 1);
            return b / n;
        }
        case PathMode::lsum: {
            std::vector<long long> bound(n);
            for (unsigned j = 0; j < n; ++j) bound[j] = static_cast<long long>(t) * (j + 1) - 1;
            return bounded_composition_sum(bound, static_cast<long long>(t) * n - 1, [&](std::size_t, std::uint64_t k) {
                return binom_ll(static_cast<long long>(k + s) - 1, static_cast<long long>(k));
            });
        }
        case PathMode::ksum:
            return omega_count(shifted_path_partition(n, s, t));
        case PathMode::direct: {
            // ways[y] at column x; height at column x is at most (floor(x/s)+1) t - 1.
            const std::size_t width = static_cast<std::size_t>(s) * n;
            const std::size_t top = static_cast<std::size_t>(t) * n - 1;
            auto height = [&](std::size_t x) { return std::min(top, (x / s + 1) * t - 1); };
            std::vector<BigInt> ways(top + 1, 0);
            for (std::size_t y = 0; y <= height(0); ++y) ways[y] = 1;
            for (std::size_t x = 1; x < width; ++x) {
                std::vector<BigInt> next(top + 1, 0);
                BigInt run = 0;
                for (std::size_t y = 0; y <= height(x); ++y) {
                    run += ways[y];
                    next[y] = run;
                }
                ways = std::move(next);
            }
            return ways[top];
        }
    }
    throw std::logic_error("unknown path mode");
}

BigInt partition_sum_t1(unsigned n, unsigned s, bool literal) {
    if (n < 1 || s < 1) throw std::invalid_argument("partition_sum_t1 needs n, s >= 1");
    const unsigned total = n - 1;
    const unsigned top = literal ? n + 1 : n;
    BigInt sum = 0;
    std::vector<unsigned> mult(total + 1, 0);
    // Enumerate partitions of `total` by multiplicities of the part sizes.
    std::function<void(unsigned, unsigned)> rec = [&](unsigned part, unsigned remaining) {
        if (remaining == 0) {
            unsigned l = 0;
            for (unsigned i = 1; i <= total; ++i) l += mult[i];
            BigInt term = binomial(top, l);
            BigInt multinom = 1;
            unsigned placed = 0;
            for (unsigned i = 1; i <= total; ++i) {
                placed += mult[i];
                multinom *= binomial(placed, mult[i]);
                term *= pow_big(binomial(i + s - 1, i), mult[i]);
            }
            sum += term * multinom;
            return;
        }
        if (part == 0) return;
        for (unsigned c = 0; c * part <= remaining; ++c) {
            mult[part] = c;
            rec(part - 1, remaining - c * part);
        }
        mult[part] = 0;
    };
    if (total == 0) return binomial(top, 0);
    rec(total, total);
    return sum;
}

IdentityValue noncrossing_identity(const std::vector<std::uint64_t>& m) {
    const std::size_t n = m.size();
    IdentityValue out;
    out.lhs = draconian_sum(n, [&](std::size_t i, std::uint64_t k) {
        long long top = static_cast<long long>(m[i]) + (i + 1 == n ? 0 : 1);
        return binom_ll(top, static_cast<long long>(k));
    });
    out.rhs = draconian_sum(n, [&](std::size_t i, std::uint64_t k) {
        return binom_ll(static_cast<long long>(m[i] + k) - 1, static_cast<long long>(k));
    });
    return out;
}

EhrhartCheck ehrhart_spot_check(const std::vector<std::uint64_t>& m) {
    const std::size_t n = m.size();
    EhrhartCheck out;
    out.interior = 0;
    out.shifted = 0;
    auto bound = ps_bounds(m);
    visit_prefix_bounded(bound, 1, true, kEnumerationCap, [&](const std::vector<long long>&) { ++out.interior; });
    std::vector<long long> shifted(n);
    long long acc = -1;
    for (std::size_t i = 0; i < n; ++i) {
        acc += static_cast<long long>(m[n - 1 - i]) - 1;
        shifted[i] = acc;
    }
    bool empty = false;
    for (auto b : shifted) empty = empty || b < 0;
    if (!empty)
        visit_prefix_bounded(shifted, 0, false, kEnumerationCap, [&](const std::vector<long long>&) { ++out.shifted; });
    out.reciprocity = draconian_sum(n, [&](std::size_t i, std::uint64_t k) {
        long long top = static_cast<long long>(m[i]) - (i + 1 == n ? 1 : 0);
        return binom_ll(top, static_cast<long long>(k));
    });
    return out;
}

BigInt ex433a_formula(unsigned n, unsigned m) {
    if (n < 1 || m > n) throw std::invalid_argument("ex433a needs n >= m >= 0 and n >= 1");
    const long long top = 2LL * n + m;
    BigInt b = binom_ll(top, static_cast<long long>(n) + m + 1) * (m + 2);
    return b / BigInt(std::to_string(top));
}

std::vector<IntPoly> ex433a_factors(unsigned n, unsigned m) {
    const std::size_t nvars = n + m;
    std::vector<IntPoly> out;
    for (unsigned j = 1; j < n; ++j) out.push_back(prefix_sum_poly(nvars, j + m + 1));
    return out;
}

BigInt ex433b_formula(unsigned n, unsigned k) {
    if (n < 1 || k < 1) throw std::invalid_argument("ex433b needs n, k >= 1");
    return binom_ll(static_cast<long long>(k + 1) * n, n) / (static_cast<unsigned long>(k) * n + 1);
}

std::vector<IntPoly> ex433b_factors(unsigned n, unsigned k) {
    std::vector<IntPoly> out;
    for (unsigned j = 1; j < n; ++j)
        for (unsigned r = 0; r < k; ++r) out.push_back(prefix_sum_poly(n, j + 1));
    return out;
}

std::vector<IntPoly> ex433c_factors(unsigned n, unsigned k) {
    std::vector<IntPoly> out;
    for (unsigned j = 1; j < n; ++j)
        for (unsigned r = 0; r < j + k; ++r) out.push_back(prefix_sum_poly(n, j + 1));
    return out;
}

std::vector<std::vector<Rational>> ex433c_matrix(unsigned size) {
    auto entry = [](long long i, long long j, long long shift) {
        long long top = binom_ll(i, 2).get_si() - binom_ll(j, 2).get_si() + i - j + shift;
        return Rational(binom_ll(top, i - j));
    };
    std::vector<std::vector<Rational>> M(size, std::vector<Rational>(size, 0)), N = M, Ninv = M, R = M;
    for (unsigned i = 0; i < size; ++i)
        for (unsigned j = 0; j <= i; ++j) {
            M[i][j] = entry(i, j, 3);
            N[i][j] = entry(i, j, 2);
        }
    for (unsigned i = 0; i < size; ++i)
        if (N[i][i] == 0) throw std::logic_error("singular truncation");
    // Forward substitution, column by column.
    for (unsigned c = 0; c < size; ++c)
        for (unsigned i = c; i < size; ++i) {
            Rational acc = i == c ? 1 : 0;
            for (unsigned j = c; j < i; ++j) acc -= N[i][j] * Ninv[j][c];
            Ninv[i][c] = acc / N[i][i];
        }
    for (unsigned i = 0; i < size; ++i)
        for (unsigned j = 0; j <= i; ++j) {
            Rational acc = 0;
            for (unsigned l = j; l <= i; ++l) acc += M[i][l] * Ninv[l][j];
            R[i][j] = acc;
        }
    return R;
}

BigInt ex433c_polytope_sum(unsigned n, unsigned k) {
    if (n < 1) throw std::invalid_argument("ex433c needs n >= 1");
    if (n == 1) return 1;
    const unsigned dim = n - 1;
    std::vector<std::uint64_t> t(dim);
    for (unsigned i = 1; i <= dim; ++i) t[i - 1] = k + n - i;
    if (t[0] == 0) return 0;
    t[0] -= 1;
    BigInt sum = 0;
    visit_prefix_bounded(ps_bounds(t), 0, false, kEnumerationCap,
                         [&](const std::vector<long long>& y) { sum += BigInt(std::to_string(1 + y.back())); });
    return sum;
}

std::vector<GridRow> ex433c_grid(unsigned n_max, unsigned k_max) {
    auto R = ex433c_matrix(n_max + k_max + 1);
    auto at = [&](long long i, long long j) {
        if (i < 0 || j < 0 || j > i) return Rational(0);
        return R[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    };
    std::vector<GridRow> rows;
    for (unsigned n = 1; n <= n_max; ++n)
        for (unsigned k = 0; k <= k_max; ++k) {
            GridRow row;
            row.n = n;
            row.k = k;
            row.oracle = BigInt(std::to_string(brute_product_census(ex433c_factors(n, k)).distinct));
            row.polytope = ex433c_polytope_sum(n, k);
            row.r_same = at(n, k);
            row.r_shifted = at(static_cast<long long>(n) + k, k);
            rows.push_back(row);
        }
    return rows;
}

}  // namespace coefcount
