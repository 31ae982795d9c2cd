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

#include "coefcount/oracle.hpp"

#include <algorithm>

namespace coefcount {

namespace {

std::uint64_t checked_box(const std::vector<std::uint64_t>& extent, std::uint64_t budget) {
    unsigned __int128 total = 1;
    for (auto e : extent) {
        total *= e;
        if (total > budget) throw ResourceLimitError("oracle grid exceeds the budget of " + std::to_string(budget));
    }
    return static_cast<std::uint64_t>(total);
}

// Calls fn(linear index) for every cell of the sub-box [0, extent) in a grid with the given strides.
template <class Fn>
void for_each_cell(const std::vector<std::uint64_t>& extent, const std::vector<std::uint64_t>& stride, Fn&& fn) {
    const std::size_t k = extent.size();
    for (auto e : extent)
        if (e == 0) return;
    std::vector<std::uint64_t> idx(k, 0);
    std::uint64_t linear = 0;
    while (true) {
        fn(linear);
        std::size_t i = 0;
        while (i < k) {
            if (++idx[i] < extent[i]) {
                linear += stride[i];
                break;
            }
            linear -= (extent[i] - 1) * stride[i];
            idx[i] = 0;
            ++i;
        }
        if (i == k) return;
    }
}

}  // namespace

std::vector<std::map<Residue, std::uint64_t>> brute_power_sweep(const FieldPoly& f, std::uint64_t n_max,
                                                                std::uint64_t budget) {
    const auto& F = f.ring().field;
    const std::size_t k = f.nvars();
    std::vector<std::map<Residue, std::uint64_t>> out;
    out.push_back({{Residue(1), 1}});
    if (n_max == 0) return out;
    if (f.is_zero()) {
        out.resize(n_max + 1);
        return out;
    }
    auto deg = var_degrees(f);
    std::vector<std::uint64_t> full(k), stride(k);
    for (std::size_t i = 0; i < k; ++i) full[i] = n_max * deg[i] + 1;
    const std::uint64_t cells = checked_box(full, budget);
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < k; ++i) {
        stride[i] = s;
        s *= full[i];
    }
    std::vector<std::pair<std::uint64_t, Residue>> fterms;
    for (const auto& [m, c] : f.terms()) {
        std::uint64_t off = 0;
        for (std::size_t i = 0; i < k; ++i) off += m[i] * stride[i];
        fterms.emplace_back(off, c);
    }

    std::vector<std::uint16_t> cur(cells, 0), next(cells, 0);
    cur[0] = 1;
    std::vector<std::uint64_t> extent(k, 1);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        std::vector<std::uint64_t> next_extent(k);
        for (std::size_t i = 0; i < k; ++i) next_extent[i] = n * deg[i] + 1;
        for_each_cell(next_extent, stride, [&](std::uint64_t c) { next[c] = 0; });
        for_each_cell(extent, stride, [&](std::uint64_t c) {
            Residue v = cur[c];
            if (v == 0) return;
            for (const auto& [off, fc] : fterms) next[c + off] = static_cast<std::uint16_t>(F.add(next[c + off], F.mul(v, fc)));
        });
        std::map<Residue, std::uint64_t> census;
        for_each_cell(next_extent, stride, [&](std::uint64_t c) {
            if (next[c] != 0) ++census[next[c]];
        });
        out.push_back(std::move(census));
        std::swap(cur, next);
        extent = next_extent;
    }
    return out;
}

BigInt brute_power_census(const FieldPoly& f, std::uint64_t n, Residue alpha, std::uint64_t budget) {
    auto sweep = brute_power_sweep(f, n, budget);
    auto it = sweep[n].find(alpha);
    return it == sweep[n].end() ? BigInt(0) : BigInt(static_cast<unsigned long>(it->second));
}

namespace {

template <class Ring, class Acc, class Convert, class Add, class Mul>
std::vector<std::pair<std::uint64_t, Acc>> packed_product(const std::vector<MultiPoly<Ring>>& factors,
                                                          std::uint64_t budget, Convert convert, Add add, Mul mul) {
    const std::size_t k = factors.front().nvars();
    std::vector<std::uint64_t> radix(k, 1);
    for (const auto& f : factors) {
        if (f.nvars() != k) throw std::invalid_argument("factor arity mismatch");
        if (f.is_zero()) return {};
        auto d = var_degrees(f);
        for (std::size_t i = 0; i < k; ++i) radix[i] += d[i];
    }
    std::vector<std::uint64_t> stride(k);
    unsigned __int128 s = 1;
    for (std::size_t i = 0; i < k; ++i) {
        stride[i] = static_cast<std::uint64_t>(s);
        s *= radix[i];
        if (s > ~0ULL) throw ResourceLimitError("monomial key space exceeds 64 bits");
    }
    std::vector<std::pair<std::uint64_t, Acc>> cur{{0, Acc(1)}};
    std::vector<std::pair<std::uint64_t, Acc>> scratch;
    for (const auto& f : factors) {
        std::vector<std::pair<std::uint64_t, Acc>> fterms;
        for (const auto& [m, c] : f.terms()) {
            std::uint64_t key = 0;
            for (std::size_t i = 0; i < k; ++i) key += m[i] * stride[i];
            fterms.emplace_back(key, convert(c));
        }
        if (static_cast<unsigned __int128>(cur.size()) * fterms.size() > budget)
            throw ResourceLimitError("oracle product exceeds the budget of " + std::to_string(budget));
        scratch.clear();
        scratch.reserve(cur.size() * fterms.size());
        for (const auto& [ka, ca] : cur)
            for (const auto& [kb, cb] : fterms) scratch.emplace_back(ka + kb, mul(ca, cb));
        std::sort(scratch.begin(), scratch.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        cur.clear();
        for (const auto& [key, c] : scratch) {
            if (!cur.empty() && cur.back().first == key) cur.back().second = add(cur.back().second, c);
            else cur.emplace_back(key, c);
        }
        cur.erase(std::remove_if(cur.begin(), cur.end(), [](const auto& e) { return e.second == Acc(0); }), cur.end());
    }
    return cur;
}

}  // namespace

ProductCensus<Residue> brute_product_census(const std::vector<FieldPoly>& factors, std::uint64_t budget) {
    ProductCensus<Residue> out;
    if (factors.empty()) {
        out.distinct = 1;
        out.values[1] = 1;
        return out;
    }
    const FieldSpec F = factors.front().ring().field;
    for (const auto& f : factors)
        if (!(f.ring().field == F)) throw std::invalid_argument("factor field mismatch");
    auto terms = packed_product<FieldRing, Residue>(
        factors, budget, [](Residue c) { return c; }, [&](Residue a, Residue b) { return F.add(a, b); },
        [&](Residue a, Residue b) { return F.mul(a, b); });
    out.distinct = terms.size();
    for (const auto& [key, c] : terms) ++out.values[c];
    return out;
}

ProductCensus<BigInt> brute_product_census(const std::vector<IntPoly>& factors, std::uint64_t budget) {
    ProductCensus<BigInt> out;
    if (factors.empty()) {
        out.distinct = 1;
        out.values[1] = 1;
        return out;
    }
    auto add = [](long long a, long long b) {
        long long r;
        if (__builtin_add_overflow(a, b, &r)) throw ResourceLimitError("oracle coefficient overflow");
        return r;
    };
    auto mul = [](long long a, long long b) {
        long long r;
        if (__builtin_mul_overflow(a, b, &r)) throw ResourceLimitError("oracle coefficient overflow");
        return r;
    };
    for (const auto& f : factors)
        for (const auto& [m, c] : f.terms())
            if (!c.fits_slong_p()) throw ResourceLimitError("oracle coefficient overflow");
    // Integer coefficients are narrowed to 64 bits with overflow checks.
    auto terms = packed_product<IntegerRing, long long>(
        factors, budget, [](const BigInt& c) { return static_cast<long long>(c.get_si()); }, add, mul);
    out.distinct = terms.size();
    for (const auto& [key, c] : terms) ++out.values[BigInt(static_cast<long>(c))];
    return out;
}

}  // namespace coefcount
