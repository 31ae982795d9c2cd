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

#ifndef COEFCOUNT_MPOLY_HPP
#define COEFCOUNT_MPOLY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coefcount/errors.hpp"
#include "coefcount/ffield.hpp"
#include "coefcount/integers.hpp"

namespace coefcount {

/// Exponent vector (γ_1, ..., γ_k).
using Monomial = std::vector<std::uint64_t>;

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto e : m) {
            h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

/// Graded lexicographic order: total degree first, then lexicographic on exponents.
bool grlex_less(const Monomial& a, const Monomial& b);

/// Coefficients in F_q.
struct FieldRing {
    using Coeff = Residue;
    FieldSpec field;

    Coeff add(Coeff a, Coeff b) const { return field.add(a, b); }
    Coeff mul(Coeff a, Coeff b) const { return field.mul(a, b); }
    Coeff neg(Coeff a) const { return field.neg(a); }
    static bool is_zero(Coeff a) { return a == 0; }
    Coeff from_big(const BigInt& v) const {
        BigInt m = v % BigInt(field.p());
        if (m < 0) m += field.p();
        return static_cast<Coeff>(m.get_ui());
    }
    Coeff one() const { return 1; }
    std::string format(Coeff a) const { return field.format(a); }
    std::string describe() const { return "F_" + field.describe(); }
    friend bool operator==(const FieldRing& a, const FieldRing& b) { return a.field == b.field; }
};

/// Coefficients in the integers.
struct IntegerRing {
    using Coeff = BigInt;

    static Coeff add(const Coeff& a, const Coeff& b) { return a + b; }
    static Coeff mul(const Coeff& a, const Coeff& b) { return a * b; }
    static Coeff neg(const Coeff& a) { return -a; }
    static bool is_zero(const Coeff& a) { return a == 0; }
    static Coeff from_big(const BigInt& v) { return v; }
    static Coeff one() { return 1; }
    static std::string format(const Coeff& a) { return a.get_str(); }
    static std::string describe() { return "ZZ"; }
    friend bool operator==(const IntegerRing&, const IntegerRing&) { return true; }
};

/// Sparse polynomial in k variables: a hash map from exponent vectors to nonzero coefficients.
template <class Ring>
class MultiPoly {
   public:
    using Coeff = typename Ring::Coeff;
    using TermMap = std::unordered_map<Monomial, Coeff, MonomialHash>;

    static constexpr std::uint64_t kDefaultBudget = 10'000'000;

    MultiPoly(Ring ring, std::size_t k) : ring_(std::move(ring)), k_(k) {}

    static MultiPoly constant(Ring ring, std::size_t k, const Coeff& c) {
        MultiPoly p(std::move(ring), k);
        p.add_term(Monomial(k, 0), c);
        return p;
    }
    static MultiPoly one(Ring ring, std::size_t k) {
        Coeff c = ring.one();
        return constant(std::move(ring), k, c);
    }
    /// x_i with a 0-based index.
    static MultiPoly variable(Ring ring, std::size_t k, std::size_t i) {
        MultiPoly p(std::move(ring), k);
        Monomial m(k, 0);
        m.at(i) = 1;
        Coeff c = p.ring_.one();
        p.add_term(m, c);
        return p;
    }

    const Ring& ring() const noexcept { return ring_; }
    std::size_t nvars() const noexcept { return k_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Coeff coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    /// Adds c x^m, dropping the entry if it cancels.
    void add_term(const Monomial& m, const Coeff& c) {
        if (m.size() != k_) throw std::invalid_argument("monomial arity mismatch");
        if (Ring::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second = ring_.add(it->second, c);
            if (Ring::is_zero(it->second)) terms_.erase(it);
        }
    }

    /// Terms sorted in graded lexicographic order, smallest first.
    std::vector<std::pair<Monomial, Coeff>> sorted_terms() const {
        std::vector<std::pair<Monomial, Coeff>> out(terms_.begin(), terms_.end());
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return grlex_less(a.first, b.first); });
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        auto sorted = sorted_terms();
        for (const auto& [m, c] : sorted) {
            std::string coef = ring_.format(c);
            bool negative = !coef.empty() && coef[0] == '-';
            if (!out.empty()) out += negative ? " - " : " + ";
            else if (negative) out += "-";
            if (negative) coef.erase(0, 1);
            std::string vars;
            for (std::size_t i = 0; i < k_; ++i) {
                if (m[i] == 0) continue;
                if (!vars.empty()) vars += "*";
                vars += k_ == 1 ? "x" : "x" + std::to_string(i + 1);
                if (m[i] > 1) vars += "^" + std::to_string(m[i]);
            }
            bool composite = coef.find('+') != std::string::npos;
            if (vars.empty()) out += coef;
            else if (coef == "1") out += vars;
            else out += (composite ? "(" + coef + ")" : coef) + "*" + vars;
        }
        return out;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.k_ == b.k_ && a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }

   private:
    Ring ring_;
    std::size_t k_;
    TermMap terms_;
};

using FieldPoly = MultiPoly<FieldRing>;
using IntPoly = MultiPoly<IntegerRing>;

namespace detail {
template <class Ring>
void require_compatible(const MultiPoly<Ring>& a, const MultiPoly<Ring>& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("polynomial arity mismatch");
    if (!(a.ring() == b.ring())) throw std::invalid_argument("polynomial ring mismatch");
}

// Product of the per-variable extents, saturating.
template <class Ring>
std::uint64_t box_size(const MultiPoly<Ring>& a, const MultiPoly<Ring>& b);
}  // namespace detail

template <class Ring>
MultiPoly<Ring> poly_add(const MultiPoly<Ring>& a, const MultiPoly<Ring>& b) {
    detail::require_compatible(a, b);
    MultiPoly<Ring> out = a;
    for (const auto& [m, c] : b.terms()) out.add_term(m, c);
    return out;
}

template <class Ring>
MultiPoly<Ring> poly_scale(const MultiPoly<Ring>& a, const typename Ring::Coeff& s) {
    MultiPoly<Ring> out(a.ring(), a.nvars());
    for (const auto& [m, c] : a.terms()) out.add_term(m, a.ring().mul(c, s));
    return out;
}

template <class Ring>
MultiPoly<Ring> poly_sub(const MultiPoly<Ring>& a, const MultiPoly<Ring>& b) {
    return poly_add(a, poly_scale(b, a.ring().neg(a.ring().one())));
}

/// Componentwise maximum of the exponent vectors; throws on the zero polynomial.
template <class Ring>
std::vector<std::uint64_t> var_degrees(const MultiPoly<Ring>& f) {
    if (f.is_zero()) throw std::invalid_argument("var_degrees: zero polynomial");
    std::vector<std::uint64_t> d(f.nvars(), 0);
    for (const auto& [m, c] : f.terms())
        for (std::size_t i = 0; i < m.size(); ++i) d[i] = std::max(d[i], m[i]);
    return d;
}

template <class Ring>
std::uint64_t detail::box_size(const MultiPoly<Ring>& a, const MultiPoly<Ring>& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    auto da = var_degrees(a), db = var_degrees(b);
    unsigned __int128 total = 1;
    for (std::size_t i = 0; i < da.size(); ++i) {
        total *= static_cast<unsigned __int128>(da[i]) + db[i] + 1;
        if (total > ~0ULL) return ~0ULL;
    }
    return static_cast<std::uint64_t>(total);
}

template <class Ring>
MultiPoly<Ring> poly_mul(const MultiPoly<Ring>& a, const MultiPoly<Ring>& b,
                         std::uint64_t budget = MultiPoly<Ring>::kDefaultBudget) {
    detail::require_compatible(a, b);
    MultiPoly<Ring> out(a.ring(), a.nvars());
    if (a.is_zero() || b.is_zero()) return out;
    unsigned __int128 pairs = static_cast<unsigned __int128>(a.size()) * b.size();
    std::uint64_t projected = std::min<std::uint64_t>(pairs > ~0ULL ? ~0ULL : static_cast<std::uint64_t>(pairs),
                                                      detail::box_size(a, b));
    if (projected > budget)
        throw ResourceLimitError("product may reach " + std::to_string(projected) + " terms, over the budget of " +
                                 std::to_string(budget));
    Monomial m(a.nvars());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            out.add_term(m, a.ring().mul(ca, cb));
        }
    }
    return out;
}

/// Coefficient Frobenius and exponent scaling: f(x)^p in characteristic p.
FieldPoly frobenius_map(const FieldPoly& f);

/// f^n. Over F_q this multiplies the Frobenius images f^{p^i} selected by the base-p
/// digits of n; over the integers it uses binary powering.
FieldPoly poly_pow(const FieldPoly& f, std::uint64_t n, std::uint64_t budget = FieldPoly::kDefaultBudget);
IntPoly poly_pow(const IntPoly& f, std::uint64_t n, std::uint64_t budget = IntPoly::kDefaultBudget);

/// Counts of each nonzero coefficient value, keyed by value.
template <class Ring>
std::map<typename Ring::Coeff, std::uint64_t> coeff_census(const MultiPoly<Ring>& f) {
    std::map<typename Ring::Coeff, std::uint64_t> out;
    for (const auto& [m, c] : f.terms()) ++out[c];
    return out;
}

/// N(f), the number of nonzero coefficients.
template <class Ring>
std::uint64_t nonzero_count(const MultiPoly<Ring>& f) {
    return f.size();
}

/// Parses a polynomial in k variables. Grammar: terms separated by + or -, each a
/// *-separated product of integers, variables xI or xI^E (1 <= I <= k; bare x when
/// k = 1) and, over an extension field, the field generator a or a^E.
FieldPoly parse_poly(std::string_view text, std::size_t k, const FieldSpec& field);
IntPoly parse_int_poly(std::string_view text, std::size_t k);

/// Reduces an integer polynomial modulo p into F_q.
FieldPoly to_field(const IntPoly& f, const FieldSpec& field);

}  // namespace coefcount

#endif
