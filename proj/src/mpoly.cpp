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

#include "coefcount/mpoly.hpp"

#include <cctype>
#include <numeric>

namespace coefcount {

bool grlex_less(const Monomial& a, const Monomial& b) {
    unsigned __int128 da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da < db;
    return a < b;
}

FieldPoly frobenius_map(const FieldPoly& f) {
    const auto& F = f.ring().field;
    FieldPoly out(f.ring(), f.nvars());
    for (const auto& [m, c] : f.terms()) {
        Monomial scaled(m);
        for (auto& e : scaled) e *= F.p();
        out.add_term(scaled, F.frobenius(c));
    }
    return out;
}

FieldPoly poly_pow(const FieldPoly& f, std::uint64_t n, std::uint64_t budget) {
    FieldPoly result = FieldPoly::one(f.ring(), f.nvars());
    if (n == 0) return result;
    const std::uint64_t p = f.ring().field.p();
    FieldPoly power = f;  // f^{p^i}
    while (n > 0) {
        std::uint64_t digit = n % p;
        for (std::uint64_t j = 0; j < digit; ++j) result = poly_mul(result, power, budget);
        n /= p;
        if (n > 0) power = frobenius_map(power);
    }
    return result;
}

IntPoly poly_pow(const IntPoly& f, std::uint64_t n, std::uint64_t budget) {
    IntPoly result = IntPoly::one(f.ring(), f.nvars());
    IntPoly base = f;
    while (n > 0) {
        if (n & 1) result = poly_mul(result, base, budget);
        n >>= 1;
        if (n > 0) base = poly_mul(base, base, budget);
    }
    return result;
}

namespace {

class Parser {
   public:
    Parser(std::string_view text, std::size_t k) : text_(text), k_(k) {}

    // One parsed term: integer coefficient, optional power of the field generator, monomial.
    struct Term {
        BigInt coeff = 1;
        std::uint64_t gen_power = 0;
        Monomial mono;
    };

    std::vector<Term> parse() {
        std::vector<Term> out;
        skip_ws();
        if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
        }
        while (true) {
            Term t = term();
            if (negative) t.coeff = -t.coeff;
            out.push_back(std::move(t));
            skip_ws();
            if (pos_ == text_.size()) break;
            char c = peek();
            if (c != '+' && c != '-') throw ParseError("expected '+' or '-'", pos_);
            negative = c == '-';
            ++pos_;
        }
        return out;
    }

   private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

    BigInt integer() {
        skip_ws();
        std::size_t start = pos_;
        while (at_digit()) ++pos_;
        if (start == pos_) throw ParseError("expected integer", start);
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    std::uint64_t exponent() {
        skip_ws();
        std::size_t start = pos_;
        BigInt e = integer();
        if (e > BigInt(std::to_string(~0ULL))) throw ParseError("exponent too large", start);
        return std::stoull(e.get_str());
    }

    Term term() {
        Term t;
        t.mono.assign(k_, 0);
        while (true) {
            factor(t);
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
        }
        return t;
    }

    void factor(Term& t) {
        skip_ws();
        std::size_t start = pos_;
        if (at_digit()) {
            t.coeff *= integer();
            return;
        }
        char c = peek();
        if (c == 'a') {
            ++pos_;
            std::uint64_t e = 1;
            skip_ws();
            if (peek() == '^') {
                ++pos_;
                e = exponent();
            }
            t.gen_power += e;
            return;
        }
        if (c != 'x') throw ParseError("expected coefficient or variable", start);
        ++pos_;
        std::size_t index = 0;
        if (at_digit()) {
            std::size_t istart = pos_;
            BigInt i = integer();
            if (i < 1 || i > BigInt(std::to_string(k_)))
                throw ParseError("variable index out of range 1.." + std::to_string(k_), istart);
            index = i.get_ui() - 1;
        } else if (k_ != 1) {
            throw ParseError("bare x is only allowed with one variable", start);
        }
        std::uint64_t e = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            e = exponent();
        }
        t.mono[index] += e;
    }

    std::string_view text_;
    std::size_t k_;
    std::size_t pos_ = 0;
};

}  // namespace

FieldPoly parse_poly(std::string_view text, std::size_t k, const FieldSpec& field) {
    FieldPoly out(FieldRing{field}, k);
    Parser parser(text, k);
    auto terms = parser.parse();
    for (const auto& t : terms) {
        Residue c = out.ring().from_big(t.coeff);
        if (t.gen_power > 0) {
            if (field.r() == 1) throw ParseError("the generator 'a' needs an extension field", 0);
            c = field.mul(c, field.pow(field.generator(), t.gen_power));
        }
        out.add_term(t.mono, c);
    }
    return out;
}

IntPoly parse_int_poly(std::string_view text, std::size_t k) {
    IntPoly out(IntegerRing{}, k);
    Parser parser(text, k);
    for (const auto& t : parser.parse()) {
        if (t.gen_power > 0) throw ParseError("the generator 'a' is not an integer", 0);
        out.add_term(t.mono, t.coeff);
    }
    return out;
}

FieldPoly to_field(const IntPoly& f, const FieldSpec& field) {
    FieldPoly out(FieldRing{field}, f.nvars());
    for (const auto& [m, c] : f.terms()) out.add_term(m, out.ring().from_big(c));
    return out;
}

}  // namespace coefcount
