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

#ifndef COEFCOUNT_FFIELD_HPP
#define COEFCOUNT_FFIELD_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coefcount/integers.hpp"

namespace coefcount {

/// Canonical index of an element of F_q: the basis coefficients c_0..c_{r-1}
/// read as the base-p number c_0 + c_1 p + ... + c_{r-1} p^{r-1}.
/// Index 0 is zero and index 1 is one.
using Residue = std::uint32_t;

namespace detail {
struct FieldData;
}

/// The field F_q with q = p^r, in the polynomial basis F_p[t]/(modulus).
///
/// Cheap to copy; all copies share immutable lookup tables. Two specs compare
/// equal when p, r and the modulus agree.
class FieldSpec {
   public:
    static constexpr std::uint64_t kDefaultMaxOrder = 1ULL << 16;

    /// F_2.
    FieldSpec();

    static FieldSpec prime(std::uint32_t p, std::uint64_t max_order = kDefaultMaxOrder);

    /// F_{p^r}. An empty modulus selects find_irreducible(p, r). A supplied modulus
    /// lists coefficients constant term first and must be monic irreducible of degree r.
    static FieldSpec extension(std::uint32_t p, unsigned r, std::vector<std::uint32_t> modulus = {},
                               std::uint64_t max_order = kDefaultMaxOrder);

    /// "p", "p^r" or "p^r:c0,c1,...,cr" (modulus digits, constant term first).
    static FieldSpec parse(std::string_view text, std::uint64_t max_order = kDefaultMaxOrder);

    std::uint32_t p() const noexcept;
    unsigned r() const noexcept;
    std::uint32_t q() const noexcept;
    /// Monic modulus, constant term first (length r + 1).
    const std::vector<std::uint32_t>& modulus() const noexcept;

    Residue zero() const noexcept { return 0; }
    Residue one() const noexcept { return 1; }
    bool contains(Residue a) const noexcept { return a < q(); }

    Residue add(Residue a, Residue b) const;
    Residue sub(Residue a, Residue b) const;
    Residue neg(Residue a) const;
    Residue mul(Residue a, Residue b) const;
    Residue inv(Residue a) const;  // throws std::domain_error on zero
    Residue div(Residue a, Residue b) const;
    Residue pow(Residue a, std::uint64_t e) const;
    Residue pow(Residue a, const BigInt& e) const;
    /// a^p.
    Residue frobenius(Residue a) const;

    /// Image of an integer in the prime subfield.
    Residue from_int(long long v) const;
    Residue from_coeffs(std::span<const std::uint32_t> coeffs) const;
    std::vector<std::uint32_t> coeffs(Residue a) const;
    /// The class of t, written `a` in polynomial text. Only meaningful for r > 1.
    Residue generator() const;

    /// Prime-field elements print as integers; extension elements as polynomials in `a`.
    std::string format(Residue a) const;
    std::string describe() const;  // "2", "2^2:1,1,1"

    friend bool operator==(const FieldSpec& x, const FieldSpec& y) noexcept;

   private:
    explicit FieldSpec(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
    std::shared_ptr<const detail::FieldData> data_;
};

/// An element together with its field. Arithmetic between elements of different
/// fields throws std::invalid_argument.
class FieldElem {
   public:
    FieldElem(FieldSpec field, Residue value);
    static FieldElem from_coeffs(const FieldSpec& field, std::span<const std::uint32_t> coeffs);

    const FieldSpec& field() const noexcept { return field_; }
    Residue value() const noexcept { return value_; }
    std::vector<std::uint32_t> coeffs() const { return field_.coeffs(value_); }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElem pow(std::uint64_t e) const { return {field_, field_.pow(value_, e)}; }
    FieldElem inverse() const { return {field_, field_.inv(value_)}; }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
    friend bool operator==(const FieldElem& a, const FieldElem& b) noexcept {
        return a.value_ == b.value_ && a.field_ == b.field_;
    }

   private:
    FieldSpec field_;
    Residue value_;
};

enum class ArithOp { add, sub, mul, div };

FieldElem field_arith(const FieldElem& a, const FieldElem& b, ArithOp op);

/// Lexicographically smallest monic irreducible of degree r over F_p, constant term
/// first. Candidates are ordered by (c_{r-1}, ..., c_0). For r = 1 this is x.
std::vector<std::uint32_t> find_irreducible(std::uint32_t p, unsigned r);

}  // namespace coefcount

#endif
