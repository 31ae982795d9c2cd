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

#ifndef COEFCOUNT_AUTOMATON_HPP
#define COEFCOUNT_AUTOMATON_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coefcount/mpoly.hpp"

namespace coefcount {

struct AutomatonOptions {
    std::size_t state_cap = 100'000;
    std::uint64_t budget_terms = FieldPoly::kDefaultBudget;
};

/// Section patterns as states. A pattern is a function from the box
/// prod [0, B_i] to F_q, stored densely with x_1 varying fastest.
using SectionPattern = std::vector<std::uint16_t>;

struct PatternHash {
    std::size_t operator()(const SectionPattern& p) const noexcept;
};

/// Digit automaton over the reachable section patterns of f.
///
/// phi(a)[G] lists (F, count) for the nonzero entries of column G of Phi_a,
/// sorted by F. Every column sums to q^k.
class DigitAutomaton {
   public:
    using Column = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

    const FieldSpec& field() const noexcept { return f_.ring().field; }
    const FieldPoly& f() const noexcept { return f_; }
    const std::optional<FieldPoly>& prefix() const noexcept { return prefix_; }
    const std::vector<std::uint64_t>& bounds() const noexcept { return bounds_; }
    std::size_t num_states() const noexcept { return states_.size(); }
    const SectionPattern& state(std::size_t i) const { return states_.at(i); }
    /// Index of the initial pattern: the constant 1, or the prefix polynomial.
    std::uint32_t start() const noexcept { return start_; }
    const std::vector<Column>& phi(unsigned digit) const { return phi_.at(digit); }
    /// u_alpha(F): number of cells of F equal to alpha.
    std::uint64_t output(std::size_t state, Residue alpha) const;

    /// Column sums of every Phi_a equal q^k.
    bool columns_stochastic() const;

   private:
    friend DigitAutomaton build_automaton(const FieldPoly& f, const AutomatonOptions& options,
                                          const std::optional<FieldPoly>& prefix);
    DigitAutomaton(FieldPoly f) : f_(std::move(f)) {}

    FieldPoly f_;
    std::optional<FieldPoly> prefix_;
    std::vector<std::uint64_t> bounds_;
    std::vector<SectionPattern> states_;
    std::vector<std::vector<std::pair<Residue, std::uint32_t>>> census_;
    std::vector<std::vector<Column>> phi_;
    std::uint32_t start_ = 0;
};

/// Breadth-first closure of the section patterns reachable from the constant 1 (or
/// from the optional prefix g, whose exponents enlarge the box as needed).
DigitAutomaton build_automaton(const FieldPoly& f, const AutomatonOptions& options = {},
                               const std::optional<FieldPoly>& prefix = std::nullopt);

/// Final state-count vector after folding the digits, least significant first.
std::vector<BigInt> state_vector(const DigitAutomaton& A, const std::vector<std::uint64_t>& digits_lsb);

/// N_alpha(n): coefficients of f^n (times the prefix, if any) equal to alpha.
BigInt count_via_automaton(const DigitAutomaton& A, const BigInt& n, Residue alpha);
/// Same, with an explicit digit string that may carry leading zeros.
BigInt count_via_digits(const DigitAutomaton& A, const std::vector<std::uint64_t>& digits_lsb, Residue alpha);
/// Counts coefficients of g * f^n; rebuilds the automaton around g.
BigInt count_via_automaton(const DigitAutomaton& A, const BigInt& n, Residue alpha, const FieldPoly& prefix,
                           const AutomatonOptions& options = {});

/// N_alpha at the exponents whose base-q digits are m copies of base_digit, m = 0..terms-1.
std::vector<BigInt> repunit_counts(const DigitAutomaton& A, Residue alpha, std::size_t terms,
                                   unsigned base_digit = 1);

/// Number of states reachable from the start using only the given digit.
std::size_t reachable_states(const DigitAutomaton& A, unsigned digit);

/// States, box and sparse matrices as a JSON document.
std::string automaton_to_json(const DigitAutomaton& A);

/// Parses "rep:m" (the repunit with m digits equal to 1 in base q) or a decimal integer.
BigInt parse_exponent(const std::string& text, std::uint32_t q);

}  // namespace coefcount

#endif
