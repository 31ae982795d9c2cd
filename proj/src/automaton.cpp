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

#include "coefcount/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace coefcount {

std::size_t PatternHash::operator()(const SectionPattern& p) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto v : p) {
        h ^= v;
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

std::uint64_t DigitAutomaton::output(std::size_t state, Residue alpha) const {
    for (const auto& [value, count] : census_.at(state))
        if (value == alpha) return count;
    return 0;
}

bool DigitAutomaton::columns_stochastic() const {
    std::uint64_t expected = 1;
    for (std::size_t i = 0; i < f_.nvars(); ++i) expected *= field().q();
    for (const auto& matrix : phi_) {
        for (const auto& column : matrix) {
            std::uint64_t sum = 0;
            for (const auto& [row, count] : column) sum += count;
            if (sum != expected) return false;
        }
    }
    return true;
}

namespace {

struct Grid {
    std::vector<std::uint64_t> extent, stride;
    std::uint64_t cells = 1;

    Grid(const std::vector<std::uint64_t>& ext, std::uint64_t budget) : extent(ext), stride(ext.size()) {
        unsigned __int128 total = 1;
        for (std::size_t i = 0; i < ext.size(); ++i) {
            stride[i] = static_cast<std::uint64_t>(total);
            total *= ext[i];
            if (total > budget) throw ResourceLimitError("section box exceeds the budget of " + std::to_string(budget));
        }
        cells = static_cast<std::uint64_t>(total);
    }
    std::uint64_t index(const std::vector<std::uint64_t>& point) const {
        std::uint64_t out = 0;
        for (std::size_t i = 0; i < point.size(); ++i) out += point[i] * stride[i];
        return out;
    }
};

// Odometer over all points of a box.
bool advance(std::vector<std::uint64_t>& point, const std::vector<std::uint64_t>& extent) {
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (++point[i] < extent[i]) return true;
        point[i] = 0;
    }
    return false;
}

}  // namespace

DigitAutomaton build_automaton(const FieldPoly& f, const AutomatonOptions& options,
                               const std::optional<FieldPoly>& prefix) {
    if (f.is_zero()) throw std::invalid_argument("build_automaton: f must be nonzero");
    const FieldSpec& F = f.ring().field;
    const std::size_t k = f.nvars();
    const std::uint32_t q = F.q();
    if (prefix) {
        if (prefix->nvars() != k || !(prefix->ring().field == F))
            throw std::invalid_argument("prefix polynomial does not match f");
        if (prefix->is_zero()) throw std::invalid_argument("prefix polynomial must be nonzero");
    }

    DigitAutomaton A(f);
    A.prefix_ = prefix;
    const auto d = var_degrees(f);
    A.bounds_.resize(k);
    for (std::size_t i = 0; i < k; ++i) A.bounds_[i] = (q - 1) * d[i];
    if (prefix) {
        auto dg = var_degrees(*prefix);
        for (std::size_t i = 0; i < k; ++i) A.bounds_[i] = std::max(A.bounds_[i], dg[i]);
    }

    std::vector<std::uint64_t> box_ext(k), prod_ext(k), qbox(k, q);
    for (std::size_t i = 0; i < k; ++i) {
        box_ext[i] = A.bounds_[i] + 1;
        prod_ext[i] = A.bounds_[i] + (q - 1) * d[i] + 1;
    }
    const Grid box(box_ext, options.budget_terms);
    const Grid prod(prod_ext, options.budget_terms);

    // f^i as (offset in the product grid, coefficient).
    std::vector<std::vector<std::pair<std::uint64_t, Residue>>> fpow(q);
    {
        FieldPoly power = FieldPoly::one(f.ring(), k);
        for (std::uint32_t i = 0; i < q; ++i) {
            for (const auto& [m, c] : power.terms()) fpow[i].emplace_back(prod.index(m), c);
            if (i + 1 < q) power = poly_mul(power, f, options.budget_terms);
        }
    }
    // Box cell -> product-grid offset.
    std::vector<std::uint64_t> box_to_prod(box.cells);
    {
        std::vector<std::uint64_t> pt(k, 0);
        std::uint64_t c = 0;
        do box_to_prod[c++] = prod.index(pt);
        while (advance(pt, box_ext));
    }
    // For each section gamma: the product offsets gamma + q*delta for delta in the box (or a sentinel).
    const std::uint64_t kOutside = ~0ULL;
    std::vector<std::vector<std::uint64_t>> section_map;
    {
        std::vector<std::uint64_t> gamma(k, 0);
        do {
            std::vector<std::uint64_t> offsets(box.cells);
            std::vector<std::uint64_t> delta(k, 0);
            std::uint64_t c = 0;
            do {
                bool inside = true;
                std::uint64_t off = 0;
                for (std::size_t i = 0; i < k; ++i) {
                    std::uint64_t e = gamma[i] + q * delta[i];
                    if (e >= prod_ext[i]) {
                        inside = false;
                        break;
                    }
                    off += e * prod.stride[i];
                }
                offsets[c++] = inside ? off : kOutside;
            } while (advance(delta, box_ext));
            section_map.push_back(std::move(offsets));
        } while (advance(gamma, qbox));
    }

    std::unordered_map<SectionPattern, std::uint32_t, PatternHash> index;
    std::deque<std::uint32_t> queue;
    auto intern = [&](SectionPattern&& p) -> std::uint32_t {
        auto it = index.find(p);
        if (it != index.end()) return it->second;
        if (A.states_.size() >= options.state_cap)
            throw ResourceLimitError("automaton exceeds the state cap of " + std::to_string(options.state_cap));
        auto id = static_cast<std::uint32_t>(A.states_.size());
        index.emplace(p, id);
        std::map<Residue, std::uint32_t> census;
        for (auto v : p)
            if (v != 0) ++census[v];
        A.census_.emplace_back(census.begin(), census.end());
        A.states_.push_back(std::move(p));
        queue.push_back(id);
        return id;
    };

    SectionPattern seed(box.cells, 0);
    if (prefix) {
        for (const auto& [m, c] : prefix->terms()) seed[box.index(m)] = static_cast<std::uint16_t>(c);
    } else {
        seed[0] = 1;
    }
    A.start_ = intern(std::move(seed));
    A.phi_.assign(q, {});

    std::vector<Residue> g(prod.cells, 0);
    std::vector<std::uint64_t> touched;
    while (!queue.empty()) {
        const std::uint32_t G = queue.front();
        queue.pop_front();
        for (std::uint32_t digit = 0; digit < q; ++digit) {
            // g = f^digit * G over the product grid.
            for (auto t : touched) g[t] = 0;
            touched.clear();
            std::uint64_t nonzero_g = 0;
            const SectionPattern& pattern = A.states_[G];
            for (std::uint64_t c = 0; c < box.cells; ++c) {
                Residue v = pattern[c];
                if (v == 0) continue;
                const std::uint64_t base = box_to_prod[c];
                for (const auto& [off, fc] : fpow[digit]) {
                    std::uint64_t t = base + off;
                    if (g[t] == 0) touched.push_back(t);
                    g[t] = F.add(g[t], F.mul(v, fc));
                }
            }
            std::sort(touched.begin(), touched.end());
            touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
            for (auto t : touched)
                if (g[t] != 0) ++nonzero_g;

            std::map<std::uint32_t, std::uint32_t> column;
            std::uint64_t nonzero_children = 0;
            for (const auto& offsets : section_map) {
                SectionPattern child(box.cells, 0);
                for (std::uint64_t c = 0; c < box.cells; ++c) {
                    if (offsets[c] == kOutside) continue;
                    Residue v = g[offsets[c]];
                    if (v != 0) {
                        child[c] = static_cast<std::uint16_t>(v);
                        ++nonzero_children;
                    }
                }
                ++column[intern(std::move(child))];
            }
            if (nonzero_children != nonzero_g) throw std::logic_error("section escaped the box");
            if (A.phi_[digit].size() <= G) A.phi_[digit].resize(G + 1);
            A.phi_[digit][G].assign(column.begin(), column.end());
        }
    }
    for (auto& matrix : A.phi_) matrix.resize(A.states_.size());
    return A;
}

namespace {

std::vector<BigInt> apply_phi(const std::vector<DigitAutomaton::Column>& phi, const std::vector<BigInt>& psi) {
    std::vector<BigInt> out(psi.size(), 0);
    for (std::size_t G = 0; G < psi.size(); ++G) {
        if (psi[G] == 0) continue;
        for (const auto& [F, count] : phi[G]) out[F] += psi[G] * static_cast<unsigned long>(count);
    }
    return out;
}

BigInt read_out(const DigitAutomaton& A, const std::vector<BigInt>& psi, Residue alpha) {
    BigInt total = 0;
    for (std::size_t s = 0; s < psi.size(); ++s) {
        if (psi[s] == 0) continue;
        std::uint64_t u = A.output(s, alpha);
        if (u != 0) total += psi[s] * static_cast<unsigned long>(u);
    }
    return total;
}

void check_alpha(const DigitAutomaton& A, Residue alpha) {
    if (alpha == 0) throw std::invalid_argument("alpha must be nonzero");
    if (!A.field().contains(alpha)) throw std::invalid_argument("alpha is not an element of the field");
}

}  // namespace

std::vector<BigInt> state_vector(const DigitAutomaton& A, const std::vector<std::uint64_t>& digits_lsb) {
    std::vector<BigInt> psi(A.num_states(), 0);
    psi[A.start()] = 1;
    for (auto digit : digits_lsb) {
        if (digit >= A.field().q()) throw std::invalid_argument("digit out of range");
        psi = apply_phi(A.phi(static_cast<unsigned>(digit)), psi);
    }
    return psi;
}

BigInt count_via_digits(const DigitAutomaton& A, const std::vector<std::uint64_t>& digits_lsb, Residue alpha) {
    check_alpha(A, alpha);
    return read_out(A, state_vector(A, digits_lsb), alpha);
}

BigInt count_via_automaton(const DigitAutomaton& A, const BigInt& n, Residue alpha) {
    return count_via_digits(A, digits_lsb(n, A.field().q()), alpha);
}

BigInt count_via_automaton(const DigitAutomaton& A, const BigInt& n, Residue alpha, const FieldPoly& prefix,
                           const AutomatonOptions& options) {
    if (A.prefix() && *A.prefix() == prefix) return count_via_automaton(A, n, alpha);
    DigitAutomaton B = build_automaton(A.f(), options, prefix);
    return count_via_automaton(B, n, alpha);
}

std::vector<BigInt> repunit_counts(const DigitAutomaton& A, Residue alpha, std::size_t terms, unsigned base_digit) {
    check_alpha(A, alpha);
    if (base_digit >= A.field().q()) throw std::invalid_argument("base digit out of range");
    std::vector<BigInt> out;
    std::vector<BigInt> psi(A.num_states(), 0);
    psi[A.start()] = 1;
    for (std::size_t m = 0; m < terms; ++m) {
        out.push_back(read_out(A, psi, alpha));
        if (m + 1 < terms) psi = apply_phi(A.phi(base_digit), psi);
    }
    return out;
}

std::size_t reachable_states(const DigitAutomaton& A, unsigned digit) {
    std::vector<bool> seen(A.num_states(), false);
    std::vector<std::uint32_t> stack{A.start()};
    seen[A.start()] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        auto s = stack.back();
        stack.pop_back();
        for (const auto& [t, c] : A.phi(digit)[s]) {
            if (!seen[t]) {
                seen[t] = true;
                ++count;
                stack.push_back(t);
            }
        }
    }
    return count;
}

std::string automaton_to_json(const DigitAutomaton& A) {
    nlohmann::ordered_json doc;
    doc["field"] = A.field().describe();
    doc["poly"] = A.f().to_string();
    if (A.prefix()) doc["prefix"] = A.prefix()->to_string();
    doc["bounds"] = A.bounds();
    doc["start"] = A.start();
    nlohmann::ordered_json states = nlohmann::ordered_json::array();
    for (std::size_t s = 0; s < A.num_states(); ++s) states.push_back(A.state(s));
    doc["states"] = states;
    nlohmann::ordered_json phi = nlohmann::ordered_json::array();
    for (unsigned a = 0; a < A.field().q(); ++a) {
        nlohmann::ordered_json entries = nlohmann::ordered_json::array();
        for (std::size_t G = 0; G < A.num_states(); ++G)
            for (const auto& [F, c] : A.phi(a)[G]) entries.push_back({F, G, c});
        phi.push_back({{"digit", a}, {"entries", entries}});
    }
    doc["phi"] = phi;
    return doc.dump();
}

BigInt parse_exponent(const std::string& text, std::uint32_t q) {
    if (text.rfind("rep:", 0) == 0) {
        std::string rest = text.substr(4);
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("malformed repunit exponent '" + text + "'", 4);
        unsigned long m = std::stoul(rest);
        return (pow_big(BigInt(q), m) - 1) / (q - 1);
    }
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("malformed exponent '" + text + "'", 0);
    return BigInt(text);
}

}  // namespace coefcount
