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

#include "coefcount/ffield.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "coefcount/errors.hpp"
#include "coefcount/upoly.hpp"

namespace coefcount {

namespace detail {

struct FieldData {
    std::uint32_t p = 2;
    unsigned r = 1;
    std::uint32_t q = 2;
    std::vector<std::uint32_t> modulus;  // monic, constant first, length r + 1
    // Extension fields only: discrete log / antilog against a primitive element.
    std::vector<std::uint32_t> log;
    std::vector<Residue> exp;
    std::vector<Residue> add_table;  // q*q entries when small
    std::vector<Residue> neg_table;
    std::vector<Residue> frob;

    std::vector<std::uint32_t> digits(Residue a) const {
        std::vector<std::uint32_t> d(r);
        for (unsigned i = 0; i < r; ++i) {
            d[i] = a % p;
            a /= p;
        }
        return d;
    }
    Residue index(const std::vector<std::uint32_t>& d) const {
        Residue v = 0;
        for (unsigned i = r; i-- > 0;) v = v * p + d[i];
        return v;
    }
    Residue add_digitwise(Residue a, Residue b) const {
        Residue out = 0, scale = 1;
        for (unsigned i = 0; i < r; ++i) {
            out += ((a % p + b % p) % p) * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        return out;
    }
    // Schoolbook product of digit vectors reduced by the modulus.
    Residue mul_reduce(Residue a, Residue b) const {
        auto da = digits(a), db = digits(b);
        std::vector<std::uint64_t> prod(2 * r - 1, 0);
        for (unsigned i = 0; i < r; ++i)
            for (unsigned j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(da[i]) * db[j]) % p;
        for (unsigned deg = 2 * r - 1; deg-- > r;) {
            std::uint64_t c = prod[deg];
            if (c == 0) continue;
            prod[deg] = 0;
            for (unsigned i = 0; i < r; ++i) {
                std::uint64_t sub = c * modulus[i] % p;
                prod[deg - r + i] = (prod[deg - r + i] + p - sub) % p;
            }
        }
        std::vector<std::uint32_t> out(r);
        for (unsigned i = 0; i < r; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
        return index(out);
    }
};

}  // namespace detail

namespace {

std::shared_ptr<detail::FieldData> make_data(std::uint32_t p, unsigned r, std::vector<std::uint32_t> modulus,
                                             std::uint64_t max_order) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (r < 1) throw std::invalid_argument("field extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < r; ++i) {
        q *= p;
        if (q > max_order)
            throw ResourceLimitError("field order " + std::to_string(p) + "^" + std::to_string(r) +
                                     " exceeds the configured cap " + std::to_string(max_order));
    }
    auto data = std::make_shared<detail::FieldData>();
    data->p = p;
    data->r = r;
    data->q = static_cast<std::uint32_t>(q);
    if (r == 1) {
        data->modulus = {0, 1};
    } else {
        if (modulus.empty()) modulus = find_irreducible(p, r);
        if (modulus.size() == r) modulus.push_back(1);
        if (modulus.size() != r + 1 || modulus.back() != 1)
            throw std::invalid_argument("field modulus must be monic of degree " + std::to_string(r));
        for (auto c : modulus)
            if (c >= p) throw std::invalid_argument("field modulus digit out of range");
        std::vector<Residue> m(modulus.begin(), modulus.end());
        if (!is_irreducible(UPoly(FieldSpec::prime(p), m)))
            throw std::invalid_argument("field modulus is not irreducible over F_" + std::to_string(p));
        data->modulus = modulus;

        // Antilog table from the first element of multiplicative order q - 1.
        const std::uint32_t order = data->q - 1;
        data->exp.assign(order, 0);
        data->log.assign(data->q, 0);
        bool found = false;
        for (Residue g = 2; g < data->q && !found; ++g) {
            Residue x = 1;
            std::uint32_t k = 0;
            for (; k < order; ++k) {
                data->exp[k] = x;
                x = data->mul_reduce(x, g);
                if (x == 1) break;
            }
            if (k + 1 == order) found = true;
        }
        if (!found) throw std::logic_error("no primitive element found");
        for (std::uint32_t k = 0; k < order; ++k) data->log[data->exp[k]] = k;
    }
    data->neg_table.resize(data->q);
    for (Residue a = 0; a < data->q; ++a) {
        auto d = data->digits(a);
        for (auto& c : d) c = (p - c) % p;
        data->neg_table[a] = data->index(d);
    }
    if (r > 1 && p != 2 && data->q <= 1024) {
        data->add_table.resize(std::size_t(data->q) * data->q);
        for (Residue a = 0; a < data->q; ++a)
            for (Residue b = 0; b < data->q; ++b) data->add_table[std::size_t(a) * data->q + b] = data->add_digitwise(a, b);
    }
    return data;
}

}  // namespace

FieldSpec::FieldSpec() : FieldSpec(prime(2)) {}

FieldSpec FieldSpec::prime(std::uint32_t p, std::uint64_t max_order) {
    auto data = make_data(p, 1, {}, max_order);
    FieldSpec spec(data);
    data->frob.resize(data->q);
    for (Residue a = 0; a < data->q; ++a) data->frob[a] = a;  // a^p = a in F_p
    return spec;
}

FieldSpec FieldSpec::extension(std::uint32_t p, unsigned r, std::vector<std::uint32_t> modulus,
                               std::uint64_t max_order) {
    if (r == 1) return prime(p, max_order);
    auto data = make_data(p, r, std::move(modulus), max_order);
    FieldSpec spec(data);
    data->frob.resize(data->q);
    for (Residue a = 0; a < data->q; ++a) data->frob[a] = spec.pow(a, std::uint64_t(p));
    return spec;
}

FieldSpec FieldSpec::parse(std::string_view text, std::uint64_t max_order) {
    auto fail = [&](std::size_t pos) -> ParseError { return ParseError("malformed field spec '" + std::string(text) + "'", pos); };
    std::size_t pos = 0;
    auto read_uint = [&](std::uint64_t& out) {
        auto begin = text.data() + pos;
        auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), out);
        if (ec != std::errc() || ptr == begin) throw fail(pos);
        pos += static_cast<std::size_t>(ptr - begin);
    };
    std::uint64_t p = 0, r = 1;
    read_uint(p);
    if (p > 0xffffffffULL) throw fail(0);
    std::vector<std::uint32_t> modulus;
    if (pos < text.size() && text[pos] == '^') {
        ++pos;
        read_uint(r);
        if (r == 0 || r > 64) throw fail(pos);
        if (pos < text.size() && text[pos] == ':') {
            ++pos;
            while (true) {
                std::uint64_t c = 0;
                read_uint(c);
                modulus.push_back(static_cast<std::uint32_t>(c));
                if (pos < text.size() && text[pos] == ',') {
                    ++pos;
                    continue;
                }
                break;
            }
        }
    }
    if (pos != text.size()) throw fail(pos);
    return extension(static_cast<std::uint32_t>(p), static_cast<unsigned>(r), modulus, max_order);
}

std::uint32_t FieldSpec::p() const noexcept { return data_->p; }
unsigned FieldSpec::r() const noexcept { return data_->r; }
std::uint32_t FieldSpec::q() const noexcept { return data_->q; }
const std::vector<std::uint32_t>& FieldSpec::modulus() const noexcept { return data_->modulus; }

Residue FieldSpec::add(Residue a, Residue b) const {
    const auto& d = *data_;
    if (d.r == 1) {
        Residue s = a + b;
        return s >= d.p ? s - d.p : s;
    }
    if (d.p == 2) return a ^ b;
    if (!d.add_table.empty()) return d.add_table[std::size_t(a) * d.q + b];
    return d.add_digitwise(a, b);
}

Residue FieldSpec::neg(Residue a) const { return data_->neg_table[a]; }

Residue FieldSpec::sub(Residue a, Residue b) const { return add(a, neg(b)); }

Residue FieldSpec::mul(Residue a, Residue b) const {
    const auto& d = *data_;
    if (d.r == 1) return static_cast<Residue>(std::uint64_t(a) * b % d.p);
    if (a == 0 || b == 0) return 0;
    std::uint32_t k = d.log[a] + d.log[b];
    const std::uint32_t order = d.q - 1;
    if (k >= order) k -= order;
    return d.exp[k];
}

Residue FieldSpec::inv(Residue a) const {
    if (a == 0) throw std::domain_error("division by zero in F_" + std::to_string(q()));
    const auto& d = *data_;
    if (d.r == 1) return pow(a, std::uint64_t(d.p - 2));
    const std::uint32_t order = d.q - 1;
    return d.exp[(order - d.log[a]) % order];
}

Residue FieldSpec::div(Residue a, Residue b) const { return mul(a, inv(b)); }

Residue FieldSpec::pow(Residue a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const auto& d = *data_;
    if (d.r > 1) {
        const std::uint64_t order = d.q - 1;
        return d.exp[(std::uint64_t(d.log[a]) * (e % order)) % order];
    }
    Residue result = 1, base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Residue FieldSpec::pow(Residue a, const BigInt& e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (e == 0) return 1;
    if (a == 0) return 0;
    BigInt reduced = e % (q() - 1);
    if (reduced == 0) reduced = q() - 1;
    return pow(a, static_cast<std::uint64_t>(reduced.get_ui()));
}

Residue FieldSpec::frobenius(Residue a) const { return data_->frob[a]; }

Residue FieldSpec::from_int(long long v) const {
    long long m = v % static_cast<long long>(p());
    if (m < 0) m += p();
    return static_cast<Residue>(m);
}

Residue FieldSpec::from_coeffs(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() > r()) throw std::invalid_argument("too many basis coefficients for F_" + std::to_string(q()));
    std::vector<std::uint32_t> d(r(), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] >= p()) throw std::invalid_argument("basis coefficient out of range");
        d[i] = coeffs[i];
    }
    return data_->index(d);
}

std::vector<std::uint32_t> FieldSpec::coeffs(Residue a) const { return data_->digits(a); }

Residue FieldSpec::generator() const {
    if (r() == 1) throw std::invalid_argument("the symbol 'a' needs an extension field");
    return p();  // digits (0, 1, 0, ...)
}

std::string FieldSpec::format(Residue a) const {
    if (r() == 1) return std::to_string(a);
    if (a == 0) return "0";
    auto d = coeffs(a);
    std::string out;
    for (unsigned i = r(); i-- > 0;) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(d[i]);
            continue;
        }
        if (d[i] != 1) out += std::to_string(d[i]) + "*";
        out += "a";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

std::string FieldSpec::describe() const {
    if (r() == 1) return std::to_string(p());
    std::ostringstream os;
    os << p() << "^" << r() << ":";
    for (std::size_t i = 0; i < modulus().size(); ++i) os << (i ? "," : "") << modulus()[i];
    return os.str();
}

bool operator==(const FieldSpec& x, const FieldSpec& y) noexcept {
    if (x.data_ == y.data_) return true;
    return x.data_->p == y.data_->p && x.data_->r == y.data_->r && x.data_->modulus == y.data_->modulus;
}

FieldElem::FieldElem(FieldSpec field, Residue value) : field_(std::move(field)), value_(value) {
    if (!field_.contains(value_)) throw std::invalid_argument("element index out of range for F_" + std::to_string(field_.q()));
}

FieldElem FieldElem::from_coeffs(const FieldSpec& field, std::span<const std::uint32_t> coeffs) {
    return {field, field.from_coeffs(coeffs)};
}

namespace {
void require_same(const FieldElem& a, const FieldElem& b) {
    if (!(a.field() == b.field()))
        throw std::invalid_argument("mismatched fields: " + a.field().describe() + " vs " + b.field().describe());
}
}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    return {a.field_, a.field_.add(a.value_, b.value_)};
}
FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    return {a.field_, a.field_.sub(a.value_, b.value_)};
}
FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    return {a.field_, a.field_.mul(a.value_, b.value_)};
}
FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    return {a.field_, a.field_.div(a.value_, b.value_)};
}

FieldElem field_arith(const FieldElem& a, const FieldElem& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    throw std::invalid_argument("unknown field operation");
}

std::vector<std::uint32_t> find_irreducible(std::uint32_t p, unsigned r) {
    if (r < 1) throw std::invalid_argument("find_irreducible: degree must be >= 1");
    if (r == 1) return {0, 1};
    FieldSpec fp = FieldSpec::prime(p, ~0ULL);
    // Enumerate (c_{r-1}, ..., c_0) in increasing base-p order.
    std::vector<Residue> c(r + 1, 0);
    c[r] = 1;
    while (true) {
        if (c[0] != 0 && is_irreducible(UPoly(fp, c))) return {c.begin(), c.end()};
        unsigned i = 0;
        while (i < r && ++c[i] == p) c[i++] = 0;
        if (i == r) throw std::logic_error("no irreducible polynomial found");
    }
}

}  // namespace coefcount
