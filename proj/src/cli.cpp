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

#include "coefcount/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "coefcount/acceptance.hpp"
#include "coefcount/automaton.hpp"
#include "coefcount/closed_forms.hpp"
#include "coefcount/errors.hpp"
#include "coefcount/lattice.hpp"
#include "coefcount/oracle.hpp"
#include "coefcount/qpow.hpp"
#include "coefcount/ratgen.hpp"
#include "coefcount/traveling.hpp"
#include "json.hpp"

namespace coefcount {

namespace {

using Json = nlohmann::ordered_json;

Json big_json(const BigInt& x) { return to_string(x); }
Json big_json(const Rational& x) { return to_string(x); }

template <class T>
Json list_json(const std::vector<T>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(big_json(x));
    return out;
}

Json genfun_json(const RationalGF& g) { return {{"numerator", list_json(g.numerator)}, {"denominator", list_json(g.denominator)}}; }

// Options shared by the subcommands that take a polynomial over a field.
struct PolyArgs {
    std::string field = "2";
    std::string poly;
    std::size_t vars = 0;  // 0: inferred from the text
    std::string alpha = "1";

    void attach(CLI::App* app, const std::string& poly_flag = "--poly", bool poly_required = true) {
        app->add_option("--field", field, "p, p^r or p^r:c0,...,cr")->capture_default_str();
        auto* opt = app->add_option(poly_flag, poly, "polynomial text, e.g. 1+x1+x2*x1^2");
        if (poly_required) opt->required();
        app->add_option("--vars", vars, "number of variables (default: largest xI index)");
        app->add_option("--alpha", alpha, "nonzero field element to count")->capture_default_str();
    }
    FieldSpec field_spec() const { return FieldSpec::parse(field); }
    FieldPoly parse(const std::string& text, const FieldSpec& F) const {
        return parse_poly(text, vars ? vars : infer_nvars(text), F);
    }
    Residue alpha_value(const FieldSpec& F) const {
        FieldPoly a = parse_poly(alpha, 1, F);
        if (a.size() > 1 || (a.size() == 1 && a.terms().begin()->first[0] != 0))
            throw std::invalid_argument("alpha must be a field constant");
        Residue v = a.coeff({0});
        if (v == 0) throw std::invalid_argument("alpha must be nonzero");
        return v;
    }
};

struct Globals {
    std::uint64_t budget_terms = FieldPoly::kDefaultBudget;
    std::size_t state_cap = 100'000;
    bool json = true;
    std::string output;

    AutomatonOptions automaton_options() const { return {state_cap, budget_terms}; }
};

std::vector<std::uint64_t> parse_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    std::size_t pos = 0;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("expected a comma-separated list of nonnegative integers", pos);
        out.push_back(std::stoull(item));
        pos += item.size() + 1;
    }
    return out;
}

std::vector<BigInt> parse_big_list(const std::string& text) {
    std::vector<BigInt> out;
    std::stringstream ss(text);
    std::string item;
    std::size_t pos = 0;
    while (std::getline(ss, item, ',')) {
        BigInt v;
        if (item.empty() || v.set_str(item, 10) != 0) throw ParseError("expected a comma-separated list of integers", pos);
        out.push_back(v);
        pos += item.size() + 1;
    }
    if (out.empty()) throw ParseError("empty sequence", 0);
    return out;
}

Json recurrence_json(const std::vector<BigInt>& seq, const LinearRecurrence& rec) {
    Json out = genfun_json(seq_to_genfun(seq, rec));
    out["recurrence"] = list_json(rec.coefficients);
    out["order"] = rec.order();
    return out;
}

// ---------------------------------------------------------------------------

void add_automaton(CLI::App& app, const Globals& g, std::function<Json()>& action) {
    auto* cmd = app.add_subcommand("automaton", "count coefficients of f^n equal to alpha via the digit automaton");
    auto args = std::make_shared<PolyArgs>();
    auto n = std::make_shared<std::string>();
    auto prefix = std::make_shared<std::string>();
    auto dump = std::make_shared<bool>(false);
    args->attach(cmd);
    cmd->add_option("--n", *n, "exponent: decimal or rep:m")->required();
    cmd->add_option("--prefix", *prefix, "count coefficients of prefix * f^n instead");
    cmd->add_flag("--dump-states", *dump, "include states and matrices");
    cmd->callback([&, args, n, prefix, dump] {
        action = [&g, args, n, prefix, dump] {
            FieldSpec F = args->field_spec();
            FieldPoly f = args->parse(args->poly, F);
            std::optional<FieldPoly> pre;
            if (!prefix->empty()) pre = parse_poly(*prefix, f.nvars(), F);
            DigitAutomaton A = build_automaton(f, g.automaton_options(), pre);
            Json out;
            out["count"] = big_json(count_via_automaton(A, parse_exponent(*n, F.q()), args->alpha_value(F)));
            if (*dump) out["automaton"] = Json::parse(automaton_to_json(A));
            return out;
        };
    });
}

void add_genfun(CLI::App& app, const Globals& g, std::function<Json()>& action) {
    auto* cmd = app.add_subcommand("genfun", "fit a rational generating function to a sequence");
    auto seq = std::make_shared<std::string>();
    auto args = std::make_shared<PolyArgs>();
    auto terms = std::make_shared<std::size_t>(0);
    auto max_order = std::make_shared<std::size_t>(0);
    auto digit = std::make_shared<unsigned>(1);
    auto from_automaton = std::make_shared<bool>(false);
    auto* opt_seq = cmd->add_option("--seq", *seq, "comma-separated integers");
    auto* opt_auto = cmd->add_flag("--from-automaton", *from_automaton, "use repunit counts of --poly");
    opt_seq->excludes(opt_auto);
    args->attach(cmd, "--poly", false);
    cmd->add_option("--terms", *terms, "number of repunit terms (default 2*states + 11)");
    cmd->add_option("--max-order", *max_order, "largest recurrence order (default: as many as the terms allow)");
    cmd->add_option("--base-digit", *digit, "repeated base-q digit")->capture_default_str();
    cmd->callback([&, seq, args, terms, max_order, digit, from_automaton] {
        action = [&g, seq, args, terms, max_order, digit, from_automaton] {
            std::vector<BigInt> values;
            std::size_t order = *max_order;
            if (*from_automaton) {
                if (args->poly.empty()) throw std::invalid_argument("--from-automaton needs --poly");
                FieldSpec F = args->field_spec();
                DigitAutomaton A = build_automaton(args->parse(args->poly, F), g.automaton_options());
                std::size_t count = *terms ? *terms : 2 * A.num_states() + 11;
                values = repunit_counts(A, args->alpha_value(F), count, *digit);
                if (order == 0) order = std::min(A.num_states(), (count - 1) / 2);
            } else {
                if (seq->empty()) throw std::invalid_argument("give --seq or --from-automaton");
                values = parse_big_list(*seq);
                if (order == 0) order = (values.size() - 1) / 2;
            }
            Json out = recurrence_json(values, fit_recurrence(values, order));
            out["terms"] = values.size();
            return out;
        };
    });
}

void add_qpow(CLI::App& app, const Globals&, std::function<Json()>& action) {
    auto* cmd = app.add_subcommand("qpow", "periodic law for the coefficients of g^(q^m - c)");
    auto args = std::make_shared<PolyArgs>();
    auto c = std::make_shared<std::uint64_t>(1);
    auto verify = std::make_shared<int>(-1);
    auto budget = std::make_shared<std::uint64_t>(kQPowDegreeBudget);
    args->attach(cmd, "--g");
    cmd->add_option("--c", *c, "positive offset c")->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_option("--verify-upto", *verify, "compare the law with direct counts for l <= m <= this");
    cmd->add_option("--degree-budget", *budget, "largest degree of an expanded power")->capture_default_str();
    cmd->callback([&, args, c, verify, budget] {
        action = [args, c, verify, budget] {
            FieldSpec F = args->field_spec();
            FieldPoly gp = parse_poly(args->poly, 1, F);
            UPoly g = to_upoly(gp);
            Residue alpha = args->alpha_value(F);
            QPowProfile prof = fit_qpow_profile(g, *c, alpha, *budget);
            Json out;
            out["d"] = prof.d;
            out["mu"] = prof.mu;
            out["l"] = prof.l;
            out["u"] = list_json(prof.u);
            out["v"] = list_json(prof.v);
            if (*verify >= 0) {
                Json rows = Json::array();
                bool ok = true;
                for (unsigned m = prof.l; m <= static_cast<unsigned>(*verify); ++m) {
                    BigInt count = count_qpow(g, *c, alpha, m, *budget);
                    Rational pred = prof.predict(m);
                    bool match = pred == Rational(count);
                    ok = ok && match;
                    rows.push_back({{"m", m}, {"count", big_json(count)}, {"predicted", big_json(pred)}, {"match", match}});
                }
                out["verify"] = rows;
                out["verified"] = ok;
                if (!ok) throw VerificationError("the fitted law disagrees with a direct count: " + out.dump());
            }
            return out;
        };
    });
}

void add_closed_form(CLI::App& app, const Globals&, std::function<Json()>& action) {
    auto* cmd = app.add_subcommand("closed-form", "closed forms for binomial rows and trinomial powers");
    cmd->require_subcommand(1);
    auto n = std::make_shared<std::string>();
    auto k = std::make_shared<std::string>();
    auto p = std::make_shared<std::uint64_t>(2);

    auto* lucas = cmd->add_subcommand("lucas", "C(n, k) mod p by Lucas' theorem");
    lucas->add_option("--n", *n)->required();
    lucas->add_option("--k", *k)->required();
    lucas->add_option("--p", *p)->required();
    lucas->callback([&, n, k, p] {
        action = [n, k, p] { return Json{{"value", lucas_binomial(BigInt(*n), BigInt(*k), *p)}}; };
    });

    auto* census = cmd->add_subcommand("binom-census", "value census of (1+x)^n mod p");
    census->add_option("--n", *n)->required();
    census->add_option("--p", *p)->required();
    census->callback([&, n, p] {
        action = [n, p] {
            RowCensus rc = binomial_row_census(BigInt(*n), *p);
            Json counts = Json::object();
            for (const auto& [a, cnt] : rc.counts) counts[std::to_string(a)] = big_json(cnt);
            return Json{{"counts", counts}, {"total", big_json(rc.total)}};
        };
    });

    auto* prop = cmd->add_subcommand("prop23", "(1+x+...+x^{p-1})^n mod p");
    auto kk = std::make_shared<std::optional<std::uint64_t>>();
    prop->add_option("--n", *n)->required();
    prop->add_option("--p", *p)->required();
    prop->add_option("--k", *kk, "also report the coefficient of x^k");
    prop->callback([&, n, p, kk] {
        action = [n, p, kk] {
            std::uint64_t nn = std::stoull(*n);
            Json out{{"count", big_json(prop23_count(nn, *p))}};
            if (*kk) out["coefficient"] = prop23_coeff(nn, **kk, *p);
            if (*p == 3) {
                Split3 s = example24_split(nn);
                out["split"] = {{"0", big_json(s.n0)}, {"1", big_json(s.n1)}, {"2", big_json(s.n2)}};
            }
            return out;
        };
    });

    auto* omega = cmd->add_subcommand("omega", "nonzero count of (1+x+x^2)^n over F_2");
    omega->add_option("--n", *n)->required();
    omega->callback([&, n] {
        action = [n] {
            BigInt nn(*n);
            Json runs = Json::array();
            for (auto r : run_lengths(nn)) runs.push_back(r);
            return Json{{"omega", big_json(omega_runs(nn))}, {"runs", runs}};
        };
    });

    auto* fam = cmd->add_subcommand("family22", "k(k+1)^n - (k-1)k^n");
    fam->add_option("--n", *n)->required();
    fam->add_option("--k", *k)->required();
    fam->callback([&, n, k] {
        action = [n, k] { return Json{{"count", big_json(family22_count(std::stoull(*k), std::stoull(*n)))}}; };
    });

    for (auto* sub : {lucas, census, prop, omega, fam})
        for (auto* opt : sub->get_options())
            if (opt->get_name() == "--n" || opt->get_name() == "--k")
                opt->check([](const std::string& s) {
                    return s.empty() || s.find_first_not_of("0123456789") != std::string::npos
                               ? std::string("expected a nonnegative integer")
                               : std::string();
                });
}

Json partition_json(const std::vector<std::uint64_t>& v) {
    Json out = Json::array();
    for (auto x : v) out.push_back(x);
    return out;
}

void add_lattice(CLI::App& app, const Globals&, std::function<Json()>& action) {
    auto* cmd = app.add_subcommand("lattice", "draconian sequences, polytopes and lattice paths");
    cmd->require_subcommand(1);
    auto n = std::make_shared<unsigned>(1);
    auto s = std::make_shared<unsigned>(1);
    auto t = std::make_shared<unsigned>(1);
    auto list = std::make_shared<std::string>();
    auto mode = std::make_shared<std::string>("all");
    auto kind = std::make_shared<std::string>();
    auto m = std::make_shared<unsigned>(0);
    auto k = std::make_shared<unsigned>(1);

    auto* drac = cmd->add_subcommand("draconian", "the sequences K_n");
    auto list_flag = std::make_shared<bool>(false);
    drac->add_option("--n", *n)->required();
    drac->add_flag("--list", *list_flag, "list the sequences");
    drac->callback([&, n, list_flag] {
        action = [n, list_flag] {
            auto seqs = enum_draconian(*n);
            Json out{{"count", seqs.size()}};
            if (*list_flag) {
                Json all = Json::array();
                for (const auto& v : seqs) all.push_back(partition_json(v));
                out["sequences"] = all;
            }
            return out;
        };
    });

    auto* omega = cmd->add_subcommand("omega", "distinct monomials of prod (x_1 + ... + x_{lambda_i})");
    omega->add_option("--lambda", *list, "weakly decreasing parts, comma-separated")->required();
    omega->callback([&, list] {
        action = [list] { return Json{{"count", big_json(omega_count(parse_list(*list)))}}; };
    });

    auto* ps = cmd->add_subcommand("ps", "lattice points of the Pitman-Stanley polytope");
    ps->add_option("--t", *list, "t_1,...,t_n")->required();
    ps->callback([&, list] {
        action = [list] {
            auto tv = parse_list(*list);
            BigInt direct = ps_lattice_points_direct(tv), formula = ps_lattice_points_formula(tv);
            return Json{{"direct", big_json(direct)}, {"formula", big_json(formula)}, {"equal", direct == formula}};
        };
    });

    auto* paths = cmd->add_subcommand("paths", "lattice paths beneath the shifted staircase");
    paths->add_option("--n", *n)->required();
    paths->add_option("--s", *s)->required();
    paths->add_option("--t", *t)->required();
    paths->add_option("--mode", *mode, "closed, closed-literal, lsum, ksum, direct or all")
        ->check(CLI::IsMember({"closed", "closed-literal", "lsum", "ksum", "direct", "all"}))
        ->capture_default_str();
    paths->callback([&, n, s, t, mode] {
        action = [n, s, t, mode] {
            const std::vector<std::pair<std::string, PathMode>> modes = {{"closed", PathMode::closed},
                                                                         {"closed-literal", PathMode::closed_literal},
                                                                         {"lsum", PathMode::lsum},
                                                                         {"ksum", PathMode::ksum},
                                                                         {"direct", PathMode::direct}};
            Json out = Json::object();
            for (const auto& [name, pm] : modes)
                if (*mode == "all" || *mode == name) out[name] = big_json(shifted_path_count(*n, *s, *t, pm));
            return out;
        };
    });

    auto* mrsk = cmd->add_subcommand("mrsk", "both sides of the noncrossing matching identity");
    mrsk->add_option("--m", *list, "m_1,...,m_n")->required();
    mrsk->callback([&, list] {
        action = [list] {
            IdentityValue v = noncrossing_identity(parse_list(*list));
            return Json{{"lhs", big_json(v.lhs)}, {"rhs", big_json(v.rhs)}, {"equal", v.equal()}};
        };
    });

    auto* ex = cmd->add_subcommand("ex433", "tableau, Fuss-Catalan and matrix examples");
    ex->add_option("--kind", *kind)->required()->check(CLI::IsMember({"a", "b", "c"}));
    ex->add_option("--n", *n)->required();
    ex->add_option("--m", *m, "parameter of kind a");
    ex->add_option("--k", *k, "parameter of kinds b and c");
    ex->callback([&, kind, n, m, k] {
        action = [kind, n, m, k] {
            auto oracle = [](const std::vector<IntPoly>& fs) {
                return fs.empty() ? BigInt(1) : BigInt(std::to_string(brute_product_census(fs).distinct));
            };
            if (*kind == "a")
                return Json{{"formula", big_json(ex433a_formula(*n, *m))}, {"oracle", big_json(oracle(ex433a_factors(*n, *m)))}};
            if (*kind == "b")
                return Json{{"formula", big_json(ex433b_formula(*n, *k))}, {"oracle", big_json(oracle(ex433b_factors(*n, *k)))}};
            auto R = ex433c_matrix(*n + *k + 1);
            return Json{{"oracle", big_json(oracle(ex433c_factors(*n, *k)))},
                        {"polytope_sum", big_json(ex433c_polytope_sum(*n, *k))},
                        {"R(n,k)", big_json(*k <= *n ? R[*n][*k] : Rational(0))},
                        {"R(n+k,k)", big_json(R[*n + *k][*k])}};
        };
    });
}

void add_traveling(CLI::App& app, const Globals&, std::function<Json()>& action) {
    auto* cmd = app.add_subcommand("traveling", "traveling and staircase products");
    cmd->require_subcommand(1);
    auto j = std::make_shared<unsigned>(1);
    auto k = std::make_shared<unsigned>(1);
    auto m = std::make_shared<unsigned>(1);
    auto terms = std::make_shared<std::size_t>(10);
    auto n_max = std::make_shared<unsigned>(10);

    auto* gf = cmd->add_subcommand("genfun", "generating function of N(W_{j,k,n})");
    gf->add_option("--j", *j)->required();
    gf->add_option("--k", *k)->required();
    gf->callback([&, j, k] { action = [j, k] { return genfun_json(traveling_genfun(*j, *k)); }; });

    auto* seq = cmd->add_subcommand("seq", "N(W_{j,k,n}) for n < terms");
    seq->add_option("--j", *j)->required();
    seq->add_option("--k", *k)->required();
    seq->add_option("--terms", *terms)->capture_default_str();
    seq->callback([&, j, k, terms] { action = [j, k, terms] { return Json{{"seq", list_json(traveling_seq(*j, *k, *terms))}}; }; });

    auto* theta = cmd->add_subcommand("theta", "characteristic polynomial of the connectivity matrix");
    theta->add_option("--k", *k)->required();
    theta->add_option("--m", *m)->required();
    theta->callback([&, k, m] {
        action = [k, m] {
            ZPoly closed = theta_closed(*k, *m), det = theta_by_determinant(*k, *m);
            Json matrix = Json::array();
            for (const auto& row : connectivity_matrix(*k, *m)) matrix.push_back(list_json(row));
            return Json{{"matrix", matrix}, {"closed", list_json(closed)}, {"determinant", list_json(det)}, {"equal", closed == det}};
        };
    });

    auto* vg = cmd->add_subcommand("v-genfun", "generating function of N(V_{n,k,m})");
    vg->add_option("--k", *k)->required();
    vg->add_option("--m", *m)->required();
    vg->callback([&, k, m] { action = [k, m] { return genfun_json(v_genfun(*k, *m)); }; });

    auto* hg = cmd->add_subcommand("h-genfun", "generating function of N(H_n) over F_p");
    auto p = std::make_shared<std::uint64_t>(2);
    hg->add_option("--p", *p)->required();
    hg->callback([&, p] { action = [p] { return genfun_json(h_genfun(*p)); }; });

    auto* d = cmd->add_subcommand("d-counts", "Schroeder counts and the gamma/nu comparison table");
    d->add_option("--n-max", *n_max)->capture_default_str();
    d->callback([&, n_max] {
        action = [n_max] {
            Json schroeder_rows = Json::array();
            for (unsigned n = 1; n <= *n_max; ++n)
                schroeder_rows.push_back({{"n", n}, {"d0", big_json(d0_count(n))}, {"schroeder", big_json(schroeder(n))}});
            Json nu_rows = Json::array();
            for (const auto& row : nu_table(*n_max))
                nu_rows.push_back({{"n", row.n}, {"gamma", big_json(row.gamma)}, {"nu", big_json(row.nu)}, {"half_matches", row.half_matches}});
            return Json{{"schroeder", schroeder_rows}, {"nu_table", nu_rows}};
        };
    });
}

void add_oracle(CLI::App& app, const Globals& g, std::function<Json()>& action) {
    auto* cmd = app.add_subcommand("oracle", "brute-force expansion, compared with the automaton");
    auto args = std::make_shared<PolyArgs>();
    auto n = std::make_shared<std::uint64_t>(0);
    auto factors = std::make_shared<std::string>();
    auto integers = std::make_shared<bool>(false);
    args->attach(cmd, "--poly", false);
    cmd->add_option("--n", *n, "exponent for --poly");
    cmd->add_option("--factors", *factors, "semicolon-separated factors; census of their product");
    cmd->add_flag("--integers", *integers, "expand --factors over the integers");
    cmd->callback([&, args, n, factors, integers] {
        action = [&g, args, n, factors, integers] {
            if (!factors->empty()) {
                std::vector<std::string> texts;
                std::stringstream ss(*factors);
                std::string item;
                std::size_t vars = args->vars;
                while (std::getline(ss, item, ';')) {
                    texts.push_back(item);
                    if (!args->vars) vars = std::max(vars, infer_nvars(item));
                }
                Json values = Json::object();
                std::uint64_t distinct = 0;
                if (*integers) {
                    std::vector<IntPoly> fs;
                    for (const auto& t : texts) fs.push_back(parse_int_poly(t, vars));
                    auto census = brute_product_census(fs, g.budget_terms);
                    distinct = census.distinct;
                    for (const auto& [v, c] : census.values) values[to_string(v)] = c;
                } else {
                    FieldSpec F = args->field_spec();
                    std::vector<FieldPoly> fs;
                    for (const auto& t : texts) fs.push_back(parse_poly(t, vars, F));
                    auto census = brute_product_census(fs, g.budget_terms);
                    distinct = census.distinct;
                    for (const auto& [v, c] : census.values) values[F.format(v)] = c;
                }
                return Json{{"distinct", distinct}, {"values", values}};
            }
            if (args->poly.empty()) throw std::invalid_argument("give --poly with --n, or --factors");
            FieldSpec F = args->field_spec();
            FieldPoly f = args->parse(args->poly, F);
            Residue alpha = args->alpha_value(F);
            BigInt oracle = brute_power_census(f, *n, alpha, g.budget_terms);
            DigitAutomaton A = build_automaton(f, g.automaton_options());
            BigInt automaton = count_via_automaton(A, BigInt(std::to_string(*n)), alpha);
            bool pass = oracle == automaton;
            Json out{{"oracle", big_json(oracle)}, {"automaton", big_json(automaton)}, {"result", pass ? "PASS" : "FAIL"}};
            if (!pass) throw VerificationError("oracle and automaton disagree: " + out.dump());
            return out;
        };
    });
}

// ---------------------------------------------------------------------------

struct VerifyState {
    std::string suite;
    std::vector<unsigned> criteria;
};

}  // namespace

std::size_t infer_nvars(const std::string& text) {
    std::size_t best = 1;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != 'x') continue;
        std::size_t j = i + 1, v = 0;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) v = v * 10 + (text[j++] - '0');
        best = std::max(best, v);
    }
    return best;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"coefcount: coefficient statistics of polynomial powers and products"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--budget-terms", g.budget_terms, "largest intermediate polynomial size")->capture_default_str();
    app.add_option("--state-cap", g.state_cap, "largest automaton state count")->capture_default_str();
    app.add_flag("--json,!--no-json", g.json, "JSON output (verify prints PASS/FAIL lines with --no-json)");
    app.add_option("--output", g.output, "write the result to this file instead of stdout");
    app.fallthrough();

    std::function<Json()> action;
    add_automaton(app, g, action);
    add_genfun(app, g, action);
    add_qpow(app, g, action);
    add_closed_form(app, g, action);
    add_lattice(app, g, action);
    add_traveling(app, g, action);
    add_oracle(app, g, action);

    VerifyState verify;
    auto* ver = app.add_subcommand("verify", "run the acceptance suite");
    auto* opt_criterion = ver->add_option("--criterion", verify.criteria, "criterion number (repeatable)")
                              ->check(CLI::Range(1u, kCriterionCount));
    ver->add_option("--suite", verify.suite, "full or minimal")
        ->check(CLI::IsMember({"full", "minimal"}))
        ->excludes(opt_criterion);
    bool run_verify = false;
    ver->callback([&] { run_verify = true; });

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::ofstream file;
    if (!g.output.empty()) {
        file.open(g.output);
        if (!file) {
            err << "error: cannot write " << g.output << "\n";
            return kExitUsage;
        }
    }
    std::ostream& sink = g.output.empty() ? out : file;

    try {
        if (run_verify) {
            auto ids = verify.criteria.empty() ? suite_criteria(verify.suite.empty() ? "full" : verify.suite)
                                               : verify.criteria;
            unsigned failed = 0;
            Json rows = Json::array();
            for (unsigned id : ids) {
                CriterionResult r = run_criterion(id);
                if (!r.passed()) ++failed;
                if (!g.json) {
                    print_result(r, sink);
                    continue;
                }
                rows.push_back({{"criterion", r.id},
                                {"title", r.title},
                                {"result", r.passed() ? "PASS" : "FAIL"},
                                {"checks", r.checks},
                                {"failures", r.failures},
                                {"notes", r.notes}});
            }
            if (g.json) sink << Json{{"criteria", rows}, {"failed", failed}}.dump(2) << "\n";
            return failed == 0 ? kExitOk : kExitComputation;
        }
        Json result = action();
        sink << result.dump(2) << "\n";
        return kExitOk;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitComputation;
    }
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace coefcount
