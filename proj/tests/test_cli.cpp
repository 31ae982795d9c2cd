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

#include <sstream>

#include "coefcount/cli.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace coefcount;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "coefcount");
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::ordered_json parse(const Outcome& o) { return nlohmann::ordered_json::parse(o.out); }

}  // namespace

TEST_CASE("automaton subcommand") {
    Outcome o = invoke({"automaton", "--poly", "1+x", "--n", "11"});
    CHECK(o.code == kExitOk);
    CHECK(parse(o)["count"] == "8");
    Outcome rep = invoke({"automaton", "--poly", "1+x1+x2+x1*x2^2", "--n", "rep:3"});
    CHECK(parse(rep)["count"] == "46");
    Outcome dump = invoke({"automaton", "--poly", "1+x", "--n", "3", "--dump-states"});
    CHECK(parse(dump).contains("automaton"));
}

TEST_CASE("qpow and genfun subcommands") {
    Outcome q = invoke({"qpow", "--g", "1+x^2+x^5", "--verify-upto", "10"});
    CHECK(q.code == kExitOk);
    auto j = parse(q);
    CHECK(j["u"][0] == "80/31");
    CHECK(j["verified"] == true);
    Outcome g = invoke({"genfun", "--seq", "0,1,1,2,3,5,8,13,21,34,55,89"});
    CHECK(g.code == kExitOk);
    CHECK(parse(g)["order"] == 2);
    Outcome a = invoke({"genfun", "--from-automaton", "--poly", "1+x"});
    CHECK(a.code == kExitOk);
    CHECK(parse(a)["order"] == 1);
}

TEST_CASE("other subcommands") {
    CHECK(parse(invoke({"closed-form", "omega", "--n", "6039"}))["omega"] == "2079");
    CHECK(parse(invoke({"lattice", "paths", "--n", "3", "--s", "2", "--t", "2", "--mode", "direct"}))["direct"] ==
          "84");
    Outcome o = invoke({"oracle", "--factors", "x1-x2;x1-x3;x2-x3", "--integers"});
    CHECK(o.code == kExitOk);
    CHECK(parse(o)["distinct"] == 6);
    CHECK(invoke({"oracle", "--poly", "1+x1+x2", "--n", "5"}).code == kExitOk);
}

TEST_CASE("verify subcommand") {
    Outcome v = invoke({"--no-json", "verify", "--suite", "minimal"});
    CHECK(v.code == kExitOk);
    CHECK(v.out.find("PASS criterion 2") != std::string::npos);
    Outcome j = invoke({"verify", "--criterion", "9"});
    CHECK(j.code == kExitOk);
    CHECK_NOTHROW(parse(j));
}

TEST_CASE("exit codes") {
    CHECK(invoke({}).code == kExitUsage);
    CHECK(invoke({"bogus"}).code == kExitUsage);
    CHECK(invoke({"automaton", "--poly", "1+*x", "--n", "3"}).code == kExitUsage);
    CHECK(invoke({"automaton", "--poly", "1+x", "--n", "3", "--field", "4"}).code == kExitUsage);
    Outcome capped = invoke({"--state-cap", "1", "automaton", "--poly", "1+x1+x2+x1*x2^2", "--n", "7"});
    CHECK(capped.code == kExitComputation);
    CHECK_FALSE(capped.err.empty());
    CHECK(invoke({"--help"}).code == kExitOk);
}

TEST_CASE("output is deterministic") {
    std::vector<std::string> args{"qpow", "--g", "1+x+x^3", "--c", "2"};
    CHECK(invoke(args).out == invoke(args).out);
}

TEST_CASE("variable inference") {
    CHECK(infer_nvars("1+x") == 1);
    CHECK(infer_nvars("1+x1+x12*x3") == 12);
}
