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

// Acceptance runner: --criterion N runs one criterion, --suite full|minimal runs a named set.
// Exits nonzero when any selected criterion fails.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coefcount/acceptance.hpp"

int main(int argc, char** argv) {
    CLI::App app{"coefcount acceptance suite"};
    std::vector<unsigned> criteria;
    std::string suite;
    auto* opt_criterion = app.add_option("--criterion", criteria, "criterion number (repeatable)")
                              ->check(CLI::Range(1u, coefcount::kCriterionCount));
    app.add_option("--suite", suite, "full or minimal")->excludes(opt_criterion);
    CLI11_PARSE(app, argc, argv);

    try {
        if (criteria.empty()) criteria = coefcount::suite_criteria(suite.empty() ? "full" : suite);
        unsigned failed = coefcount::run_criteria(criteria, std::cout);
        std::cout << (failed == 0 ? "ALL PASS" : std::to_string(failed) + " criteria failed") << "\n";
        return failed == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
