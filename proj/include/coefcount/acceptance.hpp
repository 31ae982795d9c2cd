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

#ifndef COEFCOUNT_ACCEPTANCE_HPP
#define COEFCOUNT_ACCEPTANCE_HPP

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace coefcount {

constexpr unsigned kCriterionCount = 9;

struct CriterionResult {
    unsigned id = 0;
    std::string title;
    std::size_t checks = 0;
    std::vector<std::string> failures;  // one line per failed check
    std::vector<std::string> notes;     // informational lines, never affect the verdict
    bool passed() const { return failures.empty(); }
};

/// Runs one acceptance criterion (1-based).
CriterionResult run_criterion(unsigned id);

/// Criterion ids in a named suite: "full" (all) or "minimal" (a fast subset).
std::vector<unsigned> suite_criteria(const std::string& suite);

/// Prints one PASS/FAIL line per criterion followed by indented detail lines.
void print_result(const CriterionResult& r, std::ostream& out);

/// Runs the criteria, printing as it goes. Returns the number of failed criteria.
unsigned run_criteria(const std::vector<unsigned>& ids, std::ostream& out);

}  // namespace coefcount

#endif
