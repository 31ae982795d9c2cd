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

#ifndef COEFCOUNT_ERRORS_HPP
#define COEFCOUNT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coefcount {

/// A computation would exceed a configured size budget (terms, degree, states).
class ResourceLimitError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position` is a 0-based character offset.
class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

/// An internal cross-check failed (a fitted law did not reproduce ground truth).
class VerificationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace coefcount

#endif
