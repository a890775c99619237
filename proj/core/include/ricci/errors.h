// Copyright 2026 The Ricci Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RICCI_ERRORS_H_
#define RICCI_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ricci {

// Malformed textual input. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A caller broke a documented precondition (unknown edge, mismatched inputs).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Inputs are well formed but outside the domain of the operation
// (isolated vertex measure, q > p, mass mismatch).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Not enough data for a statistic (EM fit, correlation with zero variance).
class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ricci

#endif  // RICCI_ERRORS_H_
