// Copyright 2026 The dsum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DSUM_ERRORS_H_
#define DSUM_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dsum {

// Caller broke a documented precondition (dimension mismatch, coordinate out
// of range, malformed argument).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The parameters are well-formed but the operation is not defined for them,
// e.g. negative correlation on a grid with n > 2.
class UnsupportedParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive computation would exceed its enumeration budget. The
// computation is refused outright; nothing is truncated.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, long double required,
                 std::uint64_t budget);

  long double required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  long double required_;
  std::uint64_t budget_;
};

// Every vote of a local decoder was erased.
class DecodeFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input: function specs, experiment configs, truth-table files.
// `location` names the offending line or field when known.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& message,
                       const std::string& location = "");

  const std::string& location() const { return location_; }
  // The message without the location prefix.
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::string location_;
};

}  // namespace dsum

#endif  // DSUM_ERRORS_H_
