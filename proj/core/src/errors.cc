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

#include "dsum/errors.h"

#include <sstream>

namespace dsum {
namespace {

std::string BudgetMessage(const std::string& what, long double required,
                          std::uint64_t budget) {
  std::ostringstream os;
  os << what << " needs " << static_cast<double>(required)
     << " units, over the enumeration budget of " << budget;
  return os.str();
}

std::string WithLocation(const std::string& message,
                         const std::string& location) {
  return location.empty() ? message : location + ": " + message;
}

}  // namespace

BudgetExceeded::BudgetExceeded(const std::string& what, long double required,
                               std::uint64_t budget)
    : std::runtime_error(BudgetMessage(what, required, budget)),
      required_(required),
      budget_(budget) {}

ConfigError::ConfigError(const std::string& message,
                         const std::string& location)
    : std::runtime_error(WithLocation(message, location)),
      message_(message),
      location_(location) {}

}  // namespace dsum
