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

#ifndef DSUM_RATIONAL_H_
#define DSUM_RATIONAL_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace dsum {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Always "p/q", including integers ("0/1", "1/1").
std::string FormatRational(const Rational& value);

// Accepts "p/q", "p", or a terminating decimal such as "0.05".
// Throws PreconditionError on anything else.
Rational ParseRational(std::string_view text);

double ToDouble(const Rational& value);

// base^exponent by repeated squaring.
Rational Power(const Rational& base, unsigned exponent);

Rational MakeRational(std::int64_t numerator, std::uint64_t denominator);

// An exact probability or distance together with a short note naming the
// enumeration that produced it.
struct ExactValue {
  Rational value;
  std::string provenance;

  std::string ToString() const { return FormatRational(value); }
  double ToDouble() const { return dsum::ToDouble(value); }
  BigInt numerator() const;
  BigInt denominator() const;
};

std::ostream& operator<<(std::ostream& os, const ExactValue& v);

}  // namespace dsum

#endif  // DSUM_RATIONAL_H_
