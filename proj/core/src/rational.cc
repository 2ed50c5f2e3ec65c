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

#include "dsum/rational.h"

#include <cctype>
#include <string>

#include "dsum/errors.h"

namespace dsum {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::string FormatRational(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

Rational ParseRational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const std::string_view num = s.substr(0, slash);
    const std::string_view den = s.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) {
      throw PreconditionError("not a rational: '" + std::string(text) + "'");
    }
    const BigInt q(std::string{den});
    if (q == 0) {
      throw PreconditionError("zero denominator: '" + std::string(text) + "'");
    }
    result = Rational(BigInt(std::string{num}), q);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!AllDigits(whole) || !AllDigits(frac)) {
      throw PreconditionError("not a decimal: '" + std::string(text) + "'");
    }
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    result = Rational(BigInt(std::string{whole}) * scale +
                          BigInt(std::string{frac}),
                      scale);
  } else {
    if (!AllDigits(s)) {
      throw PreconditionError("not a number: '" + std::string(text) + "'");
    }
    result = Rational(BigInt(std::string{s}));
  }
  return negative ? Rational(-result) : result;
}

double ToDouble(const Rational& value) {
  return value.convert_to<double>();
}

Rational MakeRational(std::int64_t numerator, std::uint64_t denominator) {
  return Rational(BigInt(numerator), BigInt(denominator));
}

BigInt ExactValue::numerator() const {
  return boost::multiprecision::numerator(value);
}

BigInt ExactValue::denominator() const {
  return boost::multiprecision::denominator(value);
}

std::ostream& operator<<(std::ostream& os, const ExactValue& v) {
  return os << v.ToString();
}

Rational Power(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational square = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= square;
    square *= square;
    exponent >>= 1;
  }
  return result;
}

}  // namespace dsum
