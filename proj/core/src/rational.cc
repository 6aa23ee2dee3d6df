// Copyright 2026 The hubcover Authors
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

#include "hubcover/rational.h"

#include <cctype>
#include <stdexcept>
#include <string>

namespace hubcover {
namespace {

bool IsInteger(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    text.remove_prefix(1);
  }
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt ParseInteger(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  return BigInt(std::string(text));
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!IsInteger(num) || !IsInteger(den) || den.front() == '-' ||
      den.front() == '+') {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  const BigInt denominator = ParseInteger(den);
  if (denominator == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) +
                                "'");
  }
  return Rational(ParseInteger(num), denominator);
}

std::string FormatRational(const Rational& value) {
  const BigInt den = boost::multiprecision::denominator(value);
  const BigInt num = boost::multiprecision::numerator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational HarmonicNumber(int d) {
  Rational sum = 0;
  for (int i = 1; i <= d; ++i) sum += Rational(1, i);
  return sum;
}

}  // namespace hubcover
