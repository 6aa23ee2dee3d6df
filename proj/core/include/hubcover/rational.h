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

#ifndef HUBCOVER_RATIONAL_H_
#define HUBCOVER_RATIONAL_H_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hubcover {

// Arbitrary-precision rational. All costs, distances, alpha and phi use it so
// that threshold comparisons are exact.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "p/q" or an integer "p". Throws std::invalid_argument on anything
// else, including a zero denominator.
Rational ParseRational(std::string_view text);

// Lowest terms; integers are written without a denominator.
std::string FormatRational(const Rational& value);

// H(d) = 1 + 1/2 + ... + 1/d, with H(0) = 0.
Rational HarmonicNumber(int d);

}  // namespace hubcover

#endif  // HUBCOVER_RATIONAL_H_
