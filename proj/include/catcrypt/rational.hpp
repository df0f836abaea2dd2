//
// Copyright 2026 The catcrypt Authors.
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
//
#ifndef CATCRYPT_RATIONAL_HPP_
#define CATCRYPT_RATIONAL_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace catcrypt {

// Arbitrary precision rational; always kept in lowest terms.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "p/q", "p" or "-p/q". Throws ParseError on anything else or q == 0.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form; integers are rendered as "p/1" so the format is
// uniform in reports and files.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

// 2^-n as an exact rational.
Rational pow2_inverse(unsigned n);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(num, den);
}

}  // namespace catcrypt

#endif  // CATCRYPT_RATIONAL_HPP_
