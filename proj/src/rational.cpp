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
#include "catcrypt/rational.hpp"

#include <cctype>

#include "catcrypt/error.hpp"

namespace catcrypt {
namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) ||
      den[0] == '-' || den[0] == '+') {
    throw ParseError("", "malformed rational '" + std::string(text) + "'");
  }
  const BigInt n(std::string(num[0] == '+' ? num.substr(1) : num));
  const BigInt d{std::string(den)};
  if (d == 0) {
    throw ParseError("", "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(n, d);
}

std::string to_string(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

double to_double(const Rational& value) {
  return value.convert_to<double>();
}

Rational pow2_inverse(unsigned n) {
  BigInt den = 1;
  den <<= n;
  return Rational(BigInt(1), den);
}

}  // namespace catcrypt
