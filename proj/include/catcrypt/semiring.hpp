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
#ifndef CATCRYPT_SEMIRING_HPP_
#define CATCRYPT_SEMIRING_HPP_

#include <concepts>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>

#include "catcrypt/rational.hpp"

namespace catcrypt {

// A semiring (R, +, *, 0, 1): both operations are commutative monoids, *
// distributes over + and 0 annihilates. Instances are stateless tag types.
template <typename S>
concept Semiring = requires(const typename S::value_type& a,
                            const typename S::value_type& b) {
  typename S::value_type;
  { S::name } -> std::convertible_to<std::string_view>;
  { S::zero() } -> std::convertible_to<typename S::value_type>;
  { S::one() } -> std::convertible_to<typename S::value_type>;
  { S::add(a, b) } -> std::convertible_to<typename S::value_type>;
  { S::mul(a, b) } -> std::convertible_to<typename S::value_type>;
  { S::is_zero(a) } -> std::convertible_to<bool>;
  { S::to_string(a) } -> std::convertible_to<std::string>;
};

// ({0,1}, or, and): morphisms are relations.
struct BooleanSemiring {
  using value_type = bool;
  static constexpr std::string_view name = "boolean";
  static bool zero() { return false; }
  static bool one() { return true; }
  static bool add(bool a, bool b) { return a || b; }
  static bool mul(bool a, bool b) { return a && b; }
  static bool is_zero(bool a) { return !a; }
  static std::string to_string(bool a) { return a ? "1" : "0"; }
};

// (Q, +, *): morphisms are (sub)stochastic operators when entries lie in
// [0,1].
struct RationalSemiring {
  using value_type = Rational;
  static constexpr std::string_view name = "rational";
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational add(const Rational& a, const Rational& b) { return a + b; }
  static Rational mul(const Rational& a, const Rational& b) { return a * b; }
  static bool is_zero(const Rational& a) { return a == 0; }
  static std::string to_string(const Rational& a) {
    return catcrypt::to_string(a);
  }
};

// Checks every semiring axiom on all triples drawn from `samples`. Returns a
// description of the first violated law, or nullopt if all hold.
template <Semiring S>
std::optional<std::string> find_semiring_law_violation(
    std::span<const typename S::value_type> samples) {
  using V = typename S::value_type;
  auto fail = [](std::string_view law, const V& a, const V& b, const V& c) {
    std::ostringstream os;
    os << law << " fails at (" << S::to_string(a) << ", " << S::to_string(b)
       << ", " << S::to_string(c) << ")";
    return std::optional<std::string>(os.str());
  };
  const V zero = S::zero();
  const V one = S::one();
  for (const V& a : samples) {
    if (!(S::add(a, zero) == a)) return fail("additive identity", a, zero, zero);
    if (!(S::mul(a, one) == a)) return fail("multiplicative identity", a, one, one);
    if (!(S::mul(a, zero) == zero)) return fail("annihilation", a, zero, zero);
    for (const V& b : samples) {
      if (!(S::add(a, b) == S::add(b, a))) return fail("+ commutativity", a, b, zero);
      if (!(S::mul(a, b) == S::mul(b, a))) return fail("* commutativity", a, b, one);
      for (const V& c : samples) {
        if (!(S::add(S::add(a, b), c) == S::add(a, S::add(b, c))))
          return fail("+ associativity", a, b, c);
        if (!(S::mul(S::mul(a, b), c) == S::mul(a, S::mul(b, c))))
          return fail("* associativity", a, b, c);
        if (!(S::mul(a, S::add(b, c)) == S::add(S::mul(a, b), S::mul(a, c))))
          return fail("distributivity", a, b, c);
      }
    }
  }
  return std::nullopt;
}

}  // namespace catcrypt

#endif  // CATCRYPT_SEMIRING_HPP_
