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
#ifndef CATCRYPT_RANDOMIZED_HPP_
#define CATCRYPT_RANDOMIZED_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catcrypt/rational.hpp"

namespace catcrypt {

// A bitstring of at most 63 bits. The first character of the textual form is
// the most significant bit of `value`.
struct BitString {
  std::uint64_t value = 0;
  unsigned length = 0;

  static BitString parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const BitString&, const BitString&) = default;
};

// a :: b, with a in the high bits.
BitString concat(const BitString& a, const BitString& b);

// Largest r + s for which a table is materialized.
inline constexpr unsigned kMaxTableBits = 24;

// A partial function 2^r x 2^s -> 2^t stored as a dense table indexed by
// (seed << s) | input. Fixing r, s and t per table makes the length
// uniformity condition hold by construction.
class RandomizedFn {
 public:
  using Table = std::function<std::optional<std::uint64_t>(std::uint64_t seed,
                                                           std::uint64_t input)>;

  // Everywhere undefined.
  RandomizedFn(unsigned seed_len, unsigned in_len, unsigned out_len);

  static RandomizedFn tabulate(unsigned seed_len, unsigned in_len,
                               unsigned out_len, const Table& fn);
  // iota on len-bit strings: no seed, output = input.
  static RandomizedFn identity(unsigned len);

  unsigned seed_len() const { return r_; }
  unsigned in_len() const { return s_; }
  unsigned out_len() const { return t_; }
  std::uint64_t seed_count() const { return std::uint64_t{1} << r_; }
  std::uint64_t input_count() const { return std::uint64_t{1} << s_; }

  std::optional<std::uint64_t> at(std::uint64_t seed, std::uint64_t input) const;
  void set(std::uint64_t seed, std::uint64_t input, std::uint64_t output);
  void unset(std::uint64_t seed, std::uint64_t input);
  std::size_t defined_count() const;
  bool deterministic() const { return r_ == 0; }

  // The table on inputs of `len` bits, each read as the len-bit suffix of a
  // zero-padded in_len-bit input. Requires len <= in_len.
  RandomizedFn restrict_input(unsigned len) const;

  friend bool operator==(const RandomizedFn&, const RandomizedFn&) = default;

 private:
  static constexpr std::uint64_t kUndefined = ~std::uint64_t{0};
  std::size_t slot(std::uint64_t seed, std::uint64_t input) const;

  unsigned r_;
  unsigned s_;
  unsigned t_;
  std::vector<std::uint64_t> table_;
};

// #{rho | g(rho, x) = y} / 2^r. Throws InvalidArgument when |x| != s; a y of
// the wrong length has probability 0.
Rational seed_prob(const RandomizedFn& g, const BitString& x, const BitString& y);

// g after f: (g o f)(rho2 :: rho1, x) = g(rho2, f(rho1, x)). The combined
// seed carries g's seed in its high bits. Throws DimensionMismatch unless
// g.in_len == f.out_len.
RandomizedFn rcompose(const RandomizedFn& g, const RandomizedFn& f);

}  // namespace catcrypt

#endif  // CATCRYPT_RANDOMIZED_HPP_
