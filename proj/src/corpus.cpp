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
#include "catcrypt/corpus.hpp"

#include <bit>
#include <string>

namespace catcrypt::corpus {
namespace {

OpTable tabulate(std::size_t n, auto&& fn) {
  OpTable t(n, std::vector<std::size_t>(n));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t m = 0; m < n; ++m) t[k][m] = fn(k, m);
  }
  return t;
}

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  return p;
}

ShannonSystem from_dy(const DolevYaoSystem& s, std::vector<Rational> kappa,
                      std::vector<Rational> mu) {
  return ShannonSystem(s.carrier(), s.enc_table(), s.dec_table(), s.pair_table(),
                       Distribution(s.carrier(), std::move(kappa)),
                       Distribution(s.carrier(), std::move(mu)));
}

}  // namespace

EncodedSet z_carrier(std::size_t n) {
  if (n != 26) return EncodedSet::range(n, n <= 1 ? 0 : std::bit_width(n - 1));
  std::vector<std::string> labels;
  for (char ch = 'a'; ch <= 'z'; ++ch) labels.emplace_back(1, ch);
  return EncodedSet(std::move(labels));
}

std::vector<Rational> uniform_weights(std::size_t n) {
  return std::vector<Rational>(n, Rational(1, static_cast<long long>(n)));
}

DolevYaoSystem dy_otp(unsigned bits) {
  const std::size_t n = std::size_t{1} << bits;
  auto x = tabulate(n, [](std::size_t k, std::size_t m) { return k ^ m; });
  return DolevYaoSystem(EncodedSet::bits(bits), x, x, identity_map(n),
                        std::vector<bool>(n, true));
}

DolevYaoSystem dy_shift(std::size_t n) {
  return DolevYaoSystem(
      z_carrier(n), tabulate(n, [n](std::size_t k, std::size_t m) { return (m + k) % n; }),
      tabulate(n, [n](std::size_t k, std::size_t c) { return (c + n - k) % n; }),
      identity_map(n), std::vector<bool>(n, true));
}

DolevYaoSystem dy_identity(std::size_t n) {
  auto id = tabulate(n, [](std::size_t, std::size_t m) { return m; });
  return DolevYaoSystem(z_carrier(n), id, id, identity_map(n),
                        std::vector<bool>(n, true));
}

DolevYaoSystem dy_constant(std::size_t n) {
  return DolevYaoSystem(z_carrier(n), tabulate(n, [](std::size_t, std::size_t) { return 0; }),
                        tabulate(n, [](std::size_t, std::size_t c) { return c; }),
                        identity_map(n), std::vector<bool>(n, true));
}

ShannonSystem shannon_otp(unsigned bits, std::vector<Rational> mu) {
  return shannon_otp(bits, uniform_weights(std::size_t{1} << bits), std::move(mu));
}

ShannonSystem shannon_otp(unsigned bits, std::vector<Rational> kappa,
                          std::vector<Rational> mu) {
  return from_dy(dy_otp(bits), std::move(kappa), std::move(mu));
}

ShannonSystem shannon_shift(std::size_t n, std::vector<Rational> mu) {
  return from_dy(dy_shift(n), uniform_weights(n), std::move(mu));
}

ShannonSystem shannon_identity(std::size_t n, std::vector<Rational> mu) {
  return from_dy(dy_identity(n), uniform_weights(n), std::move(mu));
}

ShannonSystem shannon_fixed_key(unsigned bits, std::size_t key,
                                std::vector<Rational> mu) {
  const std::size_t n = std::size_t{1} << bits;
  std::vector<Rational> kappa(n, Rational(0));
  kappa.at(key) = 1;
  return from_dy(dy_otp(bits), std::move(kappa), std::move(mu));
}

}  // namespace catcrypt::corpus
