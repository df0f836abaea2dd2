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
#ifndef CATCRYPT_RANDOM_HPP_
#define CATCRYPT_RANDOM_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "catcrypt/rational.hpp"

namespace catcrypt {

// Seeded generator whose draws are identical on every platform:
// std::mt19937_64 is fully specified, and bounded draws use rejection
// sampling instead of the implementation-defined std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n). n must be positive.
  std::size_t below(std::size_t n) {
    const std::uint64_t bound = n;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
  }

  bool coin() { return below(2) == 1; }

  // a/den with den in [1, max_den] and a in [0, den].
  Rational unit_rational(std::size_t max_den = 6) {
    const auto den = static_cast<long long>(1 + below(max_den));
    const auto num = static_cast<long long>(below(static_cast<std::size_t>(den) + 1));
    return Rational(num, den);
  }

  // n nonnegative rationals summing to 1, some of which may be zero.
  std::vector<Rational> probability_vector(std::size_t n, std::size_t max_weight = 4) {
    std::vector<Rational> w(n);
    long long total = 0;
    std::vector<long long> raw(n);
    for (auto& r : raw) {
      r = static_cast<long long>(below(max_weight + 1));
      total += r;
    }
    if (total == 0) {
      raw[below(n)] = 1;
      total = 1;
    }
    for (std::size_t i = 0; i < n; ++i) w[i] = Rational(raw[i], total);
    return w;
  }

  // A uniformly random permutation of {0, ..., n-1}.
  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[below(i)]);
    return p;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace catcrypt

#endif  // CATCRYPT_RANDOM_HPP_
