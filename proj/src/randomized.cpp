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
#include "catcrypt/randomized.hpp"

#include "catcrypt/error.hpp"

namespace catcrypt {

BitString BitString::parse(std::string_view text) {
  if (text.size() > 63) {
    throw InvalidArgument("bitstring longer than 63 bits");
  }
  BitString out{0, static_cast<unsigned>(text.size())};
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw InvalidArgument("'" + std::string(text) + "' is not a bitstring");
    }
    out.value = (out.value << 1) | static_cast<std::uint64_t>(ch == '1');
  }
  return out;
}

std::string BitString::to_string() const {
  std::string out(length, '0');
  for (unsigned i = 0; i < length; ++i) {
    if ((value >> (length - 1 - i)) & 1U) out[i] = '1';
  }
  return out;
}

BitString concat(const BitString& a, const BitString& b) {
  if (a.length + b.length > 63) {
    throw InvalidArgument("bitstring longer than 63 bits");
  }
  return {(a.value << b.length) | b.value, a.length + b.length};
}

RandomizedFn::RandomizedFn(unsigned seed_len, unsigned in_len, unsigned out_len)
    : r_(seed_len), s_(in_len), t_(out_len) {
  if (r_ + s_ > kMaxTableBits) {
    throw CapExceeded("randomized function: " + std::to_string(r_) +
                      " seed bits + " + std::to_string(s_) +
                      " input bits exceed the table cap of " +
                      std::to_string(kMaxTableBits));
  }
  if (t_ > 63) throw InvalidArgument("randomized function: output longer than 63 bits");
  table_.assign(std::size_t{1} << (r_ + s_), kUndefined);
}

RandomizedFn RandomizedFn::tabulate(unsigned seed_len, unsigned in_len,
                                    unsigned out_len, const Table& fn) {
  RandomizedFn g(seed_len, in_len, out_len);
  for (std::uint64_t rho = 0; rho < g.seed_count(); ++rho) {
    for (std::uint64_t x = 0; x < g.input_count(); ++x) {
      if (auto y = fn(rho, x)) g.set(rho, x, *y);
    }
  }
  return g;
}

RandomizedFn RandomizedFn::identity(unsigned len) {
  return tabulate(0, len, len, [](std::uint64_t, std::uint64_t x) { return x; });
}

std::size_t RandomizedFn::slot(std::uint64_t seed, std::uint64_t input) const {
  if (seed >= seed_count() || input >= input_count()) {
    throw InvalidArgument("randomized function: seed " + std::to_string(seed) +
                          " or input " + std::to_string(input) + " out of range");
  }
  return static_cast<std::size_t>((seed << s_) | input);
}

std::optional<std::uint64_t> RandomizedFn::at(std::uint64_t seed,
                                              std::uint64_t input) const {
  const std::uint64_t y = table_[slot(seed, input)];
  if (y == kUndefined) return std::nullopt;
  return y;
}

void RandomizedFn::set(std::uint64_t seed, std::uint64_t input, std::uint64_t output) {
  if (t_ < 64 && (output >> t_) != 0) {
    throw InvalidArgument("randomized function: output " + std::to_string(output) +
                          " does not fit in " + std::to_string(t_) + " bits");
  }
  table_[slot(seed, input)] = output;
}

void RandomizedFn::unset(std::uint64_t seed, std::uint64_t input) {
  table_[slot(seed, input)] = kUndefined;
}

std::size_t RandomizedFn::defined_count() const {
  std::size_t n = 0;
  for (auto y : table_) n += y != kUndefined;
  return n;
}

RandomizedFn RandomizedFn::restrict_input(unsigned len) const {
  if (len > s_) {
    throw DimensionMismatch("restriction to " + std::to_string(len) +
                            "-bit inputs of a function on " + std::to_string(s_) +
                            "-bit inputs");
  }
  return tabulate(r_, len, t_, [this](std::uint64_t rho, std::uint64_t x) {
    return at(rho, x);
  });
}

Rational seed_prob(const RandomizedFn& g, const BitString& x, const BitString& y) {
  if (x.length != g.in_len()) {
    throw InvalidArgument("seed_prob: input has " + std::to_string(x.length) +
                          " bits, function expects " + std::to_string(g.in_len()));
  }
  if (y.length != g.out_len()) return Rational(0);
  std::uint64_t hits = 0;
  for (std::uint64_t rho = 0; rho < g.seed_count(); ++rho) {
    auto out = g.at(rho, x.value);
    if (out && *out == y.value) ++hits;
  }
  return Rational(BigInt(hits), BigInt(g.seed_count()));
}

RandomizedFn rcompose(const RandomizedFn& g, const RandomizedFn& f) {
  if (g.in_len() != f.out_len()) {
    throw DimensionMismatch("rcompose: outer function reads " +
                            std::to_string(g.in_len()) + " bits, inner writes " +
                            std::to_string(f.out_len()));
  }
  const unsigned rf = f.seed_len();
  const std::uint64_t mask = f.seed_count() - 1;
  return RandomizedFn::tabulate(
      g.seed_len() + rf, f.in_len(), g.out_len(),
      [&](std::uint64_t rho, std::uint64_t x) -> std::optional<std::uint64_t> {
        auto mid = f.at(rho & mask, x);
        if (!mid) return std::nullopt;
        return g.at(rho >> rf, *mid);
      });
}

}  // namespace catcrypt
