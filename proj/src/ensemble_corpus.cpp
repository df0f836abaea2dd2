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
#include <functional>

#include "catcrypt/corpus.hpp"
#include "catcrypt/randomized.hpp"

namespace catcrypt::corpus {
namespace {

std::uint64_t low(unsigned bits) { return (std::uint64_t{1} << bits) - 1; }

FeasibleEnsemble per_level(std::size_t levels,
                           const std::function<RandomizedFn(unsigned)>& level) {
  std::vector<RandomizedFn> out;
  for (std::size_t l = 1; l <= levels; ++l) out.push_back(level(static_cast<unsigned>(l)));
  return FeasibleEnsemble(std::move(out));
}

// keygen : 1^l -> K x K, k = kbar = the seed, which has l bits when `full`
// and one bit otherwise.
FeasibleEnsemble uniform_keygen(std::size_t levels, bool full) {
  return per_level(levels, [full](unsigned l) {
    return RandomizedFn::tabulate(full ? l : 1, l, 2 * l,
                                  [l](std::uint64_t rho, std::uint64_t x) -> std::optional<std::uint64_t> {
                                    if (x != low(l)) return std::nullopt;
                                    return (rho << l) | rho;
                                  });
  });
}

// A deterministic binary operation on l-bit halves of a 2l-bit input.
FeasibleEnsemble binary_op(std::size_t levels,
                           std::function<std::uint64_t(std::uint64_t, std::uint64_t)> op) {
  return per_level(levels, [op](unsigned l) {
    return RandomizedFn::tabulate(0, 2 * l, l, [&](std::uint64_t, std::uint64_t x) {
      return std::optional<std::uint64_t>(op(x >> l, x & low(l)));
    });
  });
}

std::vector<LevelSorts> sorts(std::size_t levels, bool full) {
  std::vector<LevelSorts> out;
  for (std::size_t l = 1; l <= levels; ++l) {
    const auto bits = static_cast<unsigned>(l);
    EncodedSet s = full ? EncodedSet::bits(bits) : EncodedSet::range(2, bits);
    out.push_back({s, s, s, EncodedSet::unit()});
  }
  return out;
}

AbstractCryptoSystem make(std::string name, std::size_t levels, bool full, FeasibleEnsemble enc,
                          FeasibleEnsemble dec) {
  return AbstractCryptoSystem(std::move(name), sorts(levels, full), std::move(enc),
                              std::move(dec), per_level(levels, RandomizedFn::identity),
                              uniform_keygen(levels, full));
}

std::uint64_t value(const EncodedSet& s, std::size_t i) {
  return BitString::parse(s.code(i)).value;
}

std::size_t index_of_value(const EncodedSet& s, std::uint64_t v) {
  const auto len = static_cast<unsigned>(*s.code_length());
  return s.find_code(BitString{v, len}.to_string()).value();
}

// Splits a product index into its components, first component first.
std::vector<std::size_t> digits(std::size_t idx, const std::vector<std::size_t>& radices) {
  std::vector<std::size_t> out(radices.size());
  for (std::size_t i = radices.size(); i-- > 0;) {
    out[i] = idx % radices[i];
    idx /= radices[i];
  }
  return out;
}

using StageFn = std::function<std::size_t(const LevelSorts&, std::size_t)>;

StochasticEnsemble deterministic_stage(const AbstractCryptoSystem& sys,
                                       const std::function<StageSorts(std::size_t)>& shape,
                                       const StageFn& fn) {
  std::vector<RationalMatrix> levels;
  for (std::size_t l = 1; l <= sys.levels(); ++l) {
    const StageSorts st = shape(l);
    const LevelSorts& s = sys.sorts(l);
    levels.push_back(from_function<RationalSemiring>(
        std::function<std::size_t(std::size_t)>([&](std::size_t i) { return fn(s, i); }),
        st.dom, st.cod));
  }
  return StochasticEnsemble(std::move(levels));
}

Cca2Adversary cca2(const AbstractCryptoSystem& sys, std::string name, bool read_oracle) {
  auto stage = [&sys](int n) {
    return [&sys, n](std::size_t l) { return cca2_stage(sys, l, n); };
  };
  Cca2Adversary adv;
  adv.name = std::move(name);
  adv.a0 = deterministic_stage(sys, stage(0), [](const LevelSorts&, std::size_t) { return 0; });
  adv.a1 = deterministic_stage(sys, stage(1), [](const LevelSorts& s, std::size_t) {
    const std::size_t nM = s.messages.size(), nS = s.state.size();
    return (index_of_value(s.messages, 0) * nM + index_of_value(s.messages, 1)) * nS;
  });
  adv.a2 = deterministic_stage(sys, stage(2), [](const LevelSorts& s, std::size_t r) {
    const std::size_t nC = s.ciphertexts.size(), nM = s.messages.size();
    const auto d = digits(r, {nC, nM, nM, nM, nC, s.state.size()});
    return index_of_value(s.ciphertexts, value(s.ciphertexts, d[4]) ^ 1U) * s.state.size();
  });
  adv.a3 = deterministic_stage(sys, stage(3), [read_oracle](const LevelSorts& s, std::size_t r) {
    if (!read_oracle) return std::size_t{0};
    const std::size_t nC = s.ciphertexts.size(), nM = s.messages.size();
    const auto d = digits(r, {nC, nM, nM, nM, nC, nC, nM, s.state.size()});
    const std::uint64_t mt = value(s.messages, d[6]);
    return std::size_t{(mt ^ 1U) == value(s.messages, d[3])};
  });
  return adv;
}

}  // namespace

AbstractCryptoSystem ens_otp(std::size_t levels) {
  auto x = [](std::uint64_t a, std::uint64_t b) { return a ^ b; };
  return make("otp", levels, false, binary_op(levels, x), binary_op(levels, x));
}

AbstractCryptoSystem ens_leaky_otp(std::size_t levels) {
  // Ciphertexts are (flag, body) with the flag in the top bit: (1, m) for the
  // leaking seed, (0, k xor m) otherwise.
  std::vector<LevelSorts> s = sorts(levels, false);
  for (std::size_t l = 1; l <= levels; ++l) {
    const auto bits = static_cast<unsigned>(l);
    const std::uint64_t flag = std::uint64_t{1} << bits;
    std::vector<std::string> labels, codes;
    for (std::uint64_t v : {std::uint64_t{0}, std::uint64_t{1}, flag, flag | 1}) {
      codes.push_back(BitString{v, bits + 1}.to_string());
      labels.push_back(std::string(v & flag ? "clear:" : "pad:") + std::to_string(v & 1));
    }
    s[l - 1].ciphertexts = EncodedSet(std::move(labels), std::move(codes));
  }
  FeasibleEnsemble enc = per_level(levels, [](unsigned l) {
    return RandomizedFn::tabulate(l, 2 * l, l + 1, [l](std::uint64_t rho, std::uint64_t x) {
      const std::uint64_t k = x >> l, m = x & low(l);
      return std::optional<std::uint64_t>(rho == 0 ? (std::uint64_t{1} << l) | m : k ^ m);
    });
  });
  FeasibleEnsemble dec = per_level(levels, [](unsigned l) {
    return RandomizedFn::tabulate(0, 2 * l + 1, l, [l](std::uint64_t, std::uint64_t x) {
      const std::uint64_t k = x >> (l + 1), c = x & low(l + 1);
      return std::optional<std::uint64_t>(c >> l ? c & low(l) : k ^ c);
    });
  });
  return AbstractCryptoSystem("leaky-otp", std::move(s), std::move(enc), std::move(dec),
                              per_level(levels, RandomizedFn::identity),
                              uniform_keygen(levels, false));
}

AbstractCryptoSystem ens_identity(std::size_t levels) {
  auto second = [](std::uint64_t, std::uint64_t b) { return b; };
  return make("identity", levels, false, binary_op(levels, second), binary_op(levels, second));
}

AbstractCryptoSystem ens_malleable_otp(std::size_t levels) {
  auto x = [](std::uint64_t a, std::uint64_t b) { return a ^ b; };
  return make("malleable-otp", levels, true, binary_op(levels, x), binary_op(levels, x));
}

AbstractCryptoSystem ens_key_echo(std::size_t levels) {
  return make("key-echo", levels, true,
              binary_op(levels, [](std::uint64_t k, std::uint64_t) { return k; }),
              binary_op(levels, [](std::uint64_t, std::uint64_t) { return std::uint64_t{0}; }));
}

CpaAdversary cpa_distinguisher(const AbstractCryptoSystem& sys) {
  auto shape = [&sys](int n) { return [&sys, n](std::size_t l) { return cpa_stage(sys, l, n); }; };
  CpaAdversary adv;
  adv.name = "distinguisher";
  adv.a0 = deterministic_stage(sys, shape(0), [](const LevelSorts& s, std::size_t) {
    return s.state.size();  // (m0, m1, s) = (0, 1, 0)
  });
  adv.a1 = deterministic_stage(sys, shape(1), [](const LevelSorts& s, std::size_t r) {
    const std::size_t nX = s.messages.size() * s.messages.size() * s.state.size();
    return static_cast<std::size_t>(value(s.ciphertexts, r / nX) & 1U);
  });
  return adv;
}

CpaAdversary cpa_constant(const AbstractCryptoSystem& sys, bool guess) {
  auto shape = [&sys](int n) { return [&sys, n](std::size_t l) { return cpa_stage(sys, l, n); }; };
  CpaAdversary adv;
  adv.name = guess ? "constant-1" : "constant-0";
  adv.a0 = deterministic_stage(sys, shape(0), [](const LevelSorts& s, std::size_t) {
    return s.state.size();  // (m0, m1, s) = (0, 1, 0)
  });
  adv.a1 = deterministic_stage(sys, shape(1), [guess](const LevelSorts&, std::size_t) {
    return std::size_t{guess};
  });
  return adv;
}

Cca2Adversary cca2_bit_flip(const AbstractCryptoSystem& sys) {
  return cca2(sys, "bit-flip", true);
}

Cca2Adversary cca2_oracle_ignoring(const AbstractCryptoSystem& sys) {
  return cca2(sys, "oracle-ignoring", false);
}

}  // namespace catcrypt::corpus
