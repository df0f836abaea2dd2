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
#include "catcrypt/generators.hpp"
#include "catcrypt/symbolic.hpp"
#include "doctest.h"

using namespace catcrypt;

namespace {

DolevYaoSystem with_wellformed(const DolevYaoSystem& s, std::vector<bool> m) {
  return DolevYaoSystem(s.carrier(), s.enc_table(), s.dec_table(), s.pair_table(),
                        std::move(m));
}

bool rel_square_commutes(const DolevYaoSystem& s) {
  return check_commutes(build_rel_security_diagram(s)).commutes();
}

}  // namespace

TEST_CASE("decryption condition") {
  // xor on Z2, by hand: D(k, k^m) = k^k^m = m for the four (k, m).
  CHECK(check_decryption_condition(corpus::dy_otp(1)).holds);
  CHECK(check_decryption_condition(corpus::dy_identity(2)).holds);
  const auto broken = check_decryption_condition(corpus::dy_constant(2));
  CHECK_FALSE(broken.holds);
  REQUIRE(broken.counterexample);
  CHECK(broken.counterexample->key == 0);
  CHECK(broken.counterexample->message == 1);
}

TEST_CASE("encryption equation is a separate predicate") {
  CHECK(check_encryption_equation(corpus::dy_otp(2)).holds);
  // E(k, -) misses 0, so E(k, D(k, 0)) cannot be 0.
  const EncodedSet a({"0", "1", "2"});
  const DolevYaoSystem s(a, {{1, 2, 2}, {1, 2, 2}, {1, 2, 2}}, {{0, 0, 1}, {0, 0, 1}, {0, 0, 1}},
                         {0, 1, 2}, {true, true, false});
  CHECK_FALSE(check_encryption_equation(s).holds);
}

TEST_CASE("tilde_D") {
  const auto otp = corpus::dy_otp(1);
  CHECK(tilde_D(otp, "0") == std::vector<std::size_t>{0, 1});
  CHECK(tilde_D(corpus::dy_identity(2), std::size_t{0}) == std::vector<std::size_t>{0});
  CHECK(tilde_D(with_wellformed(otp, {false, false}), std::size_t{0}).empty());
  CHECK_THROWS_AS(tilde_D(otp, "7"), InvalidArgument);
  CHECK_THROWS_AS(tilde_D(otp, std::size_t{2}), InvalidArgument);
}

TEST_CASE("algebraic perfect security") {
  CHECK(is_algebraically_perfectly_secure(corpus::dy_otp(1)).secure);
  CHECK(is_algebraically_perfectly_secure(corpus::dy_shift(26)).secure);
  const auto id = is_algebraically_perfectly_secure(corpus::dy_identity(2));
  CHECK_FALSE(id.secure);
  REQUIRE(id.witness);
  CHECK(id.witness->ciphertext == 0);
  CHECK(id.witness->message == 1);
  CHECK(is_algebraically_perfectly_secure(corpus::dy_identity(1)).secure);
}

TEST_CASE("lemma check") {
  const auto otp = lemma_equivalence_check(corpus::dy_otp(1));
  CHECK(otp.definition);
  CHECK(otp.relation);
  const auto id = lemma_equivalence_check(corpus::dy_identity(2));
  CHECK_FALSE(id.definition);
  CHECK_FALSE(id.relation);
  Rng rng(31);
  for (int i = 0; i < 100; ++i) CHECK(lemma_equivalence_check(random_dy_system(rng, 3)).agree());
}

TEST_CASE("Rel square examples") {
  CHECK(rel_square_commutes(corpus::dy_otp(1)));
  CHECK_FALSE(rel_square_commutes(corpus::dy_identity(2)));
  CHECK(rel_square_commutes(corpus::dy_identity(1)));
}

TEST_CASE("constructor rejects malformed tables") {
  const EncodedSet a({"0", "1"});
  CHECK_THROWS_AS(DolevYaoSystem(a, {{0, 1}}, {{0, 1}, {0, 1}}, {0, 1}, {true, true}),
                  InvalidArgument);
  CHECK_THROWS_AS(DolevYaoSystem(a, {{0, 2}, {0, 1}}, {{0, 1}, {0, 1}}, {0, 1}, {true, true}),
                  InvalidArgument);
  CHECK_THROWS_AS(DolevYaoSystem(a, {{0, 1}, {0, 1}}, {{0, 1}, {0, 1}}, {0, 5}, {true, true}),
                  InvalidArgument);
  CHECK_THROWS_AS(DolevYaoSystem(a, {{0, 1}, {0, 1}}, {{0, 1}, {0, 1}}, {0, 1}, {true}),
                  InvalidArgument);
}

TEST_CASE("exhaustive sweep over two-element carriers") {
  std::size_t secure = 0, decrypting = 0;
  const auto visited = for_each_dy_system(2, [&](const DolevYaoSystem& s) {
    const bool def = is_algebraically_perfectly_secure(s).secure;
    CHECK(rel_square_commutes(s) == def);
    CHECK(lemma_equivalence_check(s).agree());
    secure += def;
    decrypting += check_decryption_condition(s).holds;
    for (std::size_t c = 0; c < 2; ++c) {
      for (std::size_t m : tilde_D(s, c)) CHECK(s.wellformed(m));
    }
  });
  CHECK(visited == 4096);
  CHECK(secure > 0);
  CHECK(secure < visited);
  CHECK(decrypting > 0);
}

TEST_CASE("randomized sweep on three and four elements") {
  Rng rng(99);
  for (int i = 0; i < 300; ++i) {
    const auto s = random_dy_system(rng, 3 + rng.below(2));
    CHECK(rel_square_commutes(s) == is_algebraically_perfectly_secure(s).secure);
    // Decryption forces each E(k, -) to be injective.
    if (check_decryption_condition(s).holds) {
      for (std::size_t k = 0; k < s.size(); ++k) {
        std::vector<bool> seen(s.size(), false);
        for (std::size_t m = 0; m < s.size(); ++m) {
          CHECK_FALSE(seen[s.enc(k, m)]);
          seen[s.enc(k, m)] = true;
        }
      }
    }
  }
}
