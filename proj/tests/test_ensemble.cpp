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
#include <map>

#include "catcrypt/corpus.hpp"
#include "catcrypt/ensemble.hpp"
#include "catcrypt/games.hpp"
#include "catcrypt/generators.hpp"
#include "doctest.h"

using namespace catcrypt;

namespace {

using Q = Rational;

BitString bs(const char* s) { return BitString::parse(s); }

RandomizedFn xor_seed(unsigned len) {
  return RandomizedFn::tabulate(1, len, len, [](std::uint64_t rho, std::uint64_t x) {
    return std::optional<std::uint64_t>(x ^ rho);
  });
}

// Ciphertext distribution of each plaintext, counted straight from the
// keygen and encryption tables.
std::vector<std::vector<Q>> oracle_ciphertext_laws(const AbstractCryptoSystem& sys,
                                                   std::size_t l) {
  const LevelSorts& s = sys.sorts(l);
  const RandomizedFn& g = sys.keygen().at(l);
  const RandomizedFn& e = sys.enc().at(l);
  const unsigned kb = static_cast<unsigned>(*s.keys.code_length());
  const unsigned mb = static_cast<unsigned>(*s.messages.code_length());
  std::vector<std::vector<Q>> law(s.messages.size(), std::vector<Q>(s.ciphertexts.size(), Q(0)));
  const Q w = Q(1) / Q(BigInt(g.seed_count() * e.seed_count()));
  for (std::uint64_t gr = 0; gr < g.seed_count(); ++gr) {
    auto kk = g.at(gr, (std::uint64_t{1} << l) - 1);
    if (!kk) continue;
    const std::uint64_t k = *kk >> kb;
    for (std::size_t m = 0; m < s.messages.size(); ++m) {
      const std::uint64_t x = (k << mb) | BitString::parse(s.messages.code(m)).value;
      for (std::uint64_t er = 0; er < e.seed_count(); ++er) {
        auto c = e.at(er, x);
        if (!c) continue;
        auto j = s.ciphertexts.find_code(BitString{*c, e.out_len()}.to_string());
        if (j) law[m][*j] += w;
      }
    }
  }
  return law;
}

Q oracle_tv_advantage(const AbstractCryptoSystem& sys, std::size_t l) {
  const auto law = oracle_ciphertext_laws(sys, l);
  Q best = 0;
  for (const auto& p : law) {
    for (const auto& q : law) {
      Q tv = 0;
      for (std::size_t c = 0; c < p.size(); ++c) tv += p[c] > q[c] ? p[c] - q[c] : q[c] - p[c];
      if (tv / 4 > best) best = tv / 4;
    }
  }
  return best;
}

RationalMatrix random_kernel(Rng& rng, const EncodedSet& a, const EncodedSet& b) {
  std::vector<std::vector<Q>> rows;
  for (std::size_t i = 0; i < a.size(); ++i) rows.push_back(rng.probability_vector(b.size()));
  return RationalMatrix::generate(a, b, [&](std::size_t i, std::size_t j) { return rows[i][j]; });
}

CpaAdversary random_cpa_adversary(Rng& rng, const AbstractCryptoSystem& sys) {
  std::vector<RationalMatrix> a0, a1;
  for (std::size_t l = 1; l <= sys.levels(); ++l) {
    const StageSorts s0 = cpa_stage(sys, l, 0), s1 = cpa_stage(sys, l, 1);
    a0.push_back(random_kernel(rng, s0.dom, s0.cod));
    a1.push_back(random_kernel(rng, s1.dom, s1.cod));
  }
  return {"random", CpaAdversary::Shape::kGame, StochasticEnsemble(std::move(a0)),
          StochasticEnsemble(std::move(a1))};
}

std::vector<Q> constant(std::size_t n, Q v) { return std::vector<Q>(n, v); }

}  // namespace

TEST_CASE("bitstrings") {
  CHECK(bs("0110").value == 6);
  CHECK(bs("0110").to_string() == "0110");
  CHECK(bs("").length == 0);
  CHECK(concat(bs("10"), bs("01")) == bs("1001"));
  CHECK_THROWS_AS(bs("012"), InvalidArgument);
}

TEST_CASE("seed_prob") {
  CHECK(seed_prob(xor_seed(1), bs("0"), bs("0")) == Q(1, 2));
  const auto constant_fn = RandomizedFn::tabulate(2, 1, 1, [](auto, auto) {
    return std::optional<std::uint64_t>(1);
  });
  CHECK(seed_prob(constant_fn, bs("0"), bs("1")) == 1);
  CHECK(seed_prob(constant_fn, bs("1"), bs("0")) == 0);
  // Seed bit then input bit: 00 -> 0, 01 -> 0, 10 -> 1, 11 -> 1.
  RandomizedFn g(1, 1, 1);
  g.set(0, 0, 0);
  g.set(0, 1, 0);
  g.set(1, 0, 1);
  g.set(1, 1, 1);
  CHECK(seed_prob(g, bs("1"), bs("1")) == Q(1, 2));
  g.unset(1, 1);
  CHECK(seed_prob(g, bs("1"), bs("1")) == 0);
  CHECK(seed_prob(g, bs("1"), bs("0")) == Q(1, 2));
  CHECK_THROWS_AS(seed_prob(g, bs("10"), bs("0")), InvalidArgument);
  CHECK(seed_prob(g, bs("1"), bs("00")) == 0);
}

TEST_CASE("rcompose") {
  const auto f = xor_seed(1);
  CHECK(rcompose(RandomizedFn::identity(1), f) == f);
  CHECK(rcompose(f, RandomizedFn::identity(1)) == f);
  const auto gf = rcompose(f, f);
  CHECK(gf.seed_len() == 2);
  // rho2 rho1 x -> rho2 ^ rho1 ^ x.
  const int expected[8][4] = {{0, 0, 0, 0}, {0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0},
                              {1, 0, 0, 1}, {1, 0, 1, 0}, {1, 1, 0, 0}, {1, 1, 1, 1}};
  for (const auto& row : expected) {
    const std::uint64_t rho = static_cast<std::uint64_t>(row[0] * 2 + row[1]);
    CHECK(gf.at(rho, static_cast<std::uint64_t>(row[2])) == static_cast<std::uint64_t>(row[3]));
  }
  // Seeds split as rho2 :: rho1: the outer seed is the high bit.
  RandomizedFn inner(1, 1, 1), outer(1, 1, 1);
  inner.set(0, 0, 0);
  inner.set(1, 0, 1);
  outer.set(0, 0, 0);
  outer.set(0, 1, 1);
  const auto h = rcompose(outer, inner);
  CHECK(h.at(0b00, 0) == 0u);
  CHECK(h.at(0b01, 0) == 1u);
  CHECK(!h.at(0b10, 0));
  CHECK(!h.at(0b00, 1));
  CHECK_THROWS_AS(rcompose(xor_seed(2), f), DimensionMismatch);
}

TEST_CASE("monoid laws on random tables") {
  Rng rng(2024);
  for (int i = 0; i < 150; ++i) {
    const unsigned s = static_cast<unsigned>(rng.below(3)), t = 1 + static_cast<unsigned>(rng.below(2)),
                   u = static_cast<unsigned>(rng.below(3)), v = 1 + static_cast<unsigned>(rng.below(2));
    const auto f = random_randomized_fn(rng, static_cast<unsigned>(rng.below(3)), s, t);
    const auto g = random_randomized_fn(rng, static_cast<unsigned>(rng.below(3)), t, u);
    const auto h = random_randomized_fn(rng, static_cast<unsigned>(rng.below(3)), u, v);
    CHECK(rcompose(h, rcompose(g, f)) == rcompose(rcompose(h, g), f));
    CHECK(rcompose(RandomizedFn::identity(t), f) == f);
    CHECK(rcompose(f, RandomizedFn::identity(s)) == f);
  }
}

TEST_CASE("feasible ensemble profile") {
  CHECK_NOTHROW(FeasibleEnsemble::identity({1, 2, 3}));
  CHECK_THROWS_AS(FeasibleEnsemble::identity({2, 2}), InvalidArgument);
  CHECK_THROWS_AS(FeasibleEnsemble({xor_seed(1), RandomizedFn::identity(2)}), InvalidArgument);
  CHECK_THROWS_AS(FeasibleEnsemble::identity({1}).at(2), InvalidArgument);
  CHECK(FeasibleEnsemble::identity({1, 3}).deterministic());
}

TEST_CASE("realizes") {
  const EncodedSet b1 = EncodedSet::bits(1);
  const FeasibleEnsemble x({xor_seed(1)});
  const StochasticEnsemble half({RationalMatrix::generate(b1, b1, [](auto, auto) { return Q(1, 2); })});
  CHECK(realizes(half, x).holds);
  CHECK(realize(x, {b1}, {b1}).at(1) == half.at(1));

  const StochasticEnsemble id({identity<RationalSemiring>(b1)});
  const Realization r = realizes(id, x);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(r.witness->level == 1);
  CHECK(r.witness->row == "0");
  CHECK(r.witness->col == "0");
  CHECK(r.witness->stored == 1);
  CHECK(r.witness->counted == Q(1, 2));

  CHECK(realizes(StochasticEnsemble(), x).holds);
  CHECK(realizes(StochasticEnsemble(), FeasibleEnsemble()).holds);
  CHECK_THROWS_AS(realize(x, {EncodedSet::bits(2)}, {b1}), DimensionMismatch);
}

TEST_CASE("realization soundness on random ensembles") {
  Rng rng(77);
  for (int i = 0; i < 60; ++i) {
    const FeasibleEnsemble psi = random_feasible_ensemble(rng, 3);
    std::vector<EncodedSet> dom, cod;
    for (std::size_t l = 1; l <= 3; ++l) {
      dom.push_back(EncodedSet::bits(psi.at(l).in_len()));
      cod.push_back(EncodedSet::bits(psi.at(l).out_len()));
    }
    const StochasticEnsemble Psi = realize(psi, dom, cod);
    CHECK(realizes(Psi, psi).holds);
    for (std::size_t l = 1; l <= 3; ++l) {
      // Counting oracle: seeds hitting each output, entry by entry.
      const RandomizedFn& g = psi.at(l);
      for (std::uint64_t a = 0; a < g.input_count(); ++a) {
        std::map<std::uint64_t, std::uint64_t> hits;
        for (std::uint64_t rho = 0; rho < g.seed_count(); ++rho) {
          if (auto y = g.at(rho, a)) ++hits[*y];
        }
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << g.out_len()); ++b) {
          CHECK(Psi.at(l).at(a, b) == Q(BigInt(hits[b]), BigInt(g.seed_count())));
        }
      }
    }
  }
}

TEST_CASE("ensemble_compose") {
  // Identity on the right keeps each level.
  Rng rng(5);
  const FeasibleEnsemble psi = random_feasible_ensemble(rng, 3, 2);
  std::vector<unsigned> outs;
  for (std::size_t l = 1; l <= 3; ++l) outs.push_back(psi.at(l).out_len());
  std::sort(outs.begin(), outs.end());
  outs.erase(std::unique(outs.begin(), outs.end()), outs.end());
  const FeasibleEnsemble after_id = ensemble_compose(FeasibleEnsemble::identity(outs), psi);
  for (std::size_t l = 1; l <= 3; ++l) CHECK(after_id.at(l) == psi.at(l));

  // Two seeded xors: rho2 ^ rho1 into the low bit at levels 1..3.
  const FeasibleEnsemble x({xor_seed(1), xor_seed(2), xor_seed(3)});
  const FeasibleEnsemble xx = ensemble_compose(x, x);
  CHECK(alignment_levels(x, x) == std::vector<std::size_t>{1, 2, 3});
  for (std::size_t l = 1; l <= 3; ++l) {
    const RandomizedFn& g = xx.at(l);
    CHECK(g.seed_len() == 2);
    CHECK(g.in_len() == l);
    CHECK(g.out_len() == l);
    for (std::uint64_t rho = 0; rho < 4; ++rho) {
      for (std::uint64_t in = 0; in < (1u << l); ++in) {
        CHECK(g.at(rho, in) == (in ^ (rho >> 1) ^ (rho & 1)));
      }
    }
  }

  // A compressing psi (l+1 bits -> l bits) separates the two readings.
  std::vector<RandomizedFn> levels;
  for (unsigned l = 1; l <= 3; ++l) {
    levels.push_back(RandomizedFn::tabulate(0, l + 1, l, [l](auto, std::uint64_t in) {
      return std::optional<std::uint64_t>(in >> 1);
    }));
  }
  const FeasibleEnsemble squeeze(levels);
  const FeasibleEnsemble id3 = FeasibleEnsemble::identity({1, 2, 3});
  CHECK(alignment_levels(id3, squeeze) == std::vector<std::size_t>{1, 2, 3});
  CHECK_THROWS_AS(alignment_levels(id3, squeeze, Alignment::kLiteral), DomainError);
  const FeasibleEnsemble id4 = FeasibleEnsemble::identity({1, 2, 3, 4});
  CHECK(alignment_levels(id4, squeeze, Alignment::kLiteral) == std::vector<std::size_t>{2, 3, 4});
  // Shorter outputs are read zero padded by the wider identity.
  const FeasibleEnsemble lit = ensemble_compose(id4, squeeze, Alignment::kLiteral);
  CHECK(lit.at(1).out_len() == 2);
  CHECK(lit.at(1).at(0, 0b11) == 1u);

  CHECK_THROWS_AS(ensemble_compose(FeasibleEnsemble::identity({1}), x), DomainError);
}

TEST_CASE("composition matches matrix products level by level") {
  Rng rng(31);
  for (int i = 0; i < 60; ++i) {
    const FeasibleEnsemble psi = random_feasible_ensemble(rng, 3);
    const FeasibleEnsemble theta = random_feasible_ensemble(rng, 3, 1 + static_cast<unsigned>(rng.below(2)));
    std::vector<std::size_t> lbar;
    try {
      lbar = alignment_levels(theta, psi);
    } catch (const DomainError&) {
      CHECK_THROWS_AS(ensemble_compose(theta, psi), DomainError);
      continue;
    }
    const FeasibleEnsemble both = ensemble_compose(theta, psi);
    for (std::size_t l = 1; l <= 3; ++l) {
      const RandomizedFn& p = psi.at(l);
      const RandomizedFn& q = theta.at(lbar[l - 1]);
      const EncodedSet a = EncodedSet::bits(p.in_len());
      const EncodedSet b = EncodedSet::bits(p.out_len());
      const EncodedSet c = EncodedSet::bits(q.out_len());
      const auto lhs = realize_level(both.at(l), a, c);
      const auto rhs = compose(realize_level(p, a, b), realize_level(q.restrict_input(p.out_len()), b, c));
      CHECK(lhs == rhs);
      CHECK(both.at(l).seed_len() == q.seed_len() + p.seed_len());
    }
  }
}

TEST_CASE("threshold parsing") {
  CHECK(Threshold::parse("1/l^2") == Threshold::polynomial(Q(1), 2));
  CHECK(Threshold::parse("3/l") == Threshold::polynomial(Q(3), 1));
  CHECK(Threshold::parse("2^-l") == Threshold::exponential(Q(1)));
  CHECK(Threshold::parse("1/2*2^-l") == Threshold::exponential(Q(1, 2)));
  CHECK(Threshold::parse("0") == Threshold::zero());
  CHECK_THROWS_AS(Threshold::parse("l^2"), ParseError);
  CHECK(Threshold::parse("1/l^2").at(3) == Q(1, 9));
  CHECK(Threshold::parse("2^-l").at(3) == Q(1, 8));
  CHECK(Threshold::parse("5/l").at(2) == 1);
  for (const char* t : {"1/l^2", "3/l", "2^-l", "1/2*2^-l", "0", "1/2/l^3"}) {
    CHECK(Threshold::parse(t).to_string() == t);
  }
}

TEST_CASE("negligible_equiv") {
  const NegligibilityPolicy p{10, Threshold::polynomial(Q(1), 1)};
  std::vector<Q> half = constant(10, Q(1, 2)), bumped, quarter = constant(10, Q(3, 4));
  for (unsigned l = 1; l <= 10; ++l) bumped.push_back(Q(1, 2) + pow2_inverse(l));
  CHECK(negligible_equiv(half, half, p));
  CHECK(negligible_equiv(half, bumped, p));
  CHECK_FALSE(negligible_equiv(half, quarter, p));
  CHECK(negligible_equiv(half, quarter, {4, p.threshold}));  // 1/4 <= 1/4
  CHECK_FALSE(negligible_equiv(half, quarter, {5, p.threshold}));
  CHECK_THROWS_AS(negligible_equiv(half, constant(9, Q(0)), p), InvalidArgument);

  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const NegligibilityPolicy q{6, rng.coin() ? Threshold::polynomial(Q(1), 2)
                                              : Threshold::exponential(Q(1))};
    std::vector<Q> s1, t1, s2, t2, sum_s, sum_t;
    for (std::size_t l = 1; l <= 6; ++l) {
      s1.push_back(rng.unit_rational(8) / 2);
      s2.push_back(rng.unit_rational(8) / 2);
      t1.push_back(s1.back() + (rng.coin() ? q.at(l) * rng.unit_rational() : Q(1, 3)) / 2);
      t2.push_back(s2.back() + q.at(l) * rng.unit_rational() / 2);
    }
    CHECK(negligible_equiv(s1, t1, q) == negligible_equiv(t1, s1, q));
    CHECK(negligible_equiv(s1, s1, q));
    for (std::size_t l = 0; l < 6; ++l) {
      sum_s.push_back(s1[l] + s2[l]);
      sum_t.push_back(t1[l] + t2[l]);
    }
    if (negligible_equiv(s1, t1, q) && negligible_equiv(s2, t2, q)) {
      CHECK(negligible_equiv(sum_s, sum_t, sum_closure(q)));
    }
  }
}

TEST_CASE("fixture systems decrypt uniquely") {
  CHECK(check_unique_decryption(corpus::ens_otp(5)).holds);
  CHECK(check_unique_decryption(corpus::ens_leaky_otp(4)).holds);
  CHECK(check_unique_decryption(corpus::ens_identity(3)).holds);
  CHECK(check_unique_decryption(corpus::ens_malleable_otp(2)).holds);
  const UniqueDecryption echo = check_unique_decryption(corpus::ens_key_echo(2));
  CHECK_FALSE(echo.holds);
  CHECK(echo.level == 1);
  CHECK(echo.detail.find("D(kbar") != std::string::npos);
}

TEST_CASE("IND-CPA guess probabilities") {
  const auto otp = corpus::ens_otp(3);
  const auto id = corpus::ens_identity(3);
  Rng rng(9);
  for (std::size_t l = 1; l <= 3; ++l) {
    CHECK(ind_cpa_guess_prob(otp, corpus::cpa_distinguisher(otp), l) == Q(1, 2));
    CHECK(ind_cpa_guess_prob(otp, random_cpa_adversary(rng, otp), l) == Q(1, 2));
    CHECK(ind_cpa_guess_prob(id, corpus::cpa_distinguisher(id), l) == 1);
    CHECK(ind_cpa_guess_prob(id, corpus::cpa_constant(id, true), l) == Q(1, 2));
    CHECK(ind_cpa_guess_prob(id, corpus::cpa_constant(id, false), l) == Q(1, 2));
  }
  // The keyed shape of an adversary that ignores its key plays the same game.
  for (int i = 0; i < 20; ++i) {
    const auto sys = random_crypto_system(rng, 2);
    const auto adv = random_cpa_adversary(rng, sys);
    for (std::size_t l = 1; l <= 2; ++l) {
      CHECK(ind_cpa_guess_prob(sys, adv, l) == ind_cpa_guess_prob(sys, lift_to_keyed(sys, adv), l));
    }
  }
  auto wrong = corpus::cpa_distinguisher(otp);
  wrong.shape = CpaAdversary::Shape::kKeyed;
  CHECK_THROWS_AS(ind_cpa_guess_prob(otp, wrong, 1), DimensionMismatch);
}

TEST_CASE("max IND-CPA advantage") {
  const auto otp = corpus::ens_otp(5);
  const auto id = corpus::ens_identity(5);
  const auto leaky = corpus::ens_leaky_otp(5);
  for (std::size_t l = 1; l <= 5; ++l) {
    const auto a = max_ind_cpa_advantage(otp, l);
    CHECK(a.enumerated == 0);
    CHECK(a.agrees());
    const auto b = max_ind_cpa_advantage(id, l);
    CHECK(b.enumerated == Q(1, 2));
    CHECK(b.agrees());
    const auto c = max_ind_cpa_advantage(leaky, l);
    CHECK(c.enumerated == pow2_inverse(static_cast<unsigned>(l + 1)));
    CHECK(c.enumerated == oracle_tv_advantage(leaky, l));
    CHECK(c.agrees());
  }
  CHECK_THROWS_AS(max_ind_cpa_advantage(otp, 1, 3), CapExceeded);

  Rng rng(41);
  for (int i = 0; i < 60; ++i) {
    const auto sys = random_crypto_system(rng, 2);
    for (std::size_t l = 1; l <= 2; ++l) {
      const auto adv = max_ind_cpa_advantage(sys, l);
      CHECK(adv.agrees());
      CHECK(adv.tv_oracle == oracle_tv_advantage(sys, l));
      const Q g = ind_cpa_guess_prob(sys, random_cpa_adversary(rng, sys), l);
      CHECK(g >= Q(1, 2) - adv.enumerated);
      CHECK(g <= Q(1, 2) + adv.enumerated);
      if (is_perfectly_secure_at(sys, l)) CHECK(adv.enumerated == 0);
    }
  }
}

TEST_CASE("IND-CPA diagram") {
  const NegligibilityPolicy policy{3, Threshold::polynomial(Q(1), 2)};
  const auto otp = corpus::ens_otp(3);
  Rng rng(12);
  const auto report = check_ind_cpa_diagram(
      otp, {corpus::cpa_distinguisher(otp), random_cpa_adversary(rng, otp)}, policy);
  CHECK(report.commutes());
  CHECK(report.pairs.size() == 6);
  CHECK(report.pairs.front().source == "1^1");
  CHECK(report.pairs.front().target == "2");

  const auto id = corpus::ens_identity(3);
  const NegligibilityPolicy tight{3, Threshold::polynomial(Q(1, 4), 1)};
  const auto bad = check_ind_cpa_diagram(id, {corpus::cpa_distinguisher(id)}, tight);
  REQUIRE(bad.pairs.size() == 3);
  for (const auto& p : bad.pairs) {
    CHECK_FALSE(p.equal);
    REQUIRE(p.witness);
    CHECK(p.witness->lhs != p.witness->rhs);
  }
  CHECK(check_ind_cpa_diagram(id, {}, policy).commutes());
  CHECK(check_ind_cpa_diagram(id, {}, policy).pairs.empty());

  // Leaky pad: advantage 2^-(l+1) passes 1/l^2 but not the zero threshold.
  const auto leaky = corpus::ens_leaky_otp(3);
  const auto dist = corpus::cpa_distinguisher(leaky);
  CHECK(check_ind_cpa_diagram(leaky, {dist}, policy).commutes());
  CHECK_FALSE(check_ind_cpa_diagram(leaky, {dist}, {3, Threshold::zero()}).commutes());
}

TEST_CASE("IND-CPA diagram agrees with the enumeration") {
  Rng rng(55);
  const std::vector<Threshold> thresholds = {Threshold::zero(), Threshold::polynomial(Q(1), 2),
                                             Threshold::exponential(Q(1, 2)),
                                             Threshold::polynomial(Q(1, 4), 1)};
  int passes = 0, fails = 0;
  for (int i = 0; i < 24; ++i) {
    const auto sys = random_crypto_system(rng, 1 + rng.below(2));
    const NegligibilityPolicy policy{sys.levels(), thresholds[rng.below(thresholds.size())]};
    std::vector<CpaAdversary> all;
    bool expected = true;
    for (std::size_t l = 1; l <= sys.levels(); ++l) {
      auto advs = deterministic_cpa_adversaries(sys, l);
      all.insert(all.end(), advs.begin(), advs.end());
      expected = expected && max_ind_cpa_advantage(sys, l).enumerated <= policy.at(l);
    }
    const bool commutes = check_ind_cpa_diagram(sys, all, policy).commutes();
    CHECK(commutes == expected);
    (commutes ? passes : fails)++;
  }
  CHECK(passes > 0);
  CHECK(fails > 0);
}

TEST_CASE("IND-CCA2") {
  const auto mal = corpus::ens_malleable_otp(2);
  const auto echo = corpus::ens_key_echo(2);
  for (std::size_t l = 1; l <= 2; ++l) {
    CHECK(ind_cca2_guess_prob(mal, corpus::cca2_bit_flip(mal), l) == 1);
    CHECK(ind_cca2_guess_prob(mal, corpus::cca2_oracle_ignoring(mal), l) == Q(1, 2));
    CHECK(ind_cca2_guess_prob(echo, corpus::cca2_bit_flip(echo), l) == Q(1, 2));
  }
  // The padded 2-element fixture is also malleable.
  const auto otp = corpus::ens_otp(3);
  CHECK(ind_cca2_guess_prob(otp, corpus::cca2_bit_flip(otp), 3) == 1);

  // An adversary resubmitting the challenge: lost, or a coin flip.
  auto replay = corpus::cca2_bit_flip(mal);
  std::vector<RationalMatrix> a2;
  for (std::size_t l = 1; l <= 2; ++l) {
    const LevelSorts& s = mal.sorts(l);
    const StageSorts st = cca2_stage(mal, l, 2);
    const std::size_t nC = s.ciphertexts.size();
    a2.push_back(from_function<RationalSemiring>(
        std::function<std::size_t(std::size_t)>([nC](std::size_t r) { return r % nC; }), st.dom,
        st.cod));
  }
  replay.a2 = StochasticEnsemble(std::move(a2));
  CHECK(ind_cca2_guess_prob(mal, replay, 1) == 0);
  CHECK(ind_cca2_guess_prob(mal, replay, 1, ChallengeReuse::kCoin) == Q(1, 2));
  CHECK_THROWS_AS(ind_cca2_guess_prob(mal, corpus::cca2_bit_flip(otp), 2), DimensionMismatch);
}
