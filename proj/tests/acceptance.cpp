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
// Acceptance run: one PASS/FAIL line per criterion. argv[1] is the path of
// the catcrypt executable, used by the determinism check.
#include <array>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "catcrypt/cli.hpp"
#include "catcrypt/corpus.hpp"
#include "catcrypt/generators.hpp"

using namespace catcrypt;
namespace fs = std::filesystem;

namespace {

using Q = Rational;
using io::Json;

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    if (pass) note << why;
    pass = false;
  }
};

Json load(const std::string& name) { return io::read_json(cli::resolve(name)); }

// Security read literally: every ciphertext in A is reachable from every
// well-formed plaintext under some key.
bool oracle_algebraic(const DolevYaoSystem& s) {
  for (std::size_t m = 0; m < s.size(); ++m) {
    if (!s.wellformed(m)) continue;
    for (std::size_t c = 0; c < s.size(); ++c) {
      bool hit = false;
      for (std::size_t k = 0; k < s.size() && !hit; ++k) hit = s.enc(k, m) == c;
      if (!hit) return false;
    }
  }
  return true;
}

// Independence of plaintext and ciphertext under the joint law.
bool oracle_shannon(const ShannonSystem& s) {
  const std::size_t n = s.size();
  std::vector<std::vector<Q>> joint(n, std::vector<Q>(n, Q(0)));
  std::vector<Q> pc(n, Q(0));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t m = 0; m < n; ++m) {
      const Q w = s.kappa().weight(k) * s.mu().weight(m);
      joint[m][s.enc(k, m)] += w;
      pc[s.enc(k, m)] += w;
    }
  }
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t c = 0; c < n; ++c) {
      if (joint[m][c] != s.mu().weight(m) * pc[c]) return false;
    }
  }
  return true;
}

Outcome criterion1() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& entry : fs::directory_iterator(cli::corpus_dir())) {
    const std::string file = entry.path().filename().string();
    const Json j = io::read_json(entry.path());
    const std::string kind = j.value("kind", "");
    if (kind == "dolev-yao" && file != "dy-constant.json") {
      if (!check_decryption_condition(io::dy_from_json(j)).holds) o.fail(file + " fails");
      ++n;
    } else if (kind == "shannon") {
      // The loader rejects systems violating the condition on the supports.
      const ShannonSystem s = io::shannon_from_json(j);
      for (std::size_t k : s.kappa().support())
        for (std::size_t m : s.mu().support())
          if (s.dec(s.pair(k), s.enc(k, m)) != m) o.fail(file + " fails");
      ++n;
    } else if (kind == "ensemble" && file != "ens-key-echo.json") {
      if (!check_unique_decryption(io::crypto_system_from_json(j)).holds) o.fail(file + " fails");
      ++n;
    }
  }
  const DolevYaoSystem bad = io::dy_from_json(load("dy-constant.json"));
  const DecryptionCheck dc = check_decryption_condition(bad);
  if (dc.holds || !dc.counterexample) {
    o.fail("constant cipher passes");
  } else {
    const auto [k, m] = std::pair{dc.counterexample->key, dc.counterexample->message};
    if (bad.dec(bad.pair(k), bad.enc(k, m)) == m) o.fail("witness does not violate the condition");
    o.note << n << " bundled systems hold; constant cipher fails at (k,m) = ("
           << bad.carrier().label(k) << "," << bad.carrier().label(m) << ")";
  }
  return o;
}

void sweep(const std::function<void(const DolevYaoSystem&)>& fn, std::size_t& exhaustive,
           std::size_t& random) {
  exhaustive = for_each_dy_system(2, fn);
  Rng rng(20240611);
  random = 300;
  for (std::size_t i = 0; i < random; ++i) fn(random_dy_system(rng, 3 + rng.below(2)));
}

Outcome criterion2() {
  Outcome o;
  std::size_t bad = 0, secure = 0, ex = 0, rnd = 0;
  sweep([&](const DolevYaoSystem& s) {
    const LemmaCheck l = lemma_equivalence_check(s);
    if (!l.agree() || l.definition != oracle_algebraic(s)) ++bad;
    secure += l.definition;
  }, ex, rnd);
  if (bad) o.fail(std::to_string(bad) + " disagreements");
  o.note << ex << " exhaustive + " << rnd << " random systems, " << secure << " secure, " << bad
         << " disagreements";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::size_t bad = 0, ex = 0, rnd = 0;
  sweep([&](const DolevYaoSystem& s) {
    const bool d = check_commutes(build_rel_security_diagram(s)).commutes();
    if (d != is_algebraically_perfectly_secure(s).secure || d != oracle_algebraic(s)) ++bad;
  }, ex, rnd);
  if (bad) o.fail(std::to_string(bad) + " disagreements");
  o.note << ex << " exhaustive + " << rnd << " random systems, " << bad << " disagreements";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::size_t n = 0;
  for (int bits = 1; bits <= 3; ++bits) {
    for (const char* mu : {"", "-skewed", "-point"}) {
      const std::string file = "shannon-otp-" + std::to_string(bits) + mu + ".json";
      const ShannonSystem s = io::shannon_from_json(load(file));
      if (!is_perfectly_secure_direct(s).secure || !oracle_shannon(s)) o.fail(file + " not secure");
      ++n;
    }
  }
  for (const char* file : {"shannon-identity.json", "shannon-fixed-key.json"}) {
    const ShannonSystem s = io::shannon_from_json(load(file));
    const ShannonSecurity r = is_perfectly_secure_direct(s);
    if (r.secure || oracle_shannon(s) || !r.witness) {
      o.fail(std::string(file) + " not insecure");
      continue;
    }
    const Distribution post = posterior(s, r.witness->ciphertext);
    if (post.weight(r.witness->message) == s.mu().weight(r.witness->message) ||
        post.weight(r.witness->message) != r.witness->posterior) {
      o.fail(std::string(file) + " witness posterior equals the prior");
    }
  }
  o.note << n << " one-time pad systems secure; identity and fixed-key insecure with witnesses";
  return o;
}

Outcome criterion5() {
  Outcome o;
  Rng rng(5150);
  std::size_t bad = 0, secure = 0, n = 250;
  for (std::size_t i = 0; i < n; ++i) {
    const ShannonSystem s = random_shannon_system(rng, 1 + rng.below(4));
    const bool d = check_commutes(build_sto_security_diagram(s)).commutes();
    if (d != is_perfectly_secure_direct(s).secure || d != oracle_shannon(s)) ++bad;
    secure += d;
  }
  if (bad) o.fail(std::to_string(bad) + " disagreements");
  o.note << n << " random systems, " << secure << " secure, " << bad << " disagreements";
  return o;
}

Outcome criterion6() {
  Outcome o;
  Rng rng(66);
  std::size_t bad = 0, n = 200;
  auto len = [&] { return static_cast<unsigned>(rng.below(3)); };
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned s = len(), t = len(), u = len(), v = len();
    const auto f = random_randomized_fn(rng, len(), s, t);
    const auto g = random_randomized_fn(rng, len(), t, u);
    const auto h = random_randomized_fn(rng, len(), u, v);
    if (!(rcompose(h, rcompose(g, f)) == rcompose(rcompose(h, g), f))) ++bad;
    if (!(rcompose(RandomizedFn::identity(t), f) == f)) ++bad;
    if (!(rcompose(f, RandomizedFn::identity(s)) == f)) ++bad;
  }
  if (bad) o.fail(std::to_string(bad) + " violations");
  o.note << n << " random triples, " << bad << " violations";
  return o;
}

Outcome criterion7() {
  Outcome o;
  Rng rng(77);
  std::size_t bad = 0, n = 80, composed = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const FeasibleEnsemble psi = random_feasible_ensemble(rng, 3);
    const FeasibleEnsemble theta = random_feasible_ensemble(rng, 3, 3);
    std::vector<EncodedSet> dom, cod;
    for (std::size_t l = 1; l <= 3; ++l) {
      dom.push_back(EncodedSet::bits(psi.at(l).in_len()));
      cod.push_back(EncodedSet::bits(psi.at(l).out_len()));
    }
    const StochasticEnsemble big = realize(psi, dom, cod);
    if (!realizes(big, psi).holds) ++bad;
    const FeasibleEnsemble both = ensemble_compose(theta, psi);
    const auto lbar = alignment_levels(theta, psi);
    for (std::size_t l = 1; l <= 3; ++l) {
      const RandomizedFn& q = theta.at(lbar[l - 1]);
      const EncodedSet c = EncodedSet::bits(q.out_len());
      const auto lhs = realize_level(both.at(l), dom[l - 1], c);
      const auto rhs = compose(big.at(l), realize_level(q.restrict_input(psi.at(l).out_len()), cod[l - 1], c));
      if (!(lhs == rhs)) ++bad;
      ++composed;
    }
  }
  if (bad) o.fail(std::to_string(bad) + " mismatches");
  o.note << n << " random ensembles over 3 levels, " << composed << " composite levels, " << bad
         << " mismatches";
  return o;
}

Outcome criterion8() {
  Outcome o;
  const AbstractCryptoSystem otp = io::crypto_system_from_json(load("ens-otp.json"));
  const AbstractCryptoSystem id = io::crypto_system_from_json(load("ens-identity.json"));
  for (std::size_t l = 1; l <= 5; ++l) {
    if (max_ind_cpa_advantage(otp, l).enumerated != 0) o.fail("otp advantage nonzero at " + std::to_string(l));
    if (max_ind_cpa_advantage(id, l).enumerated != Q(1, 2)) o.fail("identity advantage not 1/2");
  }
  Rng rng(88);
  const std::vector<Threshold> thresholds = {Threshold::zero(), Threshold::polynomial(Q(1), 2),
                                             Threshold::exponential(Q(1, 2))};
  std::size_t systems = 60, mismatches = 0, diagrams = 0;
  for (std::size_t i = 0; i < systems; ++i) {
    const AbstractCryptoSystem sys = random_crypto_system(rng, 2);
    const NegligibilityPolicy policy{2, thresholds[i % thresholds.size()]};
    std::vector<CpaAdversary> all;
    bool expected = true;
    for (std::size_t l = 1; l <= 2; ++l) {
      const CpaAdvantage a = max_ind_cpa_advantage(sys, l);
      if (!a.agrees()) ++mismatches;
      expected = expected && a.enumerated <= policy.at(l);
      const auto advs = deterministic_cpa_adversaries(sys, l);
      all.insert(all.end(), advs.begin(), advs.end());
    }
    if (i % 3 == 0 || i < 12) {
      if (check_ind_cpa_diagram(sys, all, policy).commutes() != expected) ++mismatches;
      ++diagrams;
    }
  }
  if (mismatches) o.fail(std::to_string(mismatches) + " mismatches");
  o.note << "otp 0 and identity 1/2 at levels 1..5; " << systems
         << " random systems agree with the tv oracle, " << diagrams << " diagram verdicts checked";
  return o;
}

Outcome criterion9() {
  Outcome o;
  const AbstractCryptoSystem sys = io::crypto_system_from_json(load("ens-malleable-otp.json"));
  const auto advs = io::cca2_adversaries_from_json(load("cca2-bitflip.json"), sys);
  for (const auto& a : advs) {
    for (std::size_t l = 1; l <= sys.levels(); ++l) {
      const Q g = ind_cca2_guess_prob(sys, a, l);
      const Q want = a.name == "bit-flip" ? Q(1) : Q(1, 2);
      if (g != want) o.fail(a.name + " guess probability " + to_string(g));
    }
  }
  o.note << "bit-flip guesses with probability 1, oracle-ignoring with 1/2";
  return o;
}

std::string capture(const std::string& cmd) {
  std::string out;
  FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!p) return out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  pclose(p);
  return out;
}

Outcome criterion10(const std::string& tool) {
  Outcome o;
  const std::vector<std::string> checks = {
      "check-dy --system dy-otp-2.json", "check-dy --system dy-identity.json",
      "check-dy --system dy-constant.json", "check-shannon --system shannon-otp-3-skewed.json",
      "check-shannon --system shannon-fixed-key.json",
      "check-indcpa --system ens-otp.json --adversaries cpa-adversaries.json",
      "check-indcpa --system ens-leaky-otp.json --adversaries cpa-adversaries-leaky.json --policy policy-strict.json",
      "check-indcca2 --system ens-malleable-otp.json --adversaries cca2-bitflip.json",
      "selftest --instances 40"};
  for (const auto& c : checks) {
    const std::string cmd = tool + " " + c + " --format json --seed 17";
    const std::string a = capture(cmd), b = capture(cmd);
    if (a.empty() || a != b) o.fail("'" + c + "' differs between runs");
  }
  o.note << checks.size() << " checks run twice with --seed 17, byte-identical JSON";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance CATCRYPT_EXECUTABLE\n";
    return 2;
  }
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"decryption condition", criterion1},
      {"lemma equivalence", criterion2},
      {"relation diagram", criterion3},
      {"shannon perfect security", criterion4},
      {"stochastic diagram", criterion5},
      {"monoid laws", criterion6},
      {"realization soundness", criterion7},
      {"ind-cpa", criterion8},
      {"ind-cca2 bit flip", criterion9},
      {"determinism", [&] { return criterion10(argv[1]); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << (i + 1) << " " << criteria[i].first << ": "
              << o.note.str() << "\n";
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
