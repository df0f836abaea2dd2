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
#include "catcrypt/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "catcrypt/error.hpp"
#include "catcrypt/generators.hpp"
#include "catcrypt/shannon.hpp"
#include "catcrypt/symbolic.hpp"

#ifndef CATCRYPT_CORPUS_DIR
#define CATCRYPT_CORPUS_DIR "corpus"
#endif

namespace catcrypt::cli {
namespace {

using io::Json;

Json rational_json(const Rational& r) {
  Json j;
  j["exact"] = catcrypt::to_string(r);
  j["approx"] = to_double(r);
  return j;
}

std::string rational_text(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", to_double(r));
  return catcrypt::to_string(r) + " (" + buf + ")";
}

Json diagram_witness(const CommutativityReport& report) {
  const PairResult* f = report.first_failure();
  if (!f) return nullptr;
  Json j;
  j["source"] = f->source;
  j["target"] = f->target;
  j["lhs_path"] = f->lhs_path;
  j["rhs_path"] = f->rhs_path;
  j["row"] = f->witness->row;
  j["col"] = f->witness->col;
  j["lhs"] = f->witness->lhs;
  j["rhs"] = f->witness->rhs;
  return j;
}

Rational distance_from_half(const Rational& g) {
  const Rational half(1, 2);
  return g > half ? g - half : half - g;
}

std::string system_name(const Json& j, const std::string& path) {
  if (j.is_object() && j.contains("name") && j["name"].is_string()) return j["name"].get<std::string>();
  return std::filesystem::path(path).stem().string();
}

const std::string& require(const std::optional<std::string>& v, const char* flag,
                           Command c) {
  if (!v) throw ParseError(flag, std::string(to_string(c)) + " needs " + flag);
  return *v;
}

void check_dy(const CheckRequest& req, VerdictReport& out) {
  const std::string& path = require(req.system, "--system", req.command);
  const Json j = io::read_json(resolve(path));
  const DolevYaoSystem sys = io::dy_from_json(j);
  out.system = system_name(j, path);
  const EncodedSet& a = sys.carrier();

  const DecryptionCheck dc = check_decryption_condition(sys);
  out.checks.push_back({"decryption-condition", dc.holds,
                        dc.holds ? "D(pair(k), E(k, m)) = m for all k, m"
                                 : "fails at k=" + a.label(dc.counterexample->key) +
                                       ", m=" + a.label(dc.counterexample->message)});
  const AlgebraicSecurity alg = is_algebraically_perfectly_secure(sys);
  const LemmaCheck lemma = lemma_equivalence_check(sys);
  out.checks.push_back({"lemma-equivalence", lemma.agree(),
                        std::string("definition ") + (lemma.definition ? "holds" : "fails") +
                            ", tilde-D relation " + (lemma.relation ? "holds" : "fails")});
  const CommutativityReport diagram = check_commutes(build_rel_security_diagram(sys));
  out.checks.push_back({"rel-diagram-agrees", diagram.commutes() == alg.secure,
                        diagram.commutes() ? "diagram commutes" : "diagram does not commute"});

  bool any_wellformed = false;
  for (std::size_t m = 0; m < sys.size(); ++m) any_wellformed = any_wellformed || sys.wellformed(m);
  if (!dc.holds) {
    out.verdict = Verdict::kInsecure;
    out.witness["kind"] = "decryption-condition";
    out.witness["key"] = a.label(dc.counterexample->key);
    out.witness["message"] = a.label(dc.counterexample->message);
    out.witness["decrypts_to"] =
        a.label(sys.dec(sys.pair(dc.counterexample->key),
                        sys.enc(dc.counterexample->key, dc.counterexample->message)));
  } else if (!any_wellformed) {
    out.verdict = Verdict::kVacuous;
  } else if (alg.secure) {
    out.verdict = Verdict::kSecure;
  } else {
    out.verdict = Verdict::kInsecure;
    out.witness["kind"] = "algebraic";
    out.witness["ciphertext"] = a.label(alg.witness->ciphertext);
    out.witness["message"] = a.label(alg.witness->message);
    out.witness["reason"] = "no key encrypts the message to the ciphertext";
    out.witness["diagram"] = diagram_witness(diagram);
  }
}

void check_shannon(const CheckRequest& req, VerdictReport& out) {
  const std::string& path = require(req.system, "--system", req.command);
  const Json j = io::read_json(resolve(path));
  const ShannonSystem sys = io::shannon_from_json(j);
  out.system = system_name(j, path);
  const EncodedSet& a = sys.carrier();

  out.checks.push_back({"decryption-condition", true, "holds on supp(kappa) x supp(mu)"});
  const ShannonSecurity direct = is_perfectly_secure_direct(sys);
  const CommutativityReport diagram = check_commutes(build_sto_security_diagram(sys));
  out.checks.push_back({"sto-diagram-agrees", diagram.commutes() == direct.secure,
                        diagram.commutes() ? "diagram commutes" : "diagram does not commute"});
  if (direct.secure) {
    out.verdict = Verdict::kSecure;
    return;
  }
  out.verdict = Verdict::kInsecure;
  const PosteriorWitness& w = *direct.witness;
  out.witness["kind"] = "posterior";
  out.witness["ciphertext"] = a.label(w.ciphertext);
  out.witness["message"] = a.label(w.message);
  out.witness["posterior"] = rational_json(w.posterior);
  out.witness["prior"] = rational_json(w.prior);
  out.witness["diagram"] = diagram_witness(diagram);
}

struct EnsembleSetup {
  AbstractCryptoSystem sys;
  NegligibilityPolicy policy;
  std::vector<std::size_t> levels;
};

EnsembleSetup ensemble_setup(const CheckRequest& req, VerdictReport& out) {
  const std::string& path = require(req.system, "--system", req.command);
  const Json j = io::read_json(resolve(path));
  EnsembleSetup s{io::crypto_system_from_json(j), {}, {}};
  out.system = s.sys.name().empty() ? system_name(j, path) : s.sys.name();
  s.policy = req.policy ? io::policy_from_json(io::read_json(resolve(*req.policy)))
                        : NegligibilityPolicy{s.sys.levels(), Threshold::polynomial(Rational(1), 2)};
  out.horizon = s.policy;
  if (req.level) {
    if (*req.level == 0 || *req.level > std::min(s.policy.max_level, s.sys.levels())) {
      throw ParseError("--level", "level " + std::to_string(*req.level) +
                                      " is outside 1.." +
                                      std::to_string(std::min(s.policy.max_level, s.sys.levels())));
    }
    s.levels.push_back(*req.level);
  } else {
    for (std::size_t l = 1; l <= std::min(s.policy.max_level, s.sys.levels()); ++l) {
      s.levels.push_back(l);
    }
  }
  const UniqueDecryption ud = check_unique_decryption(s.sys);
  out.checks.push_back({"unique-decryption", ud.holds,
                        ud.holds ? "D(kbar, E(k, m)) = m at every level"
                                 : "level " + std::to_string(ud.level) + ": " + ud.detail});
  if (!ud.holds) {
    out.witness["kind"] = "unique-decryption";
    out.witness["level"] = ud.level;
    out.witness["detail"] = ud.detail;
  }
  return s;
}

void check_indcpa(const CheckRequest& req, VerdictReport& out) {
  const EnsembleSetup s = ensemble_setup(req, out);
  bool computed = false, oracle_ok = true;
  for (std::size_t l : s.levels) {
    LevelRow row{l, "max", std::nullopt, s.policy.at(l), true, ""};
    try {
      const CpaAdvantage a = max_ind_cpa_advantage(s.sys, l);
      row.advantage = a.enumerated;
      row.within = a.enumerated <= row.threshold;
      row.note = std::to_string(a.adversaries) + " deterministic adversaries; tv oracle " +
                 (a.agrees() ? "agrees" : "DISAGREES");
      oracle_ok = oracle_ok && a.agrees();
      computed = true;
      if (!row.within && out.witness.is_null()) {
        const LevelSorts& ls = s.sys.sorts(l);
        out.witness["kind"] = "ind-cpa";
        out.witness["level"] = l;
        out.witness["m0"] = ls.messages.label(a.m0);
        out.witness["m1"] = ls.messages.label(a.m1);
        out.witness["advantage"] = rational_json(a.enumerated);
        out.witness["threshold"] = rational_json(row.threshold);
      }
    } catch (const CapExceeded& e) {
      row.note = std::string("skipped: ") + e.what();
    }
    out.levels.push_back(std::move(row));
  }
  out.checks.push_back({"tv-oracle-agrees", oracle_ok,
                        "enumerated maximum equals half the largest total variation distance"});

  if (req.adversaries) {
    const auto advs = io::cpa_adversaries_from_json(io::read_json(resolve(*req.adversaries)), s.sys);
    NegligibilityPolicy p = s.policy;
    if (req.level) p.max_level = *req.level;
    CommutativityReport diagram;
    for (const auto& pair : check_ind_cpa_diagram(s.sys, advs, p).pairs) {
      if (!req.level || pair.source == "1^" + std::to_string(*req.level)) diagram.pairs.push_back(pair);
    }
    out.checks.push_back({"ind-cpa-diagram", diagram.commutes(),
                          std::to_string(diagram.pairs.size()) + " adversary/level squares"});
    for (const auto& adv : advs) {
      for (std::size_t l : s.levels) {
        const Rational g = ind_cpa_guess_prob(s.sys, adv, l);
        LevelRow row{l, adv.name, distance_from_half(g), s.policy.at(l), true,
                     "guess probability " + catcrypt::to_string(g)};
        row.within = *row.advantage <= row.threshold;
        computed = true;
        if (!row.within && out.witness.is_null()) {
          out.witness["kind"] = "ind-cpa-adversary";
          out.witness["adversary"] = adv.name;
          out.witness["level"] = l;
          out.witness["guess_probability"] = rational_json(g);
          out.witness["threshold"] = rational_json(row.threshold);
        }
        out.levels.push_back(std::move(row));
      }
    }
    if (!diagram.commutes() && out.witness.is_null()) {
      out.witness["kind"] = "ind-cpa-diagram";
    }
    if (!diagram.commutes()) out.witness["diagram"] = diagram_witness(diagram);
  }
  if (!out.witness.is_null()) {
    out.verdict = Verdict::kInsecure;
  } else {
    out.verdict = computed ? Verdict::kSecure : Verdict::kVacuous;
  }
}

void check_indcca2(const CheckRequest& req, VerdictReport& out) {
  const EnsembleSetup s = ensemble_setup(req, out);
  const auto advs = io::cca2_adversaries_from_json(
      io::read_json(resolve(require(req.adversaries, "--adversaries", req.command))), s.sys);
  for (const auto& adv : advs) {
    for (std::size_t l : s.levels) {
      const Rational g = ind_cca2_guess_prob(s.sys, adv, l, req.reuse);
      LevelRow row{l, adv.name, distance_from_half(g), s.policy.at(l), true,
                   "guess probability " + catcrypt::to_string(g)};
      row.within = *row.advantage <= row.threshold;
      if (!row.within && out.witness.is_null()) {
        out.witness["kind"] = "ind-cca2";
        out.witness["adversary"] = adv.name;
        out.witness["level"] = l;
        out.witness["guess_probability"] = rational_json(g);
        out.witness["advantage"] = rational_json(*row.advantage);
        out.witness["threshold"] = rational_json(row.threshold);
      }
      out.levels.push_back(std::move(row));
    }
  }
  if (!out.witness.is_null()) {
    out.verdict = Verdict::kInsecure;
  } else {
    out.verdict = advs.empty() || s.levels.empty() ? Verdict::kVacuous : Verdict::kSecure;
  }
}

// Runs `n` instances of a suite; `trial` returns an empty string on
// agreement and a description of the instance otherwise.
template <typename Trial>
void suite(VerdictReport& out, const std::string& name, std::size_t n, Trial&& trial,
           std::size_t& total) {
  std::size_t bad = 0;
  std::string first;
  for (std::size_t i = 0; i < n; ++i) {
    std::string d = trial(i);
    if (!d.empty() && bad++ == 0) first = "instance " + std::to_string(i) + ": " + d;
  }
  total += n;
  out.checks.push_back({name, bad == 0,
                        std::to_string(n) + " instances, " + std::to_string(bad) +
                            " disagreements" + (first.empty() ? "" : "; " + first)});
}

void selftest(const CheckRequest& req, VerdictReport& out) {
  Rng rng(req.seed);
  const std::size_t n = req.instances;
  std::size_t total = 0;
  suite(out, "lemma-equivalence", n, [&](std::size_t) -> std::string {
    const DolevYaoSystem s = random_dy_system(rng, 3 + rng.below(2));
    return lemma_equivalence_check(s).agree() ? "" : "definition and relation disagree";
  }, total);
  suite(out, "rel-diagram", n, [&](std::size_t) -> std::string {
    const DolevYaoSystem s = random_dy_system(rng, 3 + rng.below(2));
    const bool d = check_commutes(build_rel_security_diagram(s)).commutes();
    return d == is_algebraically_perfectly_secure(s).secure ? "" : "diagram and definition disagree";
  }, total);
  suite(out, "sto-diagram", n, [&](std::size_t) -> std::string {
    const ShannonSystem s = random_shannon_system(rng, 1 + rng.below(4));
    const bool d = check_commutes(build_sto_security_diagram(s)).commutes();
    return d == is_perfectly_secure_direct(s).secure ? "" : "diagram and posterior disagree";
  }, total);
  suite(out, "monoid-laws", n, [&](std::size_t) -> std::string {
    auto bits = [&](unsigned lo) { return lo + static_cast<unsigned>(rng.below(3 - lo)); };
    const unsigned s = bits(0), t = bits(1), u = bits(0), v = bits(1);
    const auto f = random_randomized_fn(rng, bits(0), s, t);
    const auto g = random_randomized_fn(rng, bits(0), t, u);
    const auto h = random_randomized_fn(rng, bits(0), u, v);
    if (!(rcompose(h, rcompose(g, f)) == rcompose(rcompose(h, g), f))) return "not associative";
    if (!(rcompose(RandomizedFn::identity(t), f) == f) || !(rcompose(f, RandomizedFn::identity(s)) == f)) {
      return "identity law fails";
    }
    return "";
  }, total);
  suite(out, "realization", n, [&](std::size_t) -> std::string {
    const FeasibleEnsemble psi = random_feasible_ensemble(rng, 3);
    const FeasibleEnsemble theta = random_feasible_ensemble(rng, 3, 3);
    std::vector<EncodedSet> dom, cod;
    for (std::size_t l = 1; l <= 3; ++l) {
      dom.push_back(EncodedSet::bits(psi.at(l).in_len()));
      cod.push_back(EncodedSet::bits(psi.at(l).out_len()));
    }
    if (!realizes(realize(psi, dom, cod), psi).holds) return "realized matrices fail realizes";
    const FeasibleEnsemble both = ensemble_compose(theta, psi);
    const auto lbar = alignment_levels(theta, psi);
    for (std::size_t l = 1; l <= 3; ++l) {
      const RandomizedFn& q = theta.at(lbar[l - 1]);
      const EncodedSet c = EncodedSet::bits(q.out_len());
      const auto lhs = realize_level(both.at(l), dom[l - 1], c);
      const auto rhs = compose(realize_level(psi.at(l), dom[l - 1], cod[l - 1]),
                               realize_level(q.restrict_input(psi.at(l).out_len()), cod[l - 1], c));
      if (!(lhs == rhs)) return "composite differs from the matrix product at level " + std::to_string(l);
    }
    return "";
  }, total);
  suite(out, "ind-cpa-enumeration", (n + 9) / 10, [&](std::size_t) -> std::string {
    const AbstractCryptoSystem s = random_crypto_system(rng, 2);
    for (std::size_t l = 1; l <= 2; ++l) {
      if (!max_ind_cpa_advantage(s, l).agrees()) {
        return "enumeration and tv oracle disagree at level " + std::to_string(l);
      }
    }
    return "";
  }, total);

  bool all = true;
  for (const auto& c : out.checks) all = all && c.passed;
  if (total == 0) {
    out.verdict = Verdict::kVacuous;
  } else if (all) {
    out.verdict = Verdict::kSecure;
  } else {
    out.verdict = Verdict::kInsecure;
    for (const auto& c : out.checks) {
      if (!c.passed) {
        out.witness["kind"] = "selftest";
        out.witness["suite"] = c.name;
        out.witness["detail"] = c.detail;
        break;
      }
    }
  }
}

void text_value(std::ostream& os, const std::string& indent, const std::string& key,
                const Json& v) {
  if (v.is_object() && v.contains("exact")) {
    os << indent << key << ": " << v["exact"].get<std::string>() << " (" << v["approx"].dump()
       << ")\n";
  } else if (v.is_object()) {
    os << indent << key << ":\n";
    for (auto it = v.begin(); it != v.end(); ++it) text_value(os, indent + "  ", it.key(), it.value());
  } else if (v.is_string()) {
    os << indent << key << ": " << v.get<std::string>() << "\n";
  } else if (v.is_null()) {
    os << indent << key << ": none\n";
  } else {
    os << indent << key << ": " << v.dump() << "\n";
  }
}

}  // namespace

const char* to_string(Command c) {
  switch (c) {
    case Command::kCheckDy:
      return "check-dy";
    case Command::kCheckShannon:
      return "check-shannon";
    case Command::kCheckIndCpa:
      return "check-indcpa";
    case Command::kCheckIndCca2:
      return "check-indcca2";
    case Command::kSelftest:
      return "selftest";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kSecure:
      return "secure";
    case Verdict::kInsecure:
      return "insecure";
    case Verdict::kVacuous:
      return "vacuous";
  }
  return "?";
}

std::optional<Command> parse_command(const std::string& name) {
  for (Command c : {Command::kCheckDy, Command::kCheckShannon, Command::kCheckIndCpa,
                    Command::kCheckIndCca2, Command::kSelftest}) {
    if (name == to_string(c)) return c;
  }
  return std::nullopt;
}

int VerdictReport::exit_code() const {
  if (!verdict) return 2;
  return *verdict == Verdict::kInsecure ? 1 : 0;
}

std::filesystem::path corpus_dir() {
  if (const char* env = std::getenv("CATCRYPT_CORPUS"); env && *env) return env;
  return CATCRYPT_CORPUS_DIR;
}

std::filesystem::path resolve(const std::string& name) {
  const std::filesystem::path p(name);
  if (std::filesystem::exists(p)) return p;
  const std::filesystem::path in_corpus = corpus_dir() / p;
  if (p.is_relative() && std::filesystem::exists(in_corpus)) return in_corpus;
  return p;
}

VerdictReport run(const CheckRequest& request) {
  VerdictReport out;
  out.command = to_string(request.command);
  try {
    switch (request.command) {
      case Command::kCheckDy:
        check_dy(request, out);
        break;
      case Command::kCheckShannon:
        check_shannon(request, out);
        break;
      case Command::kCheckIndCpa:
        check_indcpa(request, out);
        break;
      case Command::kCheckIndCca2:
        check_indcca2(request, out);
        break;
      case Command::kSelftest:
        selftest(request, out);
        break;
    }
  } catch (const Error& e) {
    out.verdict.reset();
    out.witness = nullptr;
    out.error = e.what();
  }
  return out;
}

io::Json to_json(const VerdictReport& r) {
  Json j;
  j["command"] = r.command;
  if (!r.system.empty()) j["system"] = r.system;
  if (!r.verdict) {
    j["verdict"] = nullptr;
    j["error"] = r.error;
    return j;
  }
  j["verdict"] = to_string(*r.verdict);
  j["checks"] = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    cj["detail"] = c.detail;
    j["checks"].push_back(std::move(cj));
  }
  j["witness"] = r.witness;
  if (r.horizon) {
    j["levels"] = Json::array();
    for (const auto& row : r.levels) {
      Json lj;
      lj["level"] = row.level;
      lj["subject"] = row.subject;
      lj["advantage"] = row.advantage ? rational_json(*row.advantage) : Json(nullptr);
      lj["threshold"] = rational_json(row.threshold);
      lj["within"] = row.within;
      lj["note"] = row.note;
      j["levels"].push_back(std::move(lj));
    }
    Json h;
    h["L"] = r.horizon->max_level;
    h["threshold"] = r.horizon->threshold.to_string();
    h["note"] = "negligibility is decided only at levels 1.." +
                std::to_string(r.horizon->max_level);
    j["horizon"] = std::move(h);
  }
  return j;
}

std::string render_text(const VerdictReport& r) {
  std::ostringstream os;
  os << "command: " << r.command << "\n";
  if (!r.system.empty()) os << "system: " << r.system << "\n";
  if (!r.verdict) {
    os << "error: " << r.error << "\n";
    return os.str();
  }
  os << "verdict: " << to_string(*r.verdict) << "\n";
  for (const auto& c : r.checks) {
    os << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  if (!r.witness.is_null()) text_value(os, "", "witness", r.witness);
  if (r.horizon) {
    for (const auto& row : r.levels) {
      os << "  level " << row.level << " " << row.subject << ": advantage "
         << (row.advantage ? rational_text(*row.advantage) : std::string("n/a")) << ", threshold "
         << rational_text(row.threshold) << (row.within ? ", within" : ", EXCEEDS");
      if (!row.note.empty()) os << " [" << row.note << "]";
      os << "\n";
    }
    os << "horizon: L = " << r.horizon->max_level << ", threshold "
       << r.horizon->threshold.to_string() << "; negligibility is decided only at levels 1.."
       << r.horizon->max_level << "\n";
  }
  return os.str();
}

std::string render(const VerdictReport& report, Format format) {
  if (format == Format::kJson) return to_json(report).dump(2) + "\n";
  return render_text(report);
}

}  // namespace catcrypt::cli
