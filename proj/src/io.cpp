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
#include "catcrypt/io.hpp"

#include <fstream>
#include <sstream>

#include "catcrypt/error.hpp"

namespace catcrypt::io {
namespace {

const Json& field(const Json& j, const std::string& key, const std::string& ctx) {
  if (!j.is_object()) throw ParseError(ctx, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(ctx, "missing field '" + key + "'");
  return *it;
}

std::string sub(const std::string& ctx, const std::string& key) {
  return ctx.empty() ? key : ctx + "." + key;
}
std::string sub(const std::string& ctx, std::size_t i) {
  return ctx + "[" + std::to_string(i) + "]";
}

std::string text(const Json& j, const std::string& ctx) {
  if (!j.is_string()) throw ParseError(ctx, "expected a string");
  return j.get<std::string>();
}

std::size_t count(const Json& j, const std::string& ctx) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw ParseError(ctx, "expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

const Json& array(const Json& j, const std::string& ctx) {
  if (!j.is_array()) throw ParseError(ctx, "expected an array");
  return j;
}

Rational weight(const Json& j, const std::string& ctx) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  try {
    return parse_rational(text(j, ctx));
  } catch (const ParseError& e) {
    throw ParseError(ctx, e.what());
  }
}

std::size_t element(const Json& j, const EncodedSet& set, const std::string& ctx) {
  const std::string label = text(j, ctx);
  auto i = set.find(label);
  if (!i) throw ParseError(ctx, "'" + label + "' is not an element of " + set.describe());
  return *i;
}

OpTable op_table(const Json& j, const EncodedSet& set, const std::string& ctx) {
  array(j, ctx);
  if (j.size() != set.size()) {
    throw ParseError(ctx, "expected " + std::to_string(set.size()) + " rows");
  }
  OpTable t;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string row_ctx = sub(ctx, k);
    array(j[k], row_ctx);
    if (j[k].size() != set.size()) {
      throw ParseError(row_ctx, "expected " + std::to_string(set.size()) + " entries");
    }
    std::vector<std::size_t> row;
    for (std::size_t m = 0; m < j[k].size(); ++m) {
      row.push_back(element(j[k][m], set, sub(row_ctx, m)));
    }
    t.push_back(std::move(row));
  }
  return t;
}

Json op_table_json(const OpTable& t, const EncodedSet& set) {
  Json out = Json::array();
  for (const auto& row : t) {
    Json r = Json::array();
    for (std::size_t v : row) r.push_back(set.label(v));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Rational> weights(const Json& j, std::size_t n, const std::string& ctx) {
  array(j, ctx);
  if (j.size() != n) throw ParseError(ctx, "expected " + std::to_string(n) + " weights");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(weight(j[i], sub(ctx, i)));
  return out;
}

Json weights_json(const std::vector<Rational>& w) {
  Json out = Json::array();
  for (const auto& x : w) out.push_back(to_string(x));
  return out;
}

// Runs `fn`, turning library errors into parse errors at `ctx`.
template <typename Fn>
auto guarded(const std::string& ctx, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(ctx, e.what());
  }
}

struct DyParts {
  EncodedSet carrier;
  OpTable enc, dec;
  std::vector<std::size_t> pair;
  std::vector<bool> wellformed;
};

DyParts dy_parts(const Json& j) {
  const EncodedSet carrier = set_from_json(field(j, "carrier", ""), "carrier");
  DyParts p{carrier, op_table(field(j, "enc", ""), carrier, "enc"),
            op_table(field(j, "dec", ""), carrier, "dec"), {}, {}};
  const Json& pair = array(field(j, "pair", ""), "pair");
  if (pair.size() != carrier.size()) {
    throw ParseError("pair", "expected " + std::to_string(carrier.size()) + " entries");
  }
  for (std::size_t k = 0; k < pair.size(); ++k) {
    p.pair.push_back(element(pair[k], carrier, sub("pair", k)));
  }
  p.wellformed.assign(carrier.size(), false);
  if (j.contains("wellformed")) {
    const Json& wf = array(j["wellformed"], "wellformed");
    for (std::size_t i = 0; i < wf.size(); ++i) {
      p.wellformed[element(wf[i], carrier, sub("wellformed", i))] = true;
    }
  } else {
    p.wellformed.assign(carrier.size(), true);
  }
  return p;
}

void expect_kind(const Json& j, const std::string& kind) {
  const std::string got = text(field(j, "kind", ""), "kind");
  if (got != kind) throw ParseError("kind", "expected '" + kind + "', found '" + got + "'");
}

std::map<std::string, FeasibleEnsemble> named_ensembles(const Json& j) {
  std::map<std::string, FeasibleEnsemble> out;
  const Json& all = field(j, "ensembles", "");
  if (!all.is_object()) throw ParseError("ensembles", "expected an object");
  for (auto it = all.begin(); it != all.end(); ++it) {
    out.emplace(it.key(), ensemble_from_json(it.value(), "ensembles." + it.key()));
  }
  return out;
}

const FeasibleEnsemble& lookup(const std::map<std::string, FeasibleEnsemble>& e,
                               const Json& ref, const std::string& ctx) {
  const std::string name = text(ref, ctx);
  auto it = e.find(name);
  if (it == e.end()) throw ParseError(ctx, "no ensemble named '" + name + "'");
  return it->second;
}

StochasticEnsemble stage(const FeasibleEnsemble& e, const AbstractCryptoSystem& sys,
                         const std::function<StageSorts(std::size_t)>& shape,
                         const std::string& ctx) {
  if (e.levels() > sys.levels()) {
    throw ParseError(ctx, std::to_string(e.levels()) + " levels but the system has " +
                              std::to_string(sys.levels()));
  }
  std::vector<EncodedSet> dom, cod;
  for (std::size_t l = 1; l <= e.levels(); ++l) {
    const StageSorts s = shape(l);
    dom.push_back(s.dom);
    cod.push_back(s.cod);
  }
  return guarded(ctx, [&] { return realize(e, dom, cod); });
}

Json stage_json(const StochasticEnsemble& e) {
  std::vector<RandomizedFn> levels;
  for (std::size_t l = 1; l <= e.levels(); ++l) levels.push_back(deterministic_table(e.at(l)));
  return to_json(FeasibleEnsemble(std::move(levels)));
}

}  // namespace

Json parse_json(const std::string& source_text, const std::string& source) {
  try {
    return Json::parse(source_text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, source_text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (source_text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("parse error"); pos != std::string::npos) what = what.substr(pos);
    throw ParseError(source + ": line " + std::to_string(line) + ", column " +
                         std::to_string(column),
                     what);
  }
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path.string());
}

EncodedSet set_from_json(const Json& j, const std::string& ctx) {
  std::vector<std::string> labels;
  const Json& lj = j.is_array() ? j : field(j, "labels", ctx);
  array(lj, sub(ctx, "labels"));
  for (std::size_t i = 0; i < lj.size(); ++i) labels.push_back(text(lj[i], sub(ctx, i)));
  if (j.is_array()) {
    return guarded(ctx, [&] { return EncodedSet(std::move(labels)); });
  }
  const Json& cj = array(field(j, "codes", ctx), sub(ctx, "codes"));
  std::vector<std::string> codes;
  for (std::size_t i = 0; i < cj.size(); ++i) codes.push_back(text(cj[i], sub(ctx, i)));
  if (codes.size() != labels.size()) throw ParseError(ctx, "labels and codes differ in length");
  return guarded(ctx, [&] { return EncodedSet(std::move(labels), std::move(codes)); });
}

Json to_json(const EncodedSet& s) {
  Json out;
  out["labels"] = Json::array();
  out["codes"] = Json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    out["labels"].push_back(s.label(i));
    out["codes"].push_back(s.code(i));
  }
  return out;
}

DolevYaoSystem dy_from_json(const Json& j) {
  expect_kind(j, "dolev-yao");
  DyParts p = dy_parts(j);
  return guarded("system", [&] {
    return DolevYaoSystem(p.carrier, std::move(p.enc), std::move(p.dec), std::move(p.pair),
                          std::move(p.wellformed));
  });
}

Json to_json(const DolevYaoSystem& s, const std::string& name) {
  Json out;
  out["kind"] = "dolev-yao";
  out["name"] = name;
  out["carrier"] = to_json(s.carrier());
  out["enc"] = op_table_json(s.enc_table(), s.carrier());
  out["dec"] = op_table_json(s.dec_table(), s.carrier());
  out["pair"] = Json::array();
  for (std::size_t k : s.pair_table()) out["pair"].push_back(s.carrier().label(k));
  out["wellformed"] = Json::array();
  for (std::size_t m = 0; m < s.size(); ++m) {
    if (s.wellformed(m)) out["wellformed"].push_back(s.carrier().label(m));
  }
  return out;
}

ShannonSystem shannon_from_json(const Json& j) {
  expect_kind(j, "shannon");
  DyParts p = dy_parts(j);
  const std::size_t n = p.carrier.size();
  std::vector<Rational> kappa = weights(field(j, "kappa", ""), n, "kappa");
  std::vector<Rational> mu = weights(field(j, "mu", ""), n, "mu");
  const Distribution k = guarded("kappa", [&] { return Distribution(p.carrier, kappa); });
  const Distribution m = guarded("mu", [&] { return Distribution(p.carrier, mu); });
  return guarded("system", [&] {
    return ShannonSystem(p.carrier, std::move(p.enc), std::move(p.dec), std::move(p.pair), k, m);
  });
}

Json to_json(const ShannonSystem& s, const std::string& name) {
  Json out = to_json(s.reduct(), name);
  out["kind"] = "shannon";
  out.erase("wellformed");
  out["kappa"] = weights_json(s.kappa().weights());
  out["mu"] = weights_json(s.mu().weights());
  return out;
}

FeasibleEnsemble ensemble_from_json(const Json& j, const std::string& ctx) {
  const std::string lctx = sub(ctx, "levels");
  const Json& levels = array(field(j, "levels", ctx), lctx);
  std::vector<RandomizedFn> out;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const std::string c = sub(lctx, i);
    const Json& lv = levels[i];
    const auto r = static_cast<unsigned>(count(field(lv, "r", c), sub(c, "r")));
    const auto s = static_cast<unsigned>(count(field(lv, "s", c), sub(c, "s")));
    const auto t = static_cast<unsigned>(count(field(lv, "t", c), sub(c, "t")));
    RandomizedFn g = guarded(c, [&] { return RandomizedFn(r, s, t); });
    const Json& table = field(lv, "table", c);
    if (!table.is_object()) throw ParseError(sub(c, "table"), "expected an object");
    for (auto it = table.begin(); it != table.end(); ++it) {
      const std::string ectx = sub(c, "table") + "[\"" + it.key() + "\"]";
      const auto comma = it.key().find(',');
      if (comma == std::string::npos) throw ParseError(ectx, "key must be \"seed,input\"");
      const BitString seed = guarded(ectx, [&] { return BitString::parse(it.key().substr(0, comma)); });
      const BitString input = guarded(ectx, [&] { return BitString::parse(it.key().substr(comma + 1)); });
      const BitString output = guarded(ectx, [&] { return BitString::parse(text(it.value(), ectx)); });
      if (seed.length != r || input.length != s || output.length != t) {
        throw ParseError(ectx, "lengths " + std::to_string(seed.length) + "," +
                                   std::to_string(input.length) + " -> " +
                                   std::to_string(output.length) + " do not match r=" +
                                   std::to_string(r) + ", s=" + std::to_string(s) +
                                   ", t=" + std::to_string(t));
      }
      g.set(seed.value, input.value, output.value);
    }
    out.push_back(std::move(g));
  }
  return guarded(ctx, [&] { return FeasibleEnsemble(std::move(out)); });
}

Json to_json(const FeasibleEnsemble& e) {
  Json levels = Json::array();
  for (std::size_t l = 1; l <= e.levels(); ++l) {
    const RandomizedFn& g = e.at(l);
    Json table = Json::object();
    for (std::uint64_t rho = 0; rho < g.seed_count(); ++rho) {
      for (std::uint64_t x = 0; x < g.input_count(); ++x) {
        if (auto y = g.at(rho, x)) {
          table[BitString{rho, g.seed_len()}.to_string() + "," +
                BitString{x, g.in_len()}.to_string()] = BitString{*y, g.out_len()}.to_string();
        }
      }
    }
    Json lv;
    lv["r"] = g.seed_len();
    lv["s"] = g.in_len();
    lv["t"] = g.out_len();
    lv["table"] = std::move(table);
    levels.push_back(std::move(lv));
  }
  Json out;
  out["levels"] = std::move(levels);
  return out;
}

RandomizedFn deterministic_table(const RationalMatrix& m) {
  const auto in = m.rows().code_length(), out = m.cols().code_length();
  if (!in || !out) throw InvalidArgument("deterministic_table: codes of mixed length");
  RandomizedFn g(0, static_cast<unsigned>(*in), static_cast<unsigned>(*out));
  for (std::size_t i = 0; i < m.num_rows(); ++i) {
    std::optional<std::size_t> hit;
    for (std::size_t j = 0; j < m.num_cols(); ++j) {
      const Rational& v = m.at(i, j);
      if (v == 0) continue;
      if (v != 1 || hit) {
        throw InvalidArgument("deterministic_table: row '" + m.rows().label(i) +
                              "' is not deterministic");
      }
      hit = j;
    }
    if (hit) {
      g.set(0, BitString::parse(m.rows().code(i)).value,
            BitString::parse(m.cols().code(*hit)).value);
    }
  }
  return g;
}

AbstractCryptoSystem crypto_system_from_json(const Json& j) {
  expect_kind(j, "ensemble");
  const std::string name = j.contains("name") ? text(j["name"], "name") : "system";
  const Json& sj = array(field(j, "sorts", ""), "sorts");
  std::vector<LevelSorts> sorts;
  for (std::size_t i = 0; i < sj.size(); ++i) {
    const std::string c = sub("sorts", i);
    LevelSorts s{set_from_json(field(sj[i], "K", c), sub(c, "K")),
                 set_from_json(field(sj[i], "M", c), sub(c, "M")),
                 set_from_json(field(sj[i], "C", c), sub(c, "C")), EncodedSet::unit()};
    if (sj[i].contains("S")) s.state = set_from_json(sj[i]["S"], sub(c, "S"));
    sorts.push_back(std::move(s));
  }
  const auto ens = named_ensembles(j);
  std::vector<std::vector<Rational>> mu;
  if (j.contains("mu")) {
    const Json& mj = array(j["mu"], "mu");
    if (mj.size() != sorts.size()) throw ParseError("mu", "expected one distribution per level");
    for (std::size_t i = 0; i < mj.size(); ++i) {
      mu.push_back(weights(mj[i], sorts[i].messages.size(), sub("mu", i)));
    }
  }
  return guarded("system", [&] {
    return AbstractCryptoSystem(name, std::move(sorts), lookup(ens, field(j, "enc", ""), "enc"),
                                lookup(ens, field(j, "dec", ""), "dec"),
                                lookup(ens, field(j, "pair", ""), "pair"),
                                lookup(ens, field(j, "keygen", ""), "keygen"), std::move(mu));
  });
}

Json to_json(const AbstractCryptoSystem& s) {
  Json out;
  out["kind"] = "ensemble";
  out["name"] = s.name();
  out["sorts"] = Json::array();
  out["mu"] = Json::array();
  for (std::size_t l = 1; l <= s.levels(); ++l) {
    const LevelSorts& ls = s.sorts(l);
    Json j;
    j["K"] = to_json(ls.keys);
    j["M"] = to_json(ls.messages);
    j["C"] = to_json(ls.ciphertexts);
    j["S"] = to_json(ls.state);
    out["sorts"].push_back(std::move(j));
    out["mu"].push_back(weights_json(s.mu(l)));
  }
  out["enc"] = "enc";
  out["dec"] = "dec";
  out["pair"] = "pair";
  out["keygen"] = "keygen";
  out["ensembles"]["enc"] = to_json(s.enc());
  out["ensembles"]["dec"] = to_json(s.dec());
  out["ensembles"]["pair"] = to_json(s.pair());
  out["ensembles"]["keygen"] = to_json(s.keygen());
  return out;
}

std::vector<CpaAdversary> cpa_adversaries_from_json(const Json& j,
                                                    const AbstractCryptoSystem& sys) {
  expect_kind(j, "ind-cpa-adversaries");
  const auto ens = named_ensembles(j);
  const Json& list = array(field(j, "adversaries", ""), "adversaries");
  std::vector<CpaAdversary> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string c = sub("adversaries", i);
    CpaAdversary adv;
    adv.name = text(field(list[i], "name", c), sub(c, "name"));
    const std::string shape = list[i].contains("shape") ? text(list[i]["shape"], sub(c, "shape")) : "game";
    if (shape == "keyed") {
      adv.shape = CpaAdversary::Shape::kKeyed;
    } else if (shape != "game") {
      throw ParseError(sub(c, "shape"), "expected 'game' or 'keyed'");
    }
    adv.a0 = stage(lookup(ens, field(list[i], "A0", c), sub(c, "A0")), sys,
                   [&](std::size_t l) { return cpa_stage(sys, l, 0, adv.shape); }, sub(c, "A0"));
    adv.a1 = stage(lookup(ens, field(list[i], "A1", c), sub(c, "A1")), sys,
                   [&](std::size_t l) { return cpa_stage(sys, l, 1); }, sub(c, "A1"));
    out.push_back(std::move(adv));
  }
  return out;
}

Json cpa_adversaries_to_json(const std::vector<CpaAdversary>& advs) {
  Json out;
  out["kind"] = "ind-cpa-adversaries";
  out["adversaries"] = Json::array();
  out["ensembles"] = Json::object();
  for (const auto& a : advs) {
    Json j;
    j["name"] = a.name;
    j["shape"] = a.shape == CpaAdversary::Shape::kKeyed ? "keyed" : "game";
    j["A0"] = a.name + ".A0";
    j["A1"] = a.name + ".A1";
    out["adversaries"].push_back(std::move(j));
    out["ensembles"][a.name + ".A0"] = stage_json(a.a0);
    out["ensembles"][a.name + ".A1"] = stage_json(a.a1);
  }
  return out;
}

std::vector<Cca2Adversary> cca2_adversaries_from_json(const Json& j,
                                                      const AbstractCryptoSystem& sys) {
  expect_kind(j, "ind-cca2-adversaries");
  const auto ens = named_ensembles(j);
  const Json& list = array(field(j, "adversaries", ""), "adversaries");
  std::vector<Cca2Adversary> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string c = sub("adversaries", i);
    Cca2Adversary adv;
    adv.name = text(field(list[i], "name", c), sub(c, "name"));
    StochasticEnsemble* stages[] = {&adv.a0, &adv.a1, &adv.a2, &adv.a3};
    for (int n = 0; n < 4; ++n) {
      const std::string key = "A" + std::to_string(n);
      *stages[n] = stage(lookup(ens, field(list[i], key, c), sub(c, key)), sys,
                         [&](std::size_t l) { return cca2_stage(sys, l, n); }, sub(c, key));
    }
    out.push_back(std::move(adv));
  }
  return out;
}

Json cca2_adversaries_to_json(const std::vector<Cca2Adversary>& advs) {
  Json out;
  out["kind"] = "ind-cca2-adversaries";
  out["adversaries"] = Json::array();
  out["ensembles"] = Json::object();
  for (const auto& a : advs) {
    Json j;
    j["name"] = a.name;
    const StochasticEnsemble* stages[] = {&a.a0, &a.a1, &a.a2, &a.a3};
    for (int n = 0; n < 4; ++n) {
      const std::string key = "A" + std::to_string(n);
      j[key] = a.name + "." + key;
      out["ensembles"][a.name + "." + key] = stage_json(*stages[n]);
    }
    out["adversaries"].push_back(std::move(j));
  }
  return out;
}

NegligibilityPolicy policy_from_json(const Json& j) {
  NegligibilityPolicy p;
  p.max_level = count(field(j, "L", ""), "L");
  if (p.max_level == 0) throw ParseError("L", "the horizon must be at least 1");
  if (j.contains("threshold")) p.threshold = Threshold::parse(text(j["threshold"], "threshold"));
  return p;
}

Json to_json(const NegligibilityPolicy& p) {
  Json out;
  out["L"] = p.max_level;
  out["threshold"] = p.threshold.to_string();
  return out;
}

}  // namespace catcrypt::io
