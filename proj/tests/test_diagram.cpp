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
#include <nlohmann/json.hpp>

#include "catcrypt/corpus.hpp"
#include "catcrypt/diagram.hpp"
#include "catcrypt/symbolic.hpp"
#include "doctest.h"

using namespace catcrypt;

namespace {

Diagram<RationalSemiring> identity_square(const EncodedSet& a) {
  Diagram<RationalSemiring> d;
  for (const char* n : {"tl", "tr", "bl", "br"}) d.add_object(n, a);
  const auto id = identity<RationalSemiring>(a);
  d.add_edge("tl", "tr", id, "f");
  d.add_edge("tr", "br", id, "h");
  d.add_edge("tl", "bl", id, "g");
  d.add_edge("bl", "br", id, "k");
  return d;
}

}  // namespace

TEST_CASE("path_composite") {
  const auto a = EncodedSet::range(3, 2);
  const auto d = identity_square(a);
  CHECK(path_composite(d, {0}) == d.edges()[0].morphism);
  CHECK(path_composite(d, {0, 1}) == identity<RationalSemiring>(a));
  CHECK_THROWS_AS(path_composite(d, {0, 2}), InvalidArgument);
  CHECK_THROWS_AS(path_composite(d, {}), InvalidArgument);
  CHECK_THROWS_AS(path_composite(d, {9}), InvalidArgument);
}

TEST_CASE("identity square commutes") {
  const auto report = check_commutes(identity_square(EncodedSet::range(2, 1)));
  REQUIRE(report.pairs.size() == 1);
  CHECK(report.pairs[0].lhs_path == "f;h");
  CHECK(report.pairs[0].rhs_path == "g;k");
  CHECK(report.commutes());
  CHECK_FALSE(report.pairs[0].witness);
}

TEST_CASE("empty diagram is a vacuous pass") {
  Diagram<BooleanSemiring> d;
  d.add_object("A", EncodedSet::range(2, 1));
  const auto report = check_commutes(d);
  CHECK(report.pairs.empty());
  CHECK(report.commutes());
}

TEST_CASE("edges must match their endpoints") {
  Diagram<BooleanSemiring> d;
  d.add_object("A", EncodedSet::range(2, 1));
  d.add_object("B", EncodedSet::range(3, 2));
  CHECK_THROWS_AS(d.add_edge("A", "B", identity<BooleanSemiring>(EncodedSet::range(2, 1)), "x"),
                  DimensionMismatch);
  CHECK_THROWS_AS(d.add_edge("A", "C", identity<BooleanSemiring>(EncodedSet::range(2, 1)), "x"),
                  InvalidArgument);
  CHECK_THROWS_AS(d.add_object("A", EncodedSet::unit()), InvalidArgument);
}

TEST_CASE("Rel square for the one-time pad on Z2 commutes") {
  // By hand: every ciphertext is reached from both plaintexts (key c xor m),
  // so the top leg relates each c to all of M = A, as does the bottom leg.
  const auto d = build_rel_security_diagram(corpus::dy_otp(1));
  const auto top = path_composite(d, {0, 1});
  const auto bottom = path_composite(d, {2, 3});
  CHECK(top.entries() == std::vector<bool>(4, true));
  CHECK(bottom.entries() == std::vector<bool>(4, true));
  CHECK(check_commutes(d).commutes());
}

TEST_CASE("Rel square for the identity cipher fails at (c=0, m=1)") {
  // Top leg is c ~D m iff m = c: the equality relation, not the total one.
  const auto report = check_commutes(build_rel_security_diagram(corpus::dy_identity(2)));
  REQUIRE(report.pairs.size() == 1);
  const auto& p = report.pairs[0];
  CHECK_FALSE(p.equal);
  REQUIRE(p.witness);
  CHECK(p.witness->row == "0");
  CHECK(p.witness->col == "1");
  CHECK(p.lhs_path == "!;M");
  CHECK(p.witness->lhs == "1");
  CHECK(p.witness->rhs == "0");
}

TEST_CASE("report does not depend on edge insertion order") {
  const auto a = EncodedSet::range(2, 1);
  const BoolMatrix swap(a, a, {false, true, true, false});
  auto build = [&](bool reversed) {
    Diagram<BooleanSemiring> d;
    for (const char* n : {"s", "m1", "m2", "t"}) d.add_object(n, a);
    std::vector<std::tuple<const char*, const char*, BoolMatrix, const char*>> edges{
        {"s", "m1", swap, "a"}, {"m1", "t", swap, "b"},
        {"s", "m2", identity<BooleanSemiring>(a), "c"}, {"m2", "t", swap, "d"}};
    if (reversed) std::reverse(edges.begin(), edges.end());
    for (auto& [s, t, m, l] : edges) d.add_edge(s, t, m, l);
    return d;
  };
  const auto r1 = check_commutes(build(false));
  const auto r2 = check_commutes(build(true));
  CHECK(render_json(r1) == render_json(r2));
  CHECK_FALSE(r1.commutes());
}

TEST_CASE("adding an edge equal to a parallel composite keeps a pass") {
  auto d = identity_square(EncodedSet::range(3, 2));
  d.add_edge("tl", "br", path_composite(d, {0, 1}), "diag");
  const auto report = check_commutes(d);
  CHECK(report.pairs.size() == 3);
  CHECK(report.commutes());
}

TEST_CASE("path bound limits enumeration") {
  const auto a = EncodedSet::range(2, 1);
  Diagram<BooleanSemiring> d;
  for (const char* n : {"0", "1", "2", "3", "4", "5"}) d.add_object(n, a);
  const auto id = identity<BooleanSemiring>(a);
  for (int i = 0; i < 5; ++i) d.add_edge(std::to_string(i), std::to_string(i + 1), id, "e");
  d.add_edge("0", "5", id, "short");
  CHECK(check_commutes(d).pairs.empty());
  CHECK(check_commutes(d, exact_equality<BooleanSemiring>(), 5).pairs.size() == 1);
}

TEST_CASE("JSON rendering carries the witness fields") {
  const auto report = check_commutes(build_rel_security_diagram(corpus::dy_identity(2)));
  const auto j = nlohmann::json::parse(render_json(report));
  CHECK(j["commutes"] == false);
  CHECK(j["pairs"][0]["pair"][0] == "!;M");
  CHECK(j["pairs"][0]["pair"][1] == "E~M;!xA");
  CHECK(j["pairs"][0]["equal"] == false);
  CHECK(j["pairs"][0]["witness"]["row"] == "0");
  CHECK(j["pairs"][0]["witness"]["col"] == "1");
  CHECK(j["pairs"][0]["witness"]["lhs"] == "1");
  CHECK(j["pairs"][0]["witness"]["rhs"] == "0");
  CHECK(render_text(report).find("DIFFER") != std::string::npos);
}
