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
#include "catcrypt/diagram.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace catcrypt {

void CommutativityReport::merge(const CommutativityReport& other) {
  pairs.insert(pairs.end(), other.pairs.begin(), other.pairs.end());
}

std::string render_text(const CommutativityReport& report) {
  std::ostringstream os;
  os << (report.commutes() ? "commutes" : "does not commute") << " ("
     << report.pairs.size() << " parallel pair"
     << (report.pairs.size() == 1 ? "" : "s") << ")\n";
  for (const auto& p : report.pairs) {
    os << "  " << p.source << " => " << p.target << ": [" << p.lhs_path
       << "] vs [" << p.rhs_path << "] " << (p.equal ? "equal" : "DIFFER");
    if (p.witness) {
      os << " at (" << p.witness->row << ", " << p.witness->col
         << "): " << p.witness->lhs << " != " << p.witness->rhs;
    }
    os << '\n';
  }
  return os.str();
}

std::string render_json(const CommutativityReport& report) {
  nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
  for (const auto& p : report.pairs) {
    nlohmann::ordered_json j;
    j["pair"] = {p.lhs_path, p.rhs_path};
    j["source"] = p.source;
    j["target"] = p.target;
    j["equal"] = p.equal;
    if (p.witness) {
      j["witness"] = {{"row", p.witness->row},
                      {"col", p.witness->col},
                      {"lhs", p.witness->lhs},
                      {"rhs", p.witness->rhs}};
    } else {
      j["witness"] = nullptr;
    }
    pairs.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["commutes"] = report.commutes();
  out["pairs"] = std::move(pairs);
  return out.dump(2);
}

}  // namespace catcrypt
