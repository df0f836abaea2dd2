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
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "catcrypt/cli.hpp"

namespace py = pybind11;
using namespace catcrypt;

namespace {

cli::Command command(const std::string& name) {
  if (auto c = cli::parse_command(name)) return *c;
  throw py::value_error("unknown command '" + name + "'");
}

// Runs a check and returns (exit code, JSON report text).
std::pair<int, std::string> check(const std::string& name, std::optional<std::string> system,
                                  std::optional<std::string> adversaries,
                                  std::optional<std::string> policy,
                                  std::optional<std::size_t> level, std::uint64_t seed,
                                  std::size_t instances, const std::string& reuse) {
  cli::CheckRequest r;
  r.command = command(name);
  r.system = std::move(system);
  r.adversaries = std::move(adversaries);
  r.policy = std::move(policy);
  r.level = level;
  r.seed = seed;
  r.instances = instances;
  if (reuse == "coin") {
    r.reuse = ChallengeReuse::kCoin;
  } else if (reuse != "loss") {
    throw py::value_error("reuse must be 'loss' or 'coin'");
  }
  cli::VerdictReport report;
  {
    py::gil_scoped_release release;
    report = cli::run(r);
  }
  return {report.exit_code(), cli::to_json(report).dump()};
}

template <typename F>
auto parsed(const std::string& text, F&& f) {
  try {
    return f(io::parse_json(text, "argument"));
  } catch (const Error& e) {
    throw py::value_error(e.what());
  }
}

}  // namespace

PYBIND11_MODULE(_catcrypt, m) {
  m.doc() = "Finite crypto-system security checks";

  m.def("check", &check, py::arg("command"), py::arg("system") = py::none(),
        py::arg("adversaries") = py::none(), py::arg("policy") = py::none(),
        py::arg("level") = py::none(), py::arg("seed") = 1, py::arg("instances") = 100,
        py::arg("reuse") = "loss");
  m.def("corpus_dir", [] { return cli::corpus_dir().string(); });

  m.def("algebraically_secure", [](const std::string& text) {
    return parsed(text, [](const io::Json& j) {
      return is_algebraically_perfectly_secure(io::dy_from_json(j)).secure;
    });
  });
  m.def("decryption_condition", [](const std::string& text) {
    return parsed(text, [](const io::Json& j) {
      return check_decryption_condition(io::dy_from_json(j)).holds;
    });
  });
  m.def("shannon_secure", [](const std::string& text) {
    return parsed(text, [](const io::Json& j) {
      return is_perfectly_secure_direct(io::shannon_from_json(j)).secure;
    });
  });
  m.def("max_ind_cpa_advantage", [](const std::string& text, std::size_t level) {
    return parsed(text, [&](const io::Json& j) {
      const CpaAdvantage a = max_ind_cpa_advantage(io::crypto_system_from_json(j), level);
      return to_string(a.enumerated);
    });
  });
  m.def("threshold", [](const std::string& expr, std::size_t level) {
    try {
      return to_string(Threshold::parse(expr).at(level));
    } catch (const Error& e) {
      throw py::value_error(e.what());
    }
  });
}
