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
#ifndef CATCRYPT_CLI_HPP_
#define CATCRYPT_CLI_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "catcrypt/games.hpp"
#include "catcrypt/io.hpp"

namespace catcrypt::cli {

enum class Command { kCheckDy, kCheckShannon, kCheckIndCpa, kCheckIndCca2, kSelftest };
enum class Format { kText, kJson };
enum class Verdict { kSecure, kInsecure, kVacuous };

const char* to_string(Command c);
const char* to_string(Verdict v);
std::optional<Command> parse_command(const std::string& name);

struct CheckRequest {
  Command command = Command::kSelftest;
  std::optional<std::string> system;
  std::optional<std::string> adversaries;
  std::optional<std::string> policy;
  std::optional<std::size_t> level;
  Format format = Format::kText;
  std::uint64_t seed = 1;
  std::size_t instances = 100;  // per selftest suite
  ChallengeReuse reuse = ChallengeReuse::kLoss;
};

struct CheckLine {
  std::string name;
  bool passed = true;
  std::string detail;
};

// One row of the per-level table of ensemble checks.
struct LevelRow {
  std::size_t level = 0;
  std::string subject;  // "max" or an adversary name
  std::optional<Rational> advantage;
  Rational threshold;
  bool within = true;
  std::string note;
};

struct VerdictReport {
  std::string command;
  std::string system;
  std::optional<Verdict> verdict;  // empty on input error
  std::vector<CheckLine> checks;
  io::Json witness;  // null unless insecure
  std::vector<LevelRow> levels;
  std::optional<NegligibilityPolicy> horizon;
  std::string error;

  // 0 secure or vacuous, 1 insecure, 2 input error.
  int exit_code() const;
};

// Directory searched for --system/--adversaries/--policy names that are not
// existing paths: $CATCRYPT_CORPUS if set, else the bundled corpus.
std::filesystem::path corpus_dir();
std::filesystem::path resolve(const std::string& name);

VerdictReport run(const CheckRequest& request);

io::Json to_json(const VerdictReport& report);
std::string render_text(const VerdictReport& report);
std::string render(const VerdictReport& report, Format format);

}  // namespace catcrypt::cli

#endif  // CATCRYPT_CLI_HPP_
