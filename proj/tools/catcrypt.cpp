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
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "catcrypt/cli.hpp"

int main(int argc, char** argv) {
  using catcrypt::cli::Command;
  using catcrypt::cli::Format;

  CLI::App app{"Decide finite crypto-system security notions by diagram chasing"};
  app.require_subcommand(1);
  catcrypt::cli::CheckRequest req;
  std::string reuse = "loss";

  const std::map<std::string, Format> formats{{"text", Format::kText}, {"json", Format::kJson}};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", req.format, "text or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--seed", req.seed, "RNG seed");
  };
  auto system = [&](CLI::App* sub) {
    sub->add_option("--system", req.system, "system JSON file")->required();
  };
  auto ensemble = [&](CLI::App* sub) {
    sub->add_option("--policy", req.policy, "negligibility policy JSON file");
    sub->add_option("--level", req.level, "check a single level");
  };

  for (Command c : {Command::kCheckDy, Command::kCheckShannon, Command::kCheckIndCpa,
                    Command::kCheckIndCca2, Command::kSelftest}) {
    CLI::App* sub = app.add_subcommand(catcrypt::cli::to_string(c));
    sub->callback([&req, c] { req.command = c; });
    common(sub);
    switch (c) {
      case Command::kCheckDy:
        sub->description("algebraic perfect security of a Dolev-Yao system");
        system(sub);
        break;
      case Command::kCheckShannon:
        sub->description("Shannon perfect security of a probabilistic system");
        system(sub);
        break;
      case Command::kCheckIndCpa:
        sub->description("IND-CPA advantage of an ensemble system");
        system(sub);
        ensemble(sub);
        sub->add_option("--adversaries", req.adversaries, "IND-CPA adversary JSON file");
        break;
      case Command::kCheckIndCca2:
        sub->description("IND-CCA2 guess probabilities of given adversaries");
        system(sub);
        ensemble(sub);
        sub->add_option("--adversaries", req.adversaries, "IND-CCA2 adversary JSON file")
            ->required();
        sub->add_option("--reuse", reuse, "score of a c1 == c query: loss or coin")
            ->check(CLI::IsMember({"loss", "coin"}));
        break;
      case Command::kSelftest:
        sub->description("cross-check the deciders on generated instances");
        sub->add_option("--instances", req.instances, "instances per suite");
        break;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (reuse == "coin") req.reuse = catcrypt::ChallengeReuse::kCoin;

  const catcrypt::cli::VerdictReport report = catcrypt::cli::run(req);
  std::cout << catcrypt::cli::render(report, req.format);
  if (!report.verdict) std::cerr << "catcrypt: " << report.error << "\n";
  return report.exit_code();
}
