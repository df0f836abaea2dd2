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
// Writes the bundled example corpus into the directory given as argv[1].
#include <filesystem>
#include <fstream>
#include <iostream>

#include "catcrypt/corpus.hpp"
#include "catcrypt/io.hpp"

namespace fs = std::filesystem;
using catcrypt::Rational;
using catcrypt::io::Json;
namespace corpus = catcrypt::corpus;

namespace {

fs::path out_dir;

void write(const std::string& name, const Json& j) {
  std::ofstream f(out_dir / (name + ".json"));
  f << j.dump(2) << "\n";
}

std::vector<Rational> skewed(std::size_t n) {
  std::vector<Rational> w(n, Rational(0));
  w[0] = Rational(2, 3);
  w[1] = Rational(1, 3);
  return w;
}

std::vector<Rational> point(std::size_t n) {
  std::vector<Rational> w(n, Rational(0));
  w[0] = Rational(1);
  return w;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_corpus DIR\n";
    return 2;
  }
  out_dir = argv[1];
  fs::create_directories(out_dir);

  for (unsigned n = 1; n <= 3; ++n) {
    const std::string b = std::to_string(n);
    write("dy-otp-" + b, catcrypt::io::to_json(corpus::dy_otp(n), "otp-" + b));
    const std::size_t size = std::size_t{1} << n;
    write("shannon-otp-" + b,
          catcrypt::io::to_json(corpus::shannon_otp(n, corpus::uniform_weights(size)),
                                "otp-" + b + "-uniform"));
    write("shannon-otp-" + b + "-skewed",
          catcrypt::io::to_json(corpus::shannon_otp(n, skewed(size)), "otp-" + b + "-skewed"));
    write("shannon-otp-" + b + "-point",
          catcrypt::io::to_json(corpus::shannon_otp(n, point(size)), "otp-" + b + "-point"));
  }
  write("dy-shift-26", catcrypt::io::to_json(corpus::dy_shift(26), "shift-26"));
  write("dy-identity", catcrypt::io::to_json(corpus::dy_identity(4), "identity"));
  write("dy-constant", catcrypt::io::to_json(corpus::dy_constant(4), "constant"));
  write("shannon-shift-26", catcrypt::io::to_json(
                                corpus::shannon_shift(26, corpus::uniform_weights(26)), "shift-26"));
  write("shannon-identity",
        catcrypt::io::to_json(corpus::shannon_identity(4, corpus::uniform_weights(4)), "identity"));
  write("shannon-fixed-key",
        catcrypt::io::to_json(corpus::shannon_fixed_key(2, 1, corpus::uniform_weights(4)),
                              "fixed-key"));

  const auto otp = corpus::ens_otp(5);
  const auto leaky = corpus::ens_leaky_otp(4);
  const auto identity = corpus::ens_identity(5);
  const auto malleable = corpus::ens_malleable_otp(2);
  write("ens-otp", catcrypt::io::to_json(otp));
  write("ens-leaky-otp", catcrypt::io::to_json(leaky));
  write("ens-identity", catcrypt::io::to_json(identity));
  write("ens-malleable-otp", catcrypt::io::to_json(malleable));
  write("ens-key-echo", catcrypt::io::to_json(corpus::ens_key_echo(2)));
  // Adversary tables are sized by the system's sorts; otp and identity share them.
  write("cpa-adversaries", catcrypt::io::cpa_adversaries_to_json(
                               {corpus::cpa_distinguisher(otp), corpus::cpa_constant(otp, false)}));
  write("cpa-adversaries-leaky",
        catcrypt::io::cpa_adversaries_to_json(
            {corpus::cpa_distinguisher(leaky), corpus::cpa_constant(leaky, false)}));
  write("cca2-bitflip", catcrypt::io::cca2_adversaries_to_json(
                            {corpus::cca2_bit_flip(malleable), corpus::cca2_oracle_ignoring(malleable)}));
  write("policy-default", catcrypt::io::to_json(catcrypt::NegligibilityPolicy{
                              5, catcrypt::Threshold::polynomial(Rational(1), 2)}));
  write("policy-strict",
        catcrypt::io::to_json(catcrypt::NegligibilityPolicy{5, catcrypt::Threshold::zero()}));
  return 0;
}
