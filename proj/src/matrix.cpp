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
#include "catcrypt/matrix.hpp"

namespace catcrypt {

const char* to_string(Stochasticity s) {
  switch (s) {
    case Stochasticity::kStochastic:
      return "stochastic";
    case Stochasticity::kSubstochastic:
      return "substochastic";
    case Stochasticity::kNeither:
      return "neither";
  }
  return "neither";
}

Stochasticity is_stochastic(const RationalMatrix& f) {
  bool all_one = true;
  for (std::size_t r = 0; r < f.num_rows(); ++r) {
    Rational sum = 0;
    for (std::size_t c = 0; c < f.num_cols(); ++c) {
      if (f.at(r, c) < 0) return Stochasticity::kNeither;
      sum += f.at(r, c);
    }
    if (sum > 1) return Stochasticity::kNeither;
    if (sum != 1) all_one = false;
  }
  return all_one ? Stochasticity::kStochastic : Stochasticity::kSubstochastic;
}

RationalMatrix convex_mix(const Rational& p, const RationalMatrix& f,
                          const RationalMatrix& g) {
  if (p < 0 || p > 1) {
    throw InvalidArgument("convex_mix: weight " + to_string(p) +
                          " is outside [0,1]");
  }
  if (!(f.rows() == g.rows()) || !(f.cols() == g.cols())) {
    throw DimensionMismatch("convex_mix: shapes " +
                            std::to_string(f.num_rows()) + "x" +
                            std::to_string(f.num_cols()) + " and " +
                            std::to_string(g.num_rows()) + "x" +
                            std::to_string(g.num_cols()) + " differ");
  }
  const Rational q = 1 - p;
  return RationalMatrix::generate(
      f.rows(), f.cols(),
      [&](std::size_t r, std::size_t c) { return p * f.at(r, c) + q * g.at(r, c); });
}

RationalMatrix point(const EncodedSet& a, std::vector<Rational> weights) {
  if (weights.size() != a.size()) {
    throw DimensionMismatch("point: " + std::to_string(weights.size()) +
                            " weights for " + a.describe());
  }
  return RationalMatrix(EncodedSet::unit(), a, std::move(weights));
}

RationalMatrix copoint(const EncodedSet& a, std::vector<Rational> weights) {
  if (weights.size() != a.size()) {
    throw DimensionMismatch("copoint: " + std::to_string(weights.size()) +
                            " weights for " + a.describe());
  }
  return RationalMatrix(a, EncodedSet::unit(), std::move(weights));
}

BoolMatrix support(const RationalMatrix& f) {
  return BoolMatrix::generate(f.rows(), f.cols(), [&](std::size_t r, std::size_t c) {
    return f.at(r, c) != 0;
  });
}

}  // namespace catcrypt
