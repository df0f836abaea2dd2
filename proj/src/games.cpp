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
#include "catcrypt/games.hpp"

#include <algorithm>
#include <initializer_list>

#include "catcrypt/error.hpp"
#include "catcrypt/randomized.hpp"

namespace catcrypt {
namespace {

EncodedSet prod(std::initializer_list<EncodedSet> sets) {
  auto it = sets.begin();
  EncodedSet out = *it++;
  for (; it != sets.end(); ++it) out = product(out, *it);
  return out;
}

std::string at_level(std::size_t level) { return " at level " + std::to_string(level); }

void require_uniform_codes(const EncodedSet& s, const std::string& what, std::size_t level) {
  if (!s.code_length()) {
    throw InvalidArgument(what + " sort" + at_level(level) + " has codes of mixed length");
  }
}

const RationalMatrix& stage_matrix(const StochasticEnsemble& e, std::size_t level,
                                   const StageSorts& expected, const std::string& what) {
  if (e.levels() < level) {
    throw DimensionMismatch(what + " has no level " + std::to_string(level));
  }
  const RationalMatrix& m = e.at(level);
  if (!(m.rows() == expected.dom) || !(m.cols() == expected.cod)) {
    throw DimensionMismatch(what + at_level(level) + " is " + m.rows().describe() +
                            " -> " + m.cols().describe() + ", expected " +
                            expected.dom.describe() + " -> " + expected.cod.describe());
  }
  return m;
}

std::uint64_t code_value(const EncodedSet& s, std::size_t i) {
  return BitString::parse(s.code(i)).value;
}

// Game engine for IND-CPA at one level; a0 rows are 1^l or K per `keyed`.
Rational cpa_guess(const AbstractCryptoSystem& sys, std::size_t level,
                   const RationalMatrix& a0, const RationalMatrix& a1, bool keyed) {
  const LevelSorts& s = sys.sorts(level);
  const std::size_t nM = s.messages.size(), nS = s.state.size(), nC = s.ciphertexts.size();
  const std::size_t nX = nM * nM * nS;
  const RationalMatrix& e = sys.enc_matrix(level);
  const std::vector<Rational> kappa = sys.key_marginal(level);
  const Rational half(1, 2);
  Rational total = 0;
  for (std::size_t k = 0; k < kappa.size(); ++k) {
    if (kappa[k] == 0) continue;
    for (std::size_t x = 0; x < nX; ++x) {
      const Rational& w0 = a0.at(keyed ? k : 0, x);
      if (w0 == 0) continue;
      const std::size_t m0 = x / (nM * nS), m1 = (x / nS) % nM;
      for (std::size_t b = 0; b < 2; ++b) {
        const std::size_t mb = b ? m1 : m0;
        for (std::size_t c = 0; c < nC; ++c) {
          const Rational& ec = e.at(k * nM + mb, c);
          if (ec == 0) continue;
          const Rational& guess = a1.at(c * nX + x, b);
          if (guess == 0) continue;
          total += kappa[k] * w0 * half * ec * guess;
        }
      }
    }
  }
  return total;
}

RationalMatrix bang(const EncodedSet& from, const EncodedSet& to_point) {
  return RationalMatrix::generate(from, to_point,
                                  [](std::size_t, std::size_t) { return Rational(1); });
}

}  // namespace

EncodedSet security_unit(std::size_t level) {
  return EncodedSet({"*"}, {std::string(level, '1')});
}

AbstractCryptoSystem::AbstractCryptoSystem(std::string name, std::vector<LevelSorts> sorts,
                                           FeasibleEnsemble enc, FeasibleEnsemble dec,
                                           FeasibleEnsemble pair, FeasibleEnsemble keygen,
                                           std::vector<std::vector<Rational>> mu)
    : name_(std::move(name)),
      sorts_(std::move(sorts)),
      enc_(std::move(enc)),
      dec_(std::move(dec)),
      pair_(std::move(pair)),
      keygen_(std::move(keygen)),
      mu_(std::move(mu)) {
  const std::size_t n = sorts_.size();
  for (const auto* e : {&enc_, &dec_, &pair_, &keygen_}) {
    if (e->levels() != n) {
      throw DimensionMismatch("crypto system '" + name_ + "': " + std::to_string(n) +
                              " sort levels but an ensemble with " +
                              std::to_string(e->levels()));
    }
  }
  if (!dec_.deterministic() || !pair_.deterministic()) {
    throw InvalidArgument("crypto system '" + name_ +
                          "': decryption and key pairing must be deterministic");
  }
  if (mu_.empty()) {
    for (const auto& s : sorts_) {
      mu_.emplace_back(s.messages.size(), Rational(1, static_cast<long long>(
                                                          std::max<std::size_t>(1, s.messages.size()))));
    }
  }
  if (mu_.size() != n) {
    throw DimensionMismatch("crypto system '" + name_ + "': plaintext distribution for " +
                            std::to_string(mu_.size()) + " of " + std::to_string(n) +
                            " levels");
  }
  for (std::size_t l = 1; l <= n; ++l) {
    const LevelSorts& s = sorts_[l - 1];
    require_uniform_codes(s.keys, "key", l);
    require_uniform_codes(s.messages, "plaintext", l);
    require_uniform_codes(s.ciphertexts, "ciphertext", l);
    require_uniform_codes(s.state, "state", l);
    if (s.keys.size() == 0 || s.messages.size() == 0 || s.ciphertexts.size() == 0) {
      throw InvalidArgument("crypto system '" + name_ + "': empty sort" + at_level(l));
    }
    enc_matrix_.push_back(
        realize_level(enc_.at(l), product(s.keys, s.messages), s.ciphertexts));
    keygen_matrix_.push_back(
        realize_level(keygen_.at(l), security_unit(l), product(s.keys, s.keys)));
    realize_level(dec_.at(l), product(s.keys, s.ciphertexts), s.messages);
    realize_level(pair_.at(l), s.keys, s.keys);
    const auto& m = mu_[l - 1];
    Rational total = 0;
    for (const auto& w : m) {
      if (w < 0) throw InvalidArgument("crypto system '" + name_ + "': negative plaintext weight");
      total += w;
    }
    if (m.size() != s.messages.size() || total != 1) {
      throw InvalidArgument("crypto system '" + name_ + "': plaintext distribution" +
                            at_level(l) + " is not a distribution on " +
                            s.messages.describe());
    }
  }
}

const LevelSorts& AbstractCryptoSystem::sorts(std::size_t level) const {
  if (level == 0 || level > sorts_.size()) {
    throw InvalidArgument("crypto system '" + name_ + "' has no level " +
                          std::to_string(level));
  }
  return sorts_[level - 1];
}

const RationalMatrix& AbstractCryptoSystem::enc_matrix(std::size_t level) const {
  sorts(level);
  return enc_matrix_[level - 1];
}

const RationalMatrix& AbstractCryptoSystem::keygen_matrix(std::size_t level) const {
  sorts(level);
  return keygen_matrix_[level - 1];
}

std::vector<Rational> AbstractCryptoSystem::key_marginal(std::size_t level) const {
  const RationalMatrix& g = keygen_matrix(level);
  const std::size_t nK = sorts(level).keys.size();
  std::vector<Rational> out(nK, Rational(0));
  for (std::size_t k = 0; k < nK; ++k) {
    for (std::size_t kb = 0; kb < nK; ++kb) out[k] += g.at(0, k * nK + kb);
  }
  return out;
}

const std::vector<Rational>& AbstractCryptoSystem::mu(std::size_t level) const {
  sorts(level);
  return mu_[level - 1];
}

std::optional<std::size_t> AbstractCryptoSystem::decrypt(std::size_t level, std::size_t kbar,
                                                         std::size_t c) const {
  const LevelSorts& s = sorts(level);
  const RandomizedFn& d = dec_.at(level);
  const BitString x = concat(BitString::parse(s.keys.code(kbar)),
                             BitString::parse(s.ciphertexts.code(c)));
  auto y = d.at(0, x.value);
  if (!y) return std::nullopt;
  return s.messages.find_code(BitString{*y, d.out_len()}.to_string());
}

std::optional<std::size_t> AbstractCryptoSystem::pair_of(std::size_t level,
                                                         std::size_t k) const {
  const LevelSorts& s = sorts(level);
  const RandomizedFn& p = pair_.at(level);
  auto y = p.at(0, code_value(s.keys, k));
  if (!y) return std::nullopt;
  return s.keys.find_code(BitString{*y, p.out_len()}.to_string());
}

UniqueDecryption check_unique_decryption(const AbstractCryptoSystem& sys) {
  for (std::size_t l = 1; l <= sys.levels(); ++l) {
    const LevelSorts& s = sys.sorts(l);
    const std::size_t nK = s.keys.size();
    const RationalMatrix& g = sys.keygen_matrix(l);
    const RandomizedFn& enc = sys.enc().at(l);
    for (std::size_t kk = 0; kk < nK * nK; ++kk) {
      if (g.at(0, kk) == 0) continue;
      const std::size_t k = kk / nK, kbar = kk % nK;
      if (sys.pair_of(l, k) != kbar) {
        return {false, l, "keygen yields (" + s.keys.label(k) + ", " + s.keys.label(kbar) +
                              ") but pair(" + s.keys.label(k) + ") differs"};
      }
      for (std::size_t m = 0; m < s.messages.size(); ++m) {
        const BitString x = concat(BitString::parse(s.keys.code(k)),
                                   BitString::parse(s.messages.code(m)));
        for (std::uint64_t rho = 0; rho < enc.seed_count(); ++rho) {
          auto y = enc.at(rho, x.value);
          if (!y) continue;
          const std::string code = BitString{*y, enc.out_len()}.to_string();
          auto c = s.ciphertexts.find_code(code);
          const std::string where = "k=" + s.keys.label(k) + ", kbar=" + s.keys.label(kbar) +
                                    ", m=" + s.messages.label(m) + ", seed " +
                                    std::to_string(rho);
          if (!c) return {false, l, where + ": ciphertext " + code + " is outside C"};
          auto back = sys.decrypt(l, kbar, *c);
          if (back != m) {
            return {false, l, where + ": D(kbar, " + s.ciphertexts.label(*c) + ") = " +
                                  (back ? s.messages.label(*back) : std::string("undefined"))};
          }
        }
      }
    }
  }
  return {};
}

bool is_perfectly_secure_at(const AbstractCryptoSystem& sys, std::size_t level) {
  const LevelSorts& s = sys.sorts(level);
  const std::size_t nM = s.messages.size();
  const RationalMatrix& e = sys.enc_matrix(level);
  const std::vector<Rational> kappa = sys.key_marginal(level);
  const std::vector<Rational>& mu = sys.mu(level);
  for (std::size_t c = 0; c < s.ciphertexts.size(); ++c) {
    std::vector<Rational> joint(nM, Rational(0));
    Rational pc = 0;
    for (std::size_t k = 0; k < kappa.size(); ++k) {
      for (std::size_t m = 0; m < nM; ++m) {
        const Rational w = kappa[k] * mu[m] * e.at(k * nM + m, c);
        joint[m] += w;
        pc += w;
      }
    }
    if (pc == 0) continue;
    for (std::size_t m = 0; m < nM; ++m) {
      if (joint[m] / pc != mu[m]) return false;
    }
  }
  return true;
}

StageSorts cpa_stage(const AbstractCryptoSystem& sys, std::size_t level, int stage,
                     CpaAdversary::Shape shape) {
  const LevelSorts& s = sys.sorts(level);
  const EncodedSet& M = s.messages;
  if (stage == 0) {
    return {shape == CpaAdversary::Shape::kGame ? security_unit(level) : s.keys,
            prod({M, M, s.state})};
  }
  if (stage == 1) return {prod({s.ciphertexts, M, M, s.state}), EncodedSet::two()};
  throw InvalidArgument("IND-CPA adversaries have stages 0 and 1");
}

StageSorts cca2_stage(const AbstractCryptoSystem& sys, std::size_t level, int stage) {
  const LevelSorts& s = sys.sorts(level);
  const EncodedSet& C = s.ciphertexts;
  const EncodedSet& M = s.messages;
  const EncodedSet& S = s.state;
  switch (stage) {
    case 0:
      return {security_unit(level), prod({C, S})};
    case 1:
      return {prod({C, M, S}), prod({M, M, S})};
    case 2:
      return {prod({C, M, M, M, C, S}), prod({C, S})};
    case 3:
      return {prod({C, M, M, M, C, C, M, S}), EncodedSet::two()};
    default:
      throw InvalidArgument("IND-CCA2 adversaries have stages 0 to 3");
  }
}

CpaAdversary lift_to_keyed(const AbstractCryptoSystem& sys, const CpaAdversary& adv) {
  if (adv.shape == CpaAdversary::Shape::kKeyed) return adv;
  std::vector<RationalMatrix> levels;
  for (std::size_t l = 1; l <= adv.a0.levels(); ++l) {
    const RationalMatrix& a0 = stage_matrix(adv.a0, l, cpa_stage(sys, l, 0), "A0 of '" + adv.name + "'");
    levels.push_back(compose(bang(sys.sorts(l).keys, security_unit(l)), a0));
  }
  return {adv.name, CpaAdversary::Shape::kKeyed, StochasticEnsemble(std::move(levels)), adv.a1};
}

Rational ind_cpa_guess_prob(const AbstractCryptoSystem& sys, const CpaAdversary& adv,
                            std::size_t level) {
  const RationalMatrix& a0 = stage_matrix(adv.a0, level, cpa_stage(sys, level, 0, adv.shape),
                                          "A0 of '" + adv.name + "'");
  const RationalMatrix& a1 =
      stage_matrix(adv.a1, level, cpa_stage(sys, level, 1), "A1 of '" + adv.name + "'");
  return cpa_guess(sys, level, a0, a1, adv.shape == CpaAdversary::Shape::kKeyed);
}

CommutativityReport check_ind_cpa_diagram(const AbstractCryptoSystem& sys,
                                          const std::vector<CpaAdversary>& adversaries,
                                          const NegligibilityPolicy& policy) {
  CommutativityReport report;
  if (adversaries.empty()) return report;
  const std::size_t horizon = std::min(policy.max_level, sys.levels());
  for (std::size_t l = 1; l <= horizon; ++l) {
    const LevelSorts& s = sys.sorts(l);
    const EncodedSet& K = s.keys;
    const EncodedSet& M = s.messages;
    const EncodedSet two = EncodedSet::two();
    const EncodedSet mms = prod({M, M, s.state});
    const EncodedSet k_mms = prod({K, mms});
    const EncodedSet k_m_mms_2 = prod({K, M, mms, two});
    const EncodedSet c_mms_2 = prod({s.ciphertexts, mms, two});
    for (const EncodedSet* o : {&k_mms, &k_m_mms_2, &c_mms_2}) {
      if (o->size() > kMaxDiagramObject) {
        throw CapExceeded("IND-CPA diagram" + at_level(l) + ": object of size " +
                          std::to_string(o->size()) + " exceeds " +
                          std::to_string(kMaxDiagramObject));
      }
    }
    const std::string src = "1^" + std::to_string(l);
    Diagram<RationalSemiring> d;
    d.add_object(src, security_unit(l));
    d.add_object("K", K);
    d.add_object("KxM2xS", k_mms);
    d.add_object("KxMxM2xSx2", k_m_mms_2);
    d.add_object("CxM2xSx2", c_mms_2);
    d.add_object("1", EncodedSet::unit());
    d.add_object("2", two);

    const std::size_t nK = K.size(), nM = M.size(), nS = s.state.size(), nX = mms.size();
    const RationalMatrix proj = RationalMatrix::generate(
        product(K, K), K, [&](std::size_t kk, std::size_t k) {
          return Rational(kk / nK == k ? 1 : 0);
        });
    const std::size_t keygen = d.add_edge(src, "K", compose(sys.keygen_matrix(l), proj), "keygen");
    const RationalMatrix pi = RationalMatrix::generate(
        k_mms, k_m_mms_2, [&](std::size_t r, std::size_t c) {
          const std::size_t k = r / nX, x = r % nX;
          const std::size_t b = c % 2, rest = c / 2;
          if (rest % nX != x || rest / nX / nM != k) return Rational(0);
          const std::size_t m0 = x / (nM * nS), m1 = (x / nS) % nM;
          return Rational((rest / nX) % nM == (b ? m1 : m0) ? Rational(1, 2) : Rational(0));
        });
    const std::size_t pi_edge = d.add_edge("KxM2xS", "KxMxM2xSx2", pi, "pi");
    const std::size_t exid = d.add_edge(
        "KxMxM2xSx2", "CxM2xSx2",
        kronecker(sys.enc_matrix(l), identity<RationalSemiring>(prod({mms, two}))), "Exid");
    const std::size_t to_one = d.add_edge("K", "1", bang(K, EncodedSet::unit()), "!");
    const std::size_t coin = d.add_edge("1", "2", point(two, {Rational(1, 2), Rational(1, 2)}), "b");

    for (const CpaAdversary& raw : adversaries) {
      const CpaAdversary adv = lift_to_keyed(sys, raw);
      const RationalMatrix& a0 = stage_matrix(adv.a0, l, cpa_stage(sys, l, 0, adv.shape),
                                              "A0 of '" + adv.name + "'");
      const RationalMatrix& a1 =
          stage_matrix(adv.a1, l, cpa_stage(sys, l, 1), "A1 of '" + adv.name + "'");
      const RationalMatrix pairing = RationalMatrix::generate(
          K, k_mms, [&](std::size_t k, std::size_t c) {
            return c / nX == k ? a0.at(k, c % nX) : Rational(0);
          });
      const RationalMatrix win = RationalMatrix::generate(
          c_mms_2, two, [&](std::size_t r, std::size_t w) {
            const std::size_t b = r % 2;
            return a1.at(r / 2, w ? b : 1 - b);
          });
      const std::size_t ida0 = d.add_edge("K", "KxM2xS", pairing, "<id,A0>[" + adv.name + "]");
      const std::size_t a1e = d.add_edge("CxM2xSx2", "2", win, "A1[" + adv.name + "]");
      d.add_parallel_pair({keygen, ida0, pi_edge, exid, a1e}, {keygen, to_one, coin});
    }
    report.merge(check_commutes(d, level_equivalence(policy, l)));
  }
  return report;
}

namespace {

std::size_t enumeration_size(const LevelSorts& s, std::size_t cap) {
  const std::size_t nM = s.messages.size(), nC = s.ciphertexts.size();
  if (nC >= 63 || nM * nM > (cap >> std::min<std::size_t>(nC, 62))) {
    throw CapExceeded("IND-CPA enumeration over " + std::to_string(nM * nM) +
                      " plaintext pairs and 2^" + std::to_string(nC) +
                      " guessing tables exceeds the cap of " + std::to_string(cap));
  }
  return nM * nM << nC;
}

RationalMatrix choice_matrix(const AbstractCryptoSystem& sys, std::size_t level,
                             std::size_t m0, std::size_t m1) {
  const LevelSorts& s = sys.sorts(level);
  const std::size_t nM = s.messages.size(), nS = s.state.size();
  const StageSorts st = cpa_stage(sys, level, 0);
  return RationalMatrix::generate(st.dom, st.cod, [&](std::size_t, std::size_t x) {
    return Rational(x == (m0 * nM + m1) * nS ? 1 : 0);
  });
}

RationalMatrix guess_matrix(const AbstractCryptoSystem& sys, std::size_t level,
                            std::uint64_t mask) {
  const LevelSorts& s = sys.sorts(level);
  const std::size_t nX = s.messages.size() * s.messages.size() * s.state.size();
  const StageSorts st = cpa_stage(sys, level, 1);
  return RationalMatrix::generate(st.dom, st.cod, [&](std::size_t r, std::size_t b) {
    return Rational(((mask >> (r / nX)) & 1U) == b ? 1 : 0);
  });
}

}  // namespace

CpaAdvantage max_ind_cpa_advantage(const AbstractCryptoSystem& sys, std::size_t level,
                                   std::size_t cap) {
  const LevelSorts& s = sys.sorts(level);
  const std::size_t nM = s.messages.size(), nC = s.ciphertexts.size();
  const std::vector<Rational> kappa = sys.key_marginal(level);
  const RationalMatrix& e = sys.enc_matrix(level);
  Rational key_total = 0;
  for (const auto& w : kappa) key_total += w;
  if (key_total != 1) {
    throw DomainError("keygen" + at_level(level) + " is not total (mass " +
                      to_string(key_total) + ")");
  }
  for (std::size_t k = 0; k < kappa.size(); ++k) {
    if (kappa[k] == 0) continue;
    for (std::size_t m = 0; m < nM; ++m) {
      Rational row = 0;
      for (std::size_t c = 0; c < nC; ++c) row += e.at(k * nM + m, c);
      if (row != 1) {
        throw DomainError("encryption" + at_level(level) + " is not total at (" +
                          s.keys.label(k) + ", " + s.messages.label(m) + ")");
      }
    }
  }

  CpaAdvantage out;
  out.adversaries = enumeration_size(s, cap);
  const Rational half(1, 2);
  for (std::size_t m0 = 0; m0 < nM; ++m0) {
    for (std::size_t m1 = 0; m1 < nM; ++m1) {
      const RationalMatrix a0 = choice_matrix(sys, level, m0, m1);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nC); ++mask) {
        const Rational g = cpa_guess(sys, level, a0, guess_matrix(sys, level, mask), false);
        const Rational adv = g > half ? g - half : half - g;
        if (adv > out.enumerated) out.enumerated = adv;
      }
    }
  }

  std::vector<std::vector<Rational>> p(nM, std::vector<Rational>(nC, Rational(0)));
  for (std::size_t m = 0; m < nM; ++m) {
    for (std::size_t k = 0; k < kappa.size(); ++k) {
      for (std::size_t c = 0; c < nC; ++c) p[m][c] += kappa[k] * e.at(k * nM + m, c);
    }
  }
  for (std::size_t m0 = 0; m0 < nM; ++m0) {
    for (std::size_t m1 = m0 + 1; m1 < nM; ++m1) {
      Rational tv = 0;
      for (std::size_t c = 0; c < nC; ++c) {
        tv += p[m0][c] > p[m1][c] ? p[m0][c] - p[m1][c] : p[m1][c] - p[m0][c];
      }
      tv /= 4;
      if (tv > out.tv_oracle) {
        out.tv_oracle = tv;
        out.m0 = m0;
        out.m1 = m1;
      }
    }
  }
  return out;
}

std::vector<CpaAdversary> deterministic_cpa_adversaries(const AbstractCryptoSystem& sys,
                                                        std::size_t level, std::size_t cap) {
  const LevelSorts& target = sys.sorts(level);
  enumeration_size(target, cap);
  std::vector<RationalMatrix> base0, base1;
  for (std::size_t l = 1; l <= sys.levels(); ++l) {
    base0.push_back(choice_matrix(sys, l, 0, 0));
    base1.push_back(guess_matrix(sys, l, 0));
  }
  std::vector<CpaAdversary> out;
  const std::size_t nM = target.messages.size(), nC = target.ciphertexts.size();
  for (std::size_t m0 = 0; m0 < nM; ++m0) {
    for (std::size_t m1 = 0; m1 < nM; ++m1) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nC); ++mask) {
        auto l0 = base0;
        auto l1 = base1;
        l0[level - 1] = choice_matrix(sys, level, m0, m1);
        l1[level - 1] = guess_matrix(sys, level, mask);
        std::string name = "l" + std::to_string(level) + ":" + target.messages.label(m0) +
                           "," + target.messages.label(m1) + ":" +
                           BitString{mask, static_cast<unsigned>(nC)}.to_string();
        out.push_back({std::move(name), CpaAdversary::Shape::kGame,
                       StochasticEnsemble(std::move(l0)), StochasticEnsemble(std::move(l1))});
      }
    }
  }
  return out;
}

Rational ind_cca2_guess_prob(const AbstractCryptoSystem& sys, const Cca2Adversary& adv,
                             std::size_t level, ChallengeReuse reuse) {
  const std::string who = " of '" + adv.name + "'";
  const RationalMatrix& a0 = stage_matrix(adv.a0, level, cca2_stage(sys, level, 0), "A0" + who);
  const RationalMatrix& a1 = stage_matrix(adv.a1, level, cca2_stage(sys, level, 1), "A1" + who);
  const RationalMatrix& a2 = stage_matrix(adv.a2, level, cca2_stage(sys, level, 2), "A2" + who);
  const RationalMatrix& a3 = stage_matrix(adv.a3, level, cca2_stage(sys, level, 3), "A3" + who);
  const LevelSorts& s = sys.sorts(level);
  const std::size_t nK = s.keys.size(), nM = s.messages.size(), nC = s.ciphertexts.size(),
                    nS = s.state.size();
  const RationalMatrix& g = sys.keygen_matrix(level);
  const RationalMatrix& e = sys.enc_matrix(level);
  const Rational half(1, 2);
  Rational total = 0;
  for (std::size_t kk = 0; kk < nK * nK; ++kk) {
    const Rational& wk = g.at(0, kk);
    if (wk == 0) continue;
    const std::size_t k = kk / nK, kbar = kk % nK;
    for (std::size_t c0 = 0; c0 < nC; ++c0) {
      for (std::size_t s0 = 0; s0 < nS; ++s0) {
        const Rational& w0 = a0.at(0, c0 * nS + s0);
        if (w0 == 0) continue;
        const auto m = sys.decrypt(level, kbar, c0);
        if (!m) continue;
        const std::size_t r1 = (c0 * nM + *m) * nS + s0;
        for (std::size_t x1 = 0; x1 < nM * nM * nS; ++x1) {
          const Rational& w1 = a1.at(r1, x1);
          if (w1 == 0) continue;
          const std::size_t m0 = x1 / (nM * nS), m1 = (x1 / nS) % nM, s1 = x1 % nS;
          for (std::size_t b = 0; b < 2; ++b) {
            for (std::size_t c = 0; c < nC; ++c) {
              const Rational& ec = e.at(k * nM + (b ? m1 : m0), c);
              if (ec == 0) continue;
              const std::size_t r2 = ((((c0 * nM + *m) * nM + m0) * nM + m1) * nC + c) * nS + s1;
              const Rational branch = wk * w0 * w1 * half * ec;
              for (std::size_t c1 = 0; c1 < nC; ++c1) {
                for (std::size_t s2 = 0; s2 < nS; ++s2) {
                  const Rational& w2 = a2.at(r2, c1 * nS + s2);
                  if (w2 == 0) continue;
                  if (c1 == c) {
                    if (reuse == ChallengeReuse::kCoin) total += branch * w2 * half;
                    continue;
                  }
                  const auto mt = sys.decrypt(level, kbar, c1);
                  if (!mt) continue;
                  const std::size_t r3 =
                      (((((((c0 * nM + *m) * nM + m0) * nM + m1) * nC + c) * nC + c1) * nM + *mt) *
                           nS + s2);
                  const Rational& w3 = a3.at(r3, b);
                  if (w3 != 0) total += branch * w2 * w3;
                }
              }
            }
          }
        }
      }
    }
  }
  return total;
}

}  // namespace catcrypt
