/*
 * Copyright 2026 The pdakit Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "pdakit/models.h"

#include <algorithm>
#include <string>

#include "pdakit/error.h"
#include "pdakit/numtheory.h"

namespace pdakit::models {
namespace {

constexpr std::string_view kQueryKind = "query";
constexpr std::string_view kMulKind = "mul_ct";
constexpr std::string_view kAddKind = "add_ct";
constexpr std::string_view kSigmaTag = "sigma";

std::string TermTag(size_t j) { return "term=" + std::to_string(j); }

bool Contains(const PartySet& set, PartyId id) {
  return std::find(set.begin(), set.end(), id) != set.end();
}

PartySet WithMember(PartySet set, PartyId id) {
  set.push_back(id);
  std::sort(set.begin(), set.end());
  return set;
}

// Public digest of the declared polynomial, posted in round 0.
BigInt PolynomialDigest(const AggPolynomial& poly) {
  std::string canon = "P:";
  for (PartyId id : poly.participants) canon += std::to_string(id) + ",";
  for (const auto& t : poly.terms) {
    canon += ";c=" + t.coeff.get_str(16) + ":";
    for (const auto& [id, d] : t.powers) {
      canon += std::to_string(id) + "^" + std::to_string(d) + ",";
    }
  }
  const std::span<const uint8_t> parts[] = {
      {reinterpret_cast<const uint8_t*>(canon.data()), canon.size()}};
  const auto digest = Shake256(parts, 32);
  return FromBytes(digest.data(), digest.size());
}

void RequireData(const AggPolynomial& poly, const Data& data, const BigInt& p) {
  for (PartyId id : poly.participants) {
    auto it = data.find(id);
    Require(it != data.end(), ErrorCode::kInvalidArgument,
            "no data for participant " + std::to_string(id));
    Require(sgn(it->second) >= 0 && it->second < p, ErrorCode::kInvalidArgument,
            "data of participant " + std::to_string(id) + " outside [0, p)");
  }
}

BigInt OwnerSigmaValue(const AggPolynomial& poly, const SigmaSplit& split,
                       PartyId owner, const Data& data, const BigInt& p) {
  BigInt s = 0;
  for (size_t j : split.sigma) {
    const Term& t = poly.terms[j];
    if (Owners(t).front() == owner) {
      s = nt::Mod(s + TermValue(t, owner, poly, data, p), p);
    }
  }
  return s;
}

std::vector<arith::Ciphertext> Collect(const std::vector<netsim::Message>& msgs,
                                       std::string_view kind,
                                       std::string_view tag, arith::Kind ct_kind,
                                       const PartySet& group) {
  std::vector<arith::Ciphertext> out;
  for (const auto& m : msgs) {
    if (m.kind == kind && m.tag == tag) {
      out.push_back(arith::Ciphertext{ct_kind, m.Value(), m.from, group});
    }
  }
  return out;
}

void SendSigma(const arith::Params& params,
               const std::map<PartyId, arith::EncKey>& keys,
               const AggPolynomial& poly, const SigmaSplit& split,
               const PartySet& sigma_group, const Data& data,
               const std::set<PartyId>& dropouts, netsim::Bus& bus) {
  for (PartyId owner : split.owners) {
    if (dropouts.count(owner)) continue;
    const BigInt s = OwnerSigmaValue(poly, split, owner, data, params.p);
    const auto ct = arith::EncryptAdd(params, s, keys.at(owner), sigma_group);
    bus.Broadcast(owner, kAddKind, ct.value, kSigmaTag);
  }
}

void RequireSigmaGroup(const arith::Params& params, const PartySet& group) {
  if (static_cast<int>(group.size()) < params.n_min) {
    Fail(ErrorCode::kGroupTooSmall,
         "single-value owners form a group of " + std::to_string(group.size()) +
             ", below n_min=" + std::to_string(params.n_min));
  }
}

}  // namespace

void Validate(const AggPolynomial& poly) {
  Require(!poly.participants.empty(), ErrorCode::kInvalidArgument,
          "polynomial has no participants");
  Require(std::is_sorted(poly.participants.begin(), poly.participants.end()),
          ErrorCode::kInvalidArgument, "participants must be sorted");
  Require(std::adjacent_find(poly.participants.begin(),
                             poly.participants.end()) == poly.participants.end(),
          ErrorCode::kDuplicateId, "participant listed twice");
  for (const auto& t : poly.terms) {
    Require(sgn(t.coeff) >= 0, ErrorCode::kInvalidArgument,
            "coefficients must be reduced");
    for (const auto& [id, d] : t.powers) {
      Require(Contains(poly.participants, id), ErrorCode::kInvalidArgument,
              "power on non-participant " + std::to_string(id));
    }
  }
}

BigInt Evaluate(const AggPolynomial& poly, const Data& data, const BigInt& p) {
  BigInt acc = 0;
  for (const auto& t : poly.terms) {
    BigInt v = nt::Mod(t.coeff, p);
    for (const auto& [id, d] : t.powers) {
      v = nt::ModMul(v, nt::ModPow(data.at(id), BigInt(static_cast<unsigned long>(d)), p), p);
    }
    acc = nt::Mod(acc + v, p);
  }
  return acc;
}

BigInt EvaluateInteger(const AggPolynomial& poly, const Data& data) {
  BigInt acc = 0;
  for (const auto& t : poly.terms) {
    BigInt v = t.coeff;
    for (const auto& [id, d] : t.powers) {
      BigInt power;
      mpz_pow_ui(power.get_mpz_t(), data.at(id).get_mpz_t(), d);
      v *= power;
    }
    acc += v;
  }
  return acc;
}

PartySet Owners(const Term& term) {
  PartySet out;
  for (const auto& [id, d] : term.powers) {
    if (d != 0) out.push_back(id);
  }
  return out;
}

PartyId CoefficientHolder(const Term& term, const PartySet& participants) {
  const PartySet owners = Owners(term);
  return owners.empty() ? participants.front() : owners.front();
}

BigInt TermValue(const Term& term, PartyId i, const AggPolynomial& poly,
                 const Data& data, const BigInt& p) {
  BigInt v = CoefficientHolder(term, poly.participants) == i
                 ? nt::Mod(term.coeff, p)
                 : BigInt(1);
  auto it = term.powers.find(i);
  if (it != term.powers.end() && it->second != 0) {
    v = nt::ModMul(v, nt::ModPow(data.at(i), BigInt(static_cast<unsigned long>(it->second)), p), p);
  }
  return v;
}

SigmaSplit DetectSingleValueTerms(const AggPolynomial& poly) {
  SigmaSplit split;
  std::set<PartyId> owners;
  for (size_t j = 0; j < poly.terms.size(); ++j) {
    const PartySet o = Owners(poly.terms[j]);
    if (o.size() == 1) {
      split.sigma.push_back(j);
      owners.insert(o.front());
    } else {
      split.products.push_back(j);
    }
  }
  split.owners.assign(owners.begin(), owners.end());
  return split;
}

AuthorityDeployment DeployAuthority(const arith::Params& params, Drbg& rng) {
  AuthorityDeployment d;
  d.params = params;
  d.virtual_id = params.n + 1;
  PartySet all;
  for (PartyId i = 1; i <= d.virtual_id; ++i) all.push_back(i);
  netsim::Bus bus(all);
  const auto masters = arith::Initialize(params, bus, rng);
  d.keys = arith::Keygen(params, masters, bus, rng);
  d.keygen_transcript = bus.transcript();
  return d;
}

AllParticipantsDeployment DeployAllParticipants(const arith::Params& params,
                                                Drbg& rng) {
  AllParticipantsDeployment d;
  d.params = params;
  PartySet all;
  for (PartyId i = 1; i <= params.n; ++i) all.push_back(i);
  netsim::Bus bus(all);
  const auto masters = arith::Initialize(params, bus, rng);
  d.keys = arith::Keygen(params, masters, bus, rng);
  d.keygen_transcript = bus.transcript();
  return d;
}

BigInt ExtraAdditiveRound(const AuthorityDeployment& deployment,
                          const AggPolynomial& poly, const Data& data,
                          netsim::Bus& bus) {
  const SigmaSplit split = DetectSingleValueTerms(poly);
  if (split.sigma.empty()) return 0;
  const auto& params = deployment.params;
  const PartySet group = WithMember(split.owners, deployment.virtual_id);
  RequireSigmaGroup(params, group);
  const int r = bus.BeginRound();
  SendSigma(params, deployment.keys, poly, split, group, data, {}, bus);
  auto cts = Collect(bus.Delivered(r), kAddKind, kSigmaTag,
                     arith::Kind::kAdditive, group);
  cts.push_back(arith::EncryptAdd(params, 0,
                                  deployment.keys.at(deployment.virtual_id), group));
  return arith::Decrypt(params, cts, group);
}

AuthorityOutcome AuthorityAggregate(const AuthorityDeployment& deployment,
                                    const AggPolynomial& poly, const Data& data,
                                    const AggregateOptions& options) {
  const auto& params = deployment.params;
  const PartyId authority = deployment.virtual_id;
  Validate(poly);
  const PartySet& members = poly.participants;
  Require(members.back() <= params.n && members.front() >= 1,
          ErrorCode::kInvalidArgument, "participant IDs must lie in [1, n]");
  if (static_cast<int>(members.size()) < params.n_min) {
    Fail(ErrorCode::kGroupTooSmall, "|P| is below n_min");
  }
  RequireData(poly, data, params.p);
  if (options.check_overflow) {
    const BigInt exact = EvaluateInteger(poly, data);
    if (sgn(exact) < 0 || exact >= params.p) {
      Fail(ErrorCode::kResultOverflow,
           "f(x_P) does not fit below p; the result would wrap");
    }
  }

  const SigmaSplit split = DetectSingleValueTerms(poly);
  const PartySet star = WithMember(members, authority);
  const PartySet sigma_star = WithMember(split.owners, authority);
  if (!split.sigma.empty()) RequireSigmaGroup(params, sigma_star);

  netsim::Bus bus(star);
  for (const auto& tap : options.taps) bus.AddObserver(tap);
  bus.Broadcast(authority, kQueryKind, PolynomialDigest(poly));

  const int r = bus.BeginRound();
  for (PartyId i : members) {
    if (options.dropouts.count(i)) continue;
    for (size_t j : split.products) {
      const BigInt x_hat = TermValue(poly.terms[j], i, poly, data, params.p);
      const auto ct = arith::EncryptMul(params, x_hat, deployment.keys.at(i), star);
      bus.Broadcast(i, kMulKind, ct.value, TermTag(j));
    }
  }
  if (!split.sigma.empty()) {
    SendSigma(params, deployment.keys, poly, split, sigma_star, data,
              options.dropouts, bus);
  }

  AuthorityOutcome out;
  const auto delivered = bus.Delivered(r);
  const auto& own_key = deployment.keys.at(authority);
  out.term_values.assign(poly.terms.size(), 0);
  BigInt total = 0;
  for (size_t j : split.products) {
    auto cts = Collect(delivered, kMulKind, TermTag(j),
                       arith::Kind::kMultiplicative, star);
    cts.push_back(arith::EncryptMul(params, 1, own_key, star));
    out.term_values[j] = arith::Decrypt(params, cts, star);
    total = nt::Mod(total + out.term_values[j], params.p);
  }
  if (!split.sigma.empty()) {
    auto cts = Collect(delivered, kAddKind, kSigmaTag, arith::Kind::kAdditive,
                       sigma_star);
    cts.push_back(arith::EncryptAdd(params, 0, own_key, sigma_star));
    out.sigma_sum = arith::Decrypt(params, cts, sigma_star);
    total = nt::Mod(total + out.sigma_sum, params.p);
  }
  out.value = total;
  out.transcript = bus.transcript();
  return out;
}

AllParticipantsOutcome AllParticipantsAggregate(
    const AllParticipantsDeployment& deployment, const AggPolynomial& poly,
    const Data& data, const AggregateOptions& options) {
  const auto& params = deployment.params;
  Validate(poly);
  const PartySet& members = poly.participants;
  Require(members.back() <= params.n && members.front() >= 1,
          ErrorCode::kInvalidArgument, "participant IDs must lie in [1, n]");
  if (static_cast<int>(members.size()) < params.n_min) {
    Fail(ErrorCode::kGroupTooSmall, "|P| is below n_min");
  }
  RequireData(poly, data, params.p);
  if (options.check_overflow) {
    const BigInt exact = EvaluateInteger(poly, data);
    if (sgn(exact) < 0 || exact >= params.p) {
      Fail(ErrorCode::kResultOverflow,
           "f(x_P) does not fit below p; the result would wrap");
    }
  }
  const SigmaSplit split = DetectSingleValueTerms(poly);
  if (!split.sigma.empty()) RequireSigmaGroup(params, split.owners);

  netsim::Bus bus(members);
  for (const auto& tap : options.taps) bus.AddObserver(tap);
  bus.Broadcast(members.front(), kQueryKind, PolynomialDigest(poly));

  const int r = bus.BeginRound();
  for (PartyId i : members) {
    if (options.dropouts.count(i)) continue;
    for (size_t j : split.products) {
      const BigInt x_hat = TermValue(poly.terms[j], i, poly, data, params.p);
      const auto ct = arith::EncryptMul(params, x_hat, deployment.keys.at(i), members);
      bus.Broadcast(i, kMulKind, ct.value, TermTag(j));
    }
  }
  if (!split.sigma.empty()) {
    SendSigma(params, deployment.keys, poly, split, split.owners, data,
              options.dropouts, bus);
  }

  AllParticipantsOutcome out;
  for (PartyId self : members) {
    if (options.dropouts.count(self)) continue;
    const auto inbox = bus.Inbox(self, r);
    BigInt total = 0;
    for (size_t j : split.products) {
      const auto cts = Collect(inbox, kMulKind, TermTag(j),
                               arith::Kind::kMultiplicative, members);
      if (cts.size() != members.size()) {
        Fail(ErrorCode::kIncompleteBroadcast,
             "term " + std::to_string(j) + ": " + std::to_string(cts.size()) +
                 " of " + std::to_string(members.size()) + " ciphertexts");
      }
      total = nt::Mod(total + arith::Decrypt(params, cts, members), params.p);
    }
    if (!split.sigma.empty()) {
      const auto cts = Collect(inbox, kAddKind, kSigmaTag,
                               arith::Kind::kAdditive, split.owners);
      if (cts.size() != split.owners.size()) {
        Fail(ErrorCode::kIncompleteBroadcast,
             "single-value round: " + std::to_string(cts.size()) + " of " +
                 std::to_string(split.owners.size()) + " ciphertexts");
      }
      total = nt::Mod(total + arith::Decrypt(params, cts, split.owners), params.p);
    }
    out.values[self] = total;
  }
  out.transcript = bus.transcript();
  return out;
}

}  // namespace pdakit::models
