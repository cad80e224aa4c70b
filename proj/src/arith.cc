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

#include "pdakit/arith.h"

#include <algorithm>
#include <set>
#include <string>

#include "pdakit/error.h"
#include "pdakit/numtheory.h"
#include "pdakit/ring.h"

namespace pdakit::arith {
namespace {

std::string SizeTag(int k) { return "k=" + std::to_string(k); }

int ParseSizeTag(const std::string& tag) {
  Require(tag.rfind("k=", 0) == 0, ErrorCode::kParseError,
          "unexpected keygen tag '" + tag + "'");
  return std::stoi(tag.substr(2));
}

// Returns the member's mask exponent R_i^{(|P|)} * lambda_{i,P} as an integer.
BigInt MaskExponent(const Params& params, const EncKey& key,
                    const PartySet& group) {
  const int size = static_cast<int>(group.size());
  if (size < params.n_min) {
    Fail(ErrorCode::kGroupTooSmall,
         "group of " + std::to_string(size) + " is below n_min=" +
             std::to_string(params.n_min));
  }
  Require(std::find(group.begin(), group.end(), key.id) != group.end(),
          ErrorCode::kInvalidArgument,
          "party " + std::to_string(key.id) + " is not in the group");
  auto it = key.shares.find(size);
  if (it == key.shares.end()) {
    Fail(ErrorCode::kKeyMissing,
         "party " + std::to_string(key.id) + " has no key for group size " +
             std::to_string(size));
  }
  const nt::LagrangeWeights w = nt::ComputeLagrangeWeights(group);
  return it->second * w.weight(key.id);
}

void CheckPlaintext(const Params& params, const BigInt& x) {
  Require(sgn(x) >= 0 && x < params.p, ErrorCode::kInvalidArgument,
          "plaintext must lie in [0, p)");
}

}  // namespace

Params MakeParams(const BigInt& p, const BigInt& g, const BigInt& g1, int n,
                  int n_min) {
  Require(n_min >= 3 && n >= n_min, ErrorCode::kInvalidArgument,
          "need n >= n_min >= 3");
  Require(p > 3, ErrorCode::kInvalidArgument, "p too small");
  Require(g >= 2 && g < p, ErrorCode::kInvalidArgument, "g must lie in [2, p)");
  Params params{p, g, g1, n, n_min};
  Require(nt::Gcd(g1, params.MasterModulus()) == 1, ErrorCode::kInvalidArgument,
          "g1 must be a unit modulo p^2(p-1)^2");
  return params;
}

Params Setup(size_t kappa, int n, int n_min, Drbg& rng) {
  Require(n_min >= 3 && n >= n_min, ErrorCode::kInvalidArgument,
          "need n >= n_min >= 3");
  Drbg local = rng.Fork("arith.setup");
  const BigInt p = nt::GenSafePrime(kappa, local).p;
  const BigInt g = local.Range(2, p);
  const BigInt m = p * (p - 1);
  const BigInt g1 = local.Unit(m * m);
  return MakeParams(p, g, g1, n, n_min);
}

std::map<PartyId, MasterKey> Initialize(const Params& params, netsim::Bus& bus,
                                        Drbg& rng) {
  const BigInt mm = params.MasterModulus();
  std::map<PartyId, BigInt> secrets;
  for (PartyId id : bus.parties()) {
    Drbg party = rng.Fork("arith.init", id);
    secrets[id] = party.Range(1, mm);
  }
  std::map<PartyId, MasterKey> out;
  for (const auto& [id, y] : ring::RingExchange(bus, params.g1, mm, secrets)) {
    out[id] = MasterKey{id, y};
  }
  return out;
}

std::map<PartyId, EncKey> Keygen(const Params& params,
                                 const std::map<PartyId, MasterKey>& masters,
                                 netsim::Bus& bus, Drbg& rng) {
  const PartySet& parties = bus.parties();
  const int total = static_cast<int>(parties.size());
  Require(total >= params.n_min, ErrorCode::kGroupTooSmall,
          "fewer parties than n_min");
  for (PartyId id : parties) {
    Require(masters.count(id) > 0, ErrorCode::kPartyMissing,
            "no master key for party " + std::to_string(id));
  }
  const BigInt m = params.KeyModulus();
  const BigInt mm = params.MasterModulus();

  // own[j][k] is c_{j,j}^{(k)}, kept locally rather than sent.
  std::map<PartyId, std::map<int, BigInt>> own;
  const int r = bus.BeginRound();
  for (PartyId j : parties) {
    Drbg party = rng.Fork("arith.keygen", j);
    const BigInt& kj = masters.at(j).k;
    for (int k = params.n_min; k <= total; ++k) {
      std::vector<BigInt> coeffs(k - 1);
      for (auto& c : coeffs) c = party.Below(m);
      for (PartyId i : parties) {
        const BigInt eval = nt::EvalZeroConstPoly(coeffs, i, m);
        const BigInt c = nt::ModMul(kj, 1 + eval * m, mm);
        if (i == j) {
          own[j][k] = c;
        } else {
          bus.Send(j, i, "arith_keygen", c, SizeTag(k));
        }
      }
    }
  }

  std::map<PartyId, EncKey> keys;
  for (PartyId i : parties) {
    std::map<int, BigInt> product = own[i];
    std::map<int, std::set<PartyId>> senders;
    for (const auto& msg : bus.Inbox(i, r)) {
      if (msg.kind != "arith_keygen" || msg.to != i) continue;
      const int k = ParseSizeTag(msg.tag);
      product[k] = nt::ModMul(product[k], msg.Value(), mm);
      senders[k].insert(msg.from);
    }
    EncKey key{i, {}};
    for (int k = params.n_min; k <= total; ++k) {
      if (static_cast<int>(senders[k].size()) != total - 1) {
        Fail(ErrorCode::kPartyMissing,
             "party " + std::to_string(i) + " missing keygen shares for " +
                 SizeTag(k));
      }
      try {
        key.shares[k] = nt::DlogOnePlusM(product[k], m);
      } catch (const Error&) {
        Fail(ErrorCode::kExtractionFailed,
             "party " + std::to_string(i) + ", " + SizeTag(k) +
                 ": share product is not a power of (1+M)");
      }
    }
    keys[i] = std::move(key);
  }
  return keys;
}

BigInt AdditiveMask(const Params& params, const EncKey& key,
                    const PartySet& group) {
  return nt::Mod(MaskExponent(params, key, group), params.p);
}

BigInt MultiplicativeMask(const Params& params, const EncKey& key,
                          const PartySet& group) {
  const BigInt e = nt::Mod(MaskExponent(params, key, group), params.p - 1);
  return nt::ModPow(params.g, e, params.p);
}

Ciphertext EncryptAdd(const Params& params, const BigInt& x, const EncKey& key,
                      const PartySet& group) {
  CheckPlaintext(params, x);
  const BigInt v = nt::Mod(x + AdditiveMask(params, key, group), params.p);
  return Ciphertext{Kind::kAdditive, v, key.id, group};
}

Ciphertext EncryptMul(const Params& params, const BigInt& x, const EncKey& key,
                      const PartySet& group) {
  CheckPlaintext(params, x);
  const BigInt v = nt::ModMul(x, MultiplicativeMask(params, key, group), params.p);
  return Ciphertext{Kind::kMultiplicative, v, key.id, group};
}

BigInt Decrypt(const Params& params, std::span<const Ciphertext> cts,
               const PartySet& group) {
  Require(!cts.empty(), ErrorCode::kIncompleteGroup, "no ciphertexts");
  const Kind kind = cts.front().kind;
  std::set<PartyId> seen;
  for (const auto& c : cts) {
    if (c.kind != kind) {
      Fail(ErrorCode::kMixedKinds, "additive and multiplicative ciphertexts mixed");
    }
    Require(std::find(group.begin(), group.end(), c.participant) != group.end(),
            ErrorCode::kInvalidArgument,
            "ciphertext from non-member " + std::to_string(c.participant));
    Require(seen.insert(c.participant).second, ErrorCode::kDuplicateId,
            "two ciphertexts from party " + std::to_string(c.participant));
    Require(sgn(c.value) >= 0 && c.value < params.p,
            ErrorCode::kInvalidCiphertext, "ciphertext outside Z_p");
  }
  if (seen.size() != group.size()) {
    Fail(ErrorCode::kIncompleteGroup,
         std::to_string(seen.size()) + " of " + std::to_string(group.size()) +
             " ciphertexts present");
  }
  BigInt acc = kind == Kind::kAdditive ? 0 : 1;
  for (const auto& c : cts) {
    acc = kind == Kind::kAdditive ? nt::Mod(acc + c.value, params.p)
                                  : nt::ModMul(acc, c.value, params.p);
  }
  return acc;
}

}  // namespace pdakit::arith
