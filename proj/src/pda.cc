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

#include "pdakit/pda.h"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <span>
#include <set>
#include <sstream>

#include "pdakit/error.h"
#include "pdakit/numtheory.h"

namespace pdakit::pda {
namespace {

using nlohmann::json;

std::string DegreeTag(int d) { return "d=" + std::to_string(d); }
std::string TermTag(size_t k) { return "term=" + std::to_string(k); }

int ParseTag(const std::string& tag, std::string_view prefix) {
  Require(tag.rfind(prefix, 0) == 0, ErrorCode::kParseError,
          "unexpected tag '" + tag + "'");
  return std::stoi(tag.substr(prefix.size()));
}

BigInt QueryDigest(const Query& q) {
  std::string canon = "P:";
  for (PartyId id : q.participants) canon += std::to_string(id) + ",";
  canon += ";W:" + std::to_string(q.window.start) + "+" +
           std::to_string(q.window.len) + ";C:";
  for (const auto& c : q.coeffs) canon += c.get_str(16) + ",";
  canon += ";E:";
  for (const auto& [i, row] : q.exponents) {
    for (const auto& [k, e] : row) {
      canon += std::to_string(i) + "." + std::to_string(k) + "=" +
               std::to_string(e) + ",";
    }
  }
  const std::span<const uint8_t> parts[] = {
      {reinterpret_cast<const uint8_t*>(canon.data()), canon.size()}};
  const auto digest = Shake256(parts, 32);
  return FromBytes(digest.data(), digest.size());
}

const BigInt& DataFor(const std::map<PartyId, std::vector<BigInt>>& data,
                      PartyId i, size_t k) {
  auto it = data.find(i);
  if (it == data.end() || it->second.size() <= k) {
    Fail(ErrorCode::kInvalidArgument, "user " + std::to_string(i) +
                                          " has no value for term " +
                                          std::to_string(k));
  }
  return it->second[k];
}

// x_ik, or 1 when the user's variable is absent from term k.
BigInt InputFor(const Query& q,
                const std::map<PartyId, std::vector<BigInt>>& data, PartyId i,
                size_t k) {
  if (q.Exponent(i, static_cast<int>(k)) == 0) return 1;
  return DataFor(data, i, k);
}

}  // namespace

Params Setup(size_t kappa, int n, int theta_min, Drbg& rng,
             const SetupOptions& options) {
  Require(theta_min >= 3 && n >= theta_min, ErrorCode::kInvalidArgument,
          "need n >= theta_min >= 3");
  Require(options.hardened_k >= 0, ErrorCode::kInvalidArgument,
          "hardened_k must be non-negative");
  if (options.hardened_k > 0 && n <= options.hardened_k + 2) {
    Fail(ErrorCode::kRingTooSmall,
         "n must exceed hardened_k + 2 for the relay ring");
  }
  Drbg local = rng.Fork("pda.setup");
  nt::CorrelatedModuli cm =
      nt::GenCorrelatedModuli(kappa, options.strict_safe, local);
  const auto& f = cm.factors;

  Params params;
  params.n_cap = cm.n;
  params.n_tilde = cm.n_tilde;
  params.n = n;
  params.hardened_k = options.hardened_k;
  params.theta_min = std::max(theta_min, options.hardened_k + 2);
  Require(params.theta_min <= n, ErrorCode::kInvalidArgument,
          "theta_min exceeds n after hardening");

  // Pick g so that h = g^k has order exactly N~.
  while (true) {
    params.g = local.Unit(cm.n);
    params.h = nt::ModPow(params.g, cm.k_cofactor, cm.n);
    if (nt::ModPow(params.h, cm.n_tilde / f.p_tilde, cm.n) != 1 &&
        nt::ModPow(params.h, cm.n_tilde / f.q_tilde, cm.n) != 1) {
      break;
    }
  }
  Require(nt::ModPow(params.h, cm.n_tilde, cm.n) == 1, ErrorCode::kInvalidArgument,
          "h^N~ != 1; moduli are not correlated");

  // g~ with order divisible by p'q' in Z_N~^*.
  const BigInt p_prime = (f.p_tilde - 1) / 2;
  const BigInt q_prime = (f.q_tilde - 1) / 2;
  const BigInt carmichael = nt::Lcm(f.p_tilde - 1, f.q_tilde - 1);
  while (true) {
    params.g_tilde = local.Unit(cm.n_tilde);
    if (nt::ModPow(params.g_tilde, carmichael / p_prime, cm.n_tilde) != 1 &&
        nt::ModPow(params.g_tilde, carmichael / q_prime, cm.n_tilde) != 1) {
      break;
    }
  }

  params.hash_seed.resize(32);
  local.Fill(params.hash_seed);
  cm.DestroyFactors();
  return params;
}

BigInt HashSlot(const Params& params, int64_t t) {
  return nt::HashToSubgroup(t, params.h, params.n_cap, params.n_tilde,
                            params.hash_seed);
}

std::map<PartyId, BigInt> SampleRingSecrets(const Params& params,
                                            const PartySet& parties, Drbg& rng) {
  std::map<PartyId, BigInt> out;
  for (PartyId id : parties) {
    Drbg party = rng.Fork("pda.ring", id);
    out[id] = party.Unit(params.n_tilde);
  }
  return out;
}

std::map<PartyId, BigInt> RingShare(
    const Params& params, netsim::Bus& bus,
    const std::map<PartyId, BigInt>& secrets,
    const std::map<PartyId, ring::RushingHook>& rushing) {
  return ring::RingExchange(bus, params.g_tilde, params.n_tilde, secrets, 0,
                            rushing);
}

std::map<PartyId, BigInt> RingShareHardened(
    const Params& params, netsim::Bus& bus,
    const std::map<PartyId, BigInt>& secrets, int k_collusion,
    const std::map<PartyId, ring::RushingHook>& rushing) {
  return ring::RingExchange(bus, params.g_tilde, params.n_tilde, secrets,
                            k_collusion, rushing);
}

std::map<PartyId, EncKey> Keygen(const Params& params, netsim::Bus& bus,
                                 const std::map<PartyId, BigInt>& ring_masks,
                                 Drbg& rng, const std::vector<int>& degrees) {
  const PartySet& parties = bus.parties();
  const int n = static_cast<int>(parties.size());
  std::vector<int> ds = degrees;
  if (ds.empty()) {
    for (int d = 2; d <= n - 1; ++d) ds.push_back(d);
  }
  for (int d : ds) {
    Require(d >= 1 && d <= n - 1, ErrorCode::kInvalidArgument,
            "degree " + std::to_string(d) + " outside [1, n-1]");
  }
  for (PartyId id : parties) {
    Require(ring_masks.count(id) > 0, ErrorCode::kPartyMissing,
            "no ring mask for party " + std::to_string(id));
  }
  const BigInt& nt_mod = params.n_tilde;
  const BigInt nt_sq = params.NTildeSq();

  std::map<PartyId, std::map<int, BigInt>> own;
  const int r = bus.BeginRound();
  for (PartyId j : parties) {
    Drbg party = rng.Fork("pda.keygen", j);
    const BigInt y_pow = nt::ModPow(ring_masks.at(j), nt_mod, nt_sq);
    for (int d : ds) {
      std::vector<BigInt> coeffs(d);
      for (auto& c : coeffs) c = party.Unit(nt_mod);
      for (PartyId i : parties) {
        const BigInt eval = nt::EvalZeroConstPoly(coeffs, i, nt_mod);
        const BigInt q = nt::ModMul(y_pow, 1 + eval * nt_mod, nt_sq);
        if (i == j) {
          own[j][d] = q;
        } else {
          bus.Send(j, i, "pda_keygen", q, DegreeTag(d));
        }
      }
    }
  }

  std::map<PartyId, EncKey> keys;
  for (PartyId i : parties) {
    std::map<int, BigInt> product = own[i];
    std::map<int, int> count;
    for (const auto& msg : bus.Inbox(i, r)) {
      if (msg.kind != "pda_keygen" || msg.to != i) continue;
      const int d = ParseTag(msg.tag, "d=");
      product[d] = nt::ModMul(product[d], msg.Value(), nt_sq);
      ++count[d];
    }
    EncKey key{i, {}};
    for (int d : ds) {
      if (count[d] != n - 1) {
        Fail(ErrorCode::kPartyMissing, "party " + std::to_string(i) +
                                           " missing key shares for " +
                                           DegreeTag(d));
      }
      try {
        key.evaluations[d] = nt::DlogOnePlusM(product[d], nt_mod);
      } catch (const Error&) {
        Fail(ErrorCode::kExtractionFailed,
             "party " + std::to_string(i) + ", " + DegreeTag(d) +
                 ": share product is not a power of (1+N~)");
      }
    }
    keys[i] = std::move(key);
  }
  return keys;
}

bool SlotRegistry::Overlaps(const Window& w) const {
  return std::any_of(consumed_.begin(), consumed_.end(),
                     [&](const Window& c) { return c.Overlaps(w); });
}

void SlotRegistry::Reserve(const Window& w) {
  Require(w.len >= 1, ErrorCode::kInvalidArgument, "empty time window");
  if (Overlaps(w)) {
    Fail(ErrorCode::kSlotReused,
         "window [" + std::to_string(w.start) + ", " + std::to_string(w.end()) +
             ") overlaps a consumed window");
  }
  consumed_.push_back(w);
}

std::string SlotRegistry::ToJson() const {
  json arr = json::array();
  for (const auto& w : consumed_) arr.push_back({{"start", w.start}, {"len", w.len}});
  return json{{"consumed", arr}}.dump(2);
}

SlotRegistry SlotRegistry::FromJson(const std::string& text) {
  SlotRegistry reg;
  try {
    const json j = json::parse(text);
    for (const auto& w : j.at("consumed")) {
      reg.Reserve(Window{w.at("start").get<int64_t>(), w.at("len").get<int64_t>()});
    }
  } catch (const json::exception& e) {
    Fail(ErrorCode::kParseError, std::string("registry: ") + e.what());
  }
  return reg;
}

SlotRegistry SlotRegistry::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return SlotRegistry{};
  std::stringstream ss;
  ss << in.rdbuf();
  return FromJson(ss.str());
}

void SlotRegistry::Save(const std::string& path) const {
  std::ofstream out(path, std::ios::trunc);
  Require(static_cast<bool>(out), ErrorCode::kIoError, "cannot write " + path);
  out << ToJson() << "\n";
}

uint64_t Query::Exponent(PartyId i, int k) const {
  auto it = exponents.find(i);
  if (it == exponents.end()) return 0;
  auto jt = it->second.find(k);
  return jt == it->second.end() ? 0 : jt->second;
}

std::pair<PartyId, PartyId> Query::SpecialUsers() const {
  if (special) return *special;
  Require(participants.size() >= 2, ErrorCode::kInvalidArgument,
          "query needs at least two participants");
  return {participants[0], participants[1]};
}

void ValidateQuery(const Query& q) {
  Require(q.terms() >= 1, ErrorCode::kInvalidArgument, "query has no terms");
  Require(q.participants.size() >= 2, ErrorCode::kInvalidArgument,
          "query needs at least two participants");
  Require(std::is_sorted(q.participants.begin(), q.participants.end()),
          ErrorCode::kInvalidArgument, "participants must be sorted");
  Require(std::adjacent_find(q.participants.begin(), q.participants.end()) ==
              q.participants.end(),
          ErrorCode::kDuplicateId, "participant listed twice");
  Require(q.window.len == static_cast<int64_t>(q.terms()),
          ErrorCode::kInvalidArgument,
          "window length must equal the number of terms");
  auto member = [&](PartyId id) {
    return std::binary_search(q.participants.begin(), q.participants.end(), id);
  };
  for (const auto& [i, row] : q.exponents) {
    Require(member(i), ErrorCode::kInvalidArgument,
            "exponent for non-participant " + std::to_string(i));
    for (const auto& [k, e] : row) {
      Require(k >= 0 && k < static_cast<int>(q.terms()),
              ErrorCode::kInvalidArgument, "exponent for unknown term");
    }
  }
  const auto [u1, u2] = q.SpecialUsers();
  Require(u1 != u2 && member(u1) && member(u2), ErrorCode::kInvalidArgument,
          "special users must be two distinct participants");
}

BigInt NormalizeCoefficient(const BigInt& c, const BigInt& n_cap) {
  return nt::Mod(c, n_cap);
}

namespace {

void CheckGroup(const Params& params, const PartySet& participants) {
  const int size = static_cast<int>(participants.size());
  if (size < params.theta_min) {
    Fail(ErrorCode::kGroupBelowThreshold,
         "|P|=" + std::to_string(size) + " is below theta_min=" +
             std::to_string(params.theta_min));
  }
  if (size - 1 <= params.hardened_k) {
    Fail(ErrorCode::kGroupBelowThreshold,
         "degree " + std::to_string(size - 1) +
             " keys are unusable with hardened_k=" +
             std::to_string(params.hardened_k));
  }
}

BigInt MaskExponentWith(const Params& params, const EncKey& key,
                        const nt::LagrangeWeights& w) {
  const int d = static_cast<int>(w.participants().size()) - 1;
  const auto& members = w.participants();
  Require(std::find(members.begin(), members.end(), key.id) != members.end(),
          ErrorCode::kInvalidArgument,
          "user " + std::to_string(key.id) + " is not a participant");
  auto it = key.evaluations.find(d);
  if (it == key.evaluations.end()) {
    Fail(ErrorCode::kKeyMissing, "user " + std::to_string(key.id) +
                                     " has no key of degree " + std::to_string(d));
  }
  return nt::Mod(it->second * w.weight(key.id), params.n_tilde);
}

}  // namespace

BigInt MaskExponent(const Params& params, const EncKey& key,
                    const PartySet& participants) {
  CheckGroup(params, participants);
  return MaskExponentWith(params, key, nt::ComputeLagrangeWeights(participants));
}

BigInt EncodeMasked(const Params& params, const BigInt& x, uint64_t e,
                    const BigInt& slot_hash, const BigInt& mask_exponent) {
  Require(sgn(x) >= 0 && x < params.n_cap, ErrorCode::kInvalidArgument,
          "input must lie in [0, N)");
  const BigInt xe =
      nt::ModPow(x, BigInt(static_cast<unsigned long>(e)), params.n_cap);
  return nt::ModMul(xe, nt::ModPow(slot_hash, mask_exponent, params.n_cap),
                    params.n_cap);
}

BigInt EncodeOrdinary(const Params& params, const BigInt& x, uint64_t e,
                      const EncKey& key, const PartySet& participants,
                      int64_t t) {
  return EncodeMasked(params, x, e, HashSlot(params, t),
                      MaskExponent(params, key, participants));
}

paillier::Ciphertext EncodeUser2(const Params& params, const BigInt& x,
                                 uint64_t e, const EncKey& key,
                                 const PartySet& participants, int64_t t,
                                 const paillier::PublicKey& pub, Drbg& rng) {
  const BigInt c = EncodeOrdinary(params, x, e, key, participants, t);
  return paillier::Encrypt(c, pub, rng);
}

std::vector<paillier::Ciphertext> EncodeUser1(
    const Params& params, const std::vector<std::vector<BigInt>>& others,
    const std::vector<paillier::Ciphertext>& user2,
    const std::vector<BigInt>& coeffs, const paillier::PublicKey& pub,
    Drbg& rng) {
  const size_t m = coeffs.size();
  if (others.size() != m || user2.size() != m) {
    Fail(ErrorCode::kMissingEncoding,
         "expected encodings for " + std::to_string(m) + " terms");
  }
  std::vector<paillier::Ciphertext> out;
  out.reserve(m);
  BigInt k_product = 1;
  for (size_t k = 0; k < m; ++k) {
    if (others[k].empty()) {
      Fail(ErrorCode::kMissingEncoding,
           "no ordinary encodings for term " + std::to_string(k));
    }
    paillier::ValidateCiphertext(user2[k], pub);
    BigInt prod = 1;
    for (const auto& c : others[k]) prod = nt::ModMul(prod, c, params.n_cap);
    const paillier::Ciphertext v = paillier::Scale(user2[k], prod, pub);
    const BigInt c = NormalizeCoefficient(coeffs[k], params.n_cap);
    // K_k random for k < m-1; the last one closes the product to 1.
    BigInt blind;
    if (k + 1 < m) {
      blind = rng.Unit(pub.n_a_sq);
      k_product = nt::ModMul(k_product, blind, pub.n_a_sq);
    } else {
      blind = nt::ModInv(k_product, pub.n_a_sq);
    }
    out.push_back(paillier::Blind(paillier::Scale(v, c, pub), blind, pub));
  }
  return out;
}

BigInt Aggregate(const std::vector<paillier::Ciphertext>& blinded,
                 const paillier::KeyPair& agg, const BigInt& n_cap) {
  Require(!blinded.empty(), ErrorCode::kMissingEncoding, "no term ciphertexts");
  paillier::Ciphertext acc{1};
  for (const auto& c : blinded) {
    paillier::ValidateCiphertext(c, agg.pub);
    acc = paillier::Add(acc, c, agg.pub);
  }
  return nt::Mod(paillier::Decrypt(acc, agg), n_cap);
}

BigInt EvaluatePlain(const Query& q,
                     const std::map<PartyId, std::vector<BigInt>>& data,
                     const BigInt& n_cap) {
  BigInt acc = 0;
  for (size_t k = 0; k < q.terms(); ++k) {
    BigInt term = NormalizeCoefficient(q.coeffs[k], n_cap);
    for (PartyId i : q.participants) {
      const uint64_t e = q.Exponent(i, static_cast<int>(k));
      if (e == 0) continue;
      term = nt::ModMul(term,
                        nt::ModPow(DataFor(data, i, k),
                                   BigInt(static_cast<unsigned long>(e)), n_cap),
                        n_cap);
    }
    acc = nt::Mod(acc + term, n_cap);
  }
  return acc;
}

Deployment DeployWithParams(const Params& params, Drbg& rng,
                            const DeployOptions& options) {
  Deployment dep;
  dep.params = params;
  dep.max_terms = options.max_terms;
  Drbg agg_rng = rng.Fork("pda.aggregator");
  const size_t bits = std::max(
      paillier::kMinModulusBits,
      paillier::RequiredModulusBits(params.n_cap, options.max_terms));
  dep.agg = paillier::GenerateKeyPair(bits, agg_rng);

  PartySet users;
  for (PartyId i = 1; i <= params.n; ++i) users.push_back(i);
  netsim::Bus bus(users);
  const auto secrets = SampleRingSecrets(params, users, rng);
  dep.ring_masks = params.hardened_k > 0
                       ? RingShareHardened(params, bus, secrets,
                                           params.hardened_k, options.rushing)
                       : RingShare(params, bus, secrets, options.rushing);
  dep.keys = Keygen(params, bus, dep.ring_masks, rng, options.degrees);
  dep.keygen_transcript = bus.transcript();
  dep.keygen_bytes = bus.ByteReport();
  return dep;
}

Deployment Deploy(size_t kappa, int n, int theta_min, Drbg& rng,
                  const DeployOptions& options) {
  const Params params = Setup(kappa, n, theta_min, rng, options.setup);
  return DeployWithParams(params, rng, options);
}

PartySet AggregationParties(const Query& query) {
  PartySet out = query.participants;
  out.push_back(kAggregatorId);
  std::sort(out.begin(), out.end());
  return out;
}

void KeygenDriver::Run(netsim::Bus& bus) {
  const auto secrets = SampleRingSecrets(params_, bus.parties(), rng_);
  const auto masks = params_.hardened_k > 0
                         ? RingShareHardened(params_, bus, secrets, params_.hardened_k)
                         : RingShare(params_, bus, secrets);
  keys_ = Keygen(params_, bus, masks, rng_, degrees_);
}

void AggregationDriver::Run(netsim::Bus& bus) {
  const Params& params = deployment_.params;
  const Query& q = query_;
  ValidateQuery(q);
  const size_t m = q.terms();
  Require(m <= deployment_.max_terms, ErrorCode::kInvalidArgument,
          "query has more terms than the aggregator key supports");
  for (PartyId i : q.participants) {
    Require(deployment_.keys.count(i) > 0, ErrorCode::kKeyMissing,
            "no encoding key for user " + std::to_string(i));
    for (size_t k = 0; k < m; ++k) {
      if (q.Exponent(i, static_cast<int>(k)) != 0) DataFor(data_, i, k);
    }
  }
  const auto [u1, u2] = q.SpecialUsers();
  CheckGroup(params, q.participants);
  const nt::LagrangeWeights weights = nt::ComputeLagrangeWeights(q.participants);
  std::map<PartyId, BigInt> mask_exp;
  for (PartyId i : q.participants) {
    mask_exp[i] = MaskExponentWith(params, deployment_.keys.at(i), weights);
  }

  // Every user checks the window before anything is sent.
  registry_.Reserve(q.window);

  bus.Broadcast(kAggregatorId, "query", QueryDigest(q));

  std::vector<BigInt> slot_hash(m);
  for (size_t k = 0; k < m; ++k) {
    slot_hash[k] = HashSlot(params, q.window.start + static_cast<int64_t>(k));
  }

  const int r1 = bus.BeginRound();
  for (PartyId i : q.participants) {
    if (i == u1) continue;
    Drbg user = rng_.Fork("pda.encode", i);
    for (size_t k = 0; k < m; ++k) {
      const BigInt c =
          EncodeMasked(params, InputFor(q, data_, i, k),
                       q.Exponent(i, static_cast<int>(k)), slot_hash[k],
                       mask_exp.at(i));
      if (i == u2) {
        const auto ct = paillier::Encrypt(c, deployment_.agg.pub, user);
        bus.Broadcast(i, "encoding_paillier", ct.value, TermTag(k));
      } else {
        bus.Broadcast(i, "encoding", c, TermTag(k));
      }
    }
  }

  // User 1 combines everything it received with its own encodings.
  const int r2 = bus.BeginRound();
  std::vector<std::vector<BigInt>> others(m);
  std::vector<std::optional<paillier::Ciphertext>> from_u2(m);
  for (const auto& msg : bus.Inbox(u1, r1)) {
    const size_t k = static_cast<size_t>(ParseTag(msg.tag, "term="));
    Require(k < m, ErrorCode::kParseError, "term index out of range");
    if (msg.kind == "encoding") {
      others[k].push_back(msg.Value());
    } else if (msg.kind == "encoding_paillier" && msg.from == u2) {
      from_u2[k] = paillier::Ciphertext{msg.Value()};
    }
  }
  const size_t ordinary = q.participants.size() - 2;
  std::vector<paillier::Ciphertext> user2(m);
  for (size_t k = 0; k < m; ++k) {
    if (others[k].size() != ordinary || !from_u2[k]) {
      Fail(ErrorCode::kMissingEncoding,
           "term " + std::to_string(k) + " is missing encodings");
    }
    user2[k] = *from_u2[k];
    others[k].push_back(EncodeMasked(params, InputFor(q, data_, u1, k),
                                     q.Exponent(u1, static_cast<int>(k)),
                                     slot_hash[k], mask_exp.at(u1)));
  }
  Drbg user1 = rng_.Fork("pda.encode", u1);
  const auto blinded =
      EncodeUser1(params, others, user2, q.coeffs, deployment_.agg.pub, user1);
  for (size_t k = 0; k < m; ++k) {
    bus.Broadcast(u1, "blinded", blinded[k].value, TermTag(k));
  }

  std::vector<paillier::Ciphertext> received;
  for (const auto& msg : bus.Inbox(kAggregatorId, r2)) {
    if (msg.kind == "blinded") received.push_back({msg.Value()});
  }
  if (received.size() != m) {
    Fail(ErrorCode::kMissingEncoding, "aggregator received " +
                                          std::to_string(received.size()) +
                                          " of " + std::to_string(m) + " terms");
  }
  value_ = Aggregate(received, deployment_.agg, params.n_cap);
}

AggregationResult RunAggregation(
    const Deployment& deployment, const Query& query,
    const std::map<PartyId, std::vector<BigInt>>& data, SlotRegistry& registry,
    Drbg& rng, const std::vector<netsim::Observer>& taps) {
  AggregationDriver driver(deployment, query, data, registry,
                           rng.Fork("pda.aggregation"));
  netsim::CeremonyRecord rec =
      netsim::RunCeremony(driver, AggregationParties(query), taps);
  return AggregationResult{driver.value(), std::move(rec.transcript),
                           std::move(rec.bytes)};
}

}  // namespace pdakit::pda
