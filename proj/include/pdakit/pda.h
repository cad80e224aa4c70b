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

#ifndef PDAKIT_PDA_H_
#define PDAKIT_PDA_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdakit/bigint.h"
#include "pdakit/drbg.h"
#include "pdakit/netsim.h"
#include "pdakit/paillier.h"
#include "pdakit/ring.h"
#include "pdakit/types.h"

namespace pdakit::pda {

// Bus identity of the aggregator; users are 1..n.
inline constexpr PartyId kAggregatorId = 0;

struct Params {
  BigInt n_cap;  // N
  BigInt n_tilde;
  BigInt g;
  BigInt g_tilde;
  BigInt h;  // g^k, order divides N~
  std::vector<uint8_t> hash_seed;
  int n = 0;
  int theta_min = 3;
  int hardened_k = 0;  // relay rounds used by the ring exchange

  BigInt NTildeSq() const { return n_tilde * n_tilde; }
};

struct SetupOptions {
  bool strict_safe = false;
  int hardened_k = 0;
};

// theta_min is raised to hardened_k + 2 when that is larger.
Params Setup(size_t kappa, int n, int theta_min, Drbg& rng,
             const SetupOptions& options = {});

// H(t) in <h>.
BigInt HashSlot(const Params& params, int64_t t);

struct EncKey {
  PartyId id = 0;
  std::map<int, BigInt> evaluations;  // degree d -> q^{(d)}(id) mod N~

  friend bool operator==(const EncKey&, const EncKey&) = default;
};

// Secrets r_i are units of Z_N~. Returns Y_i for every party on the bus.
std::map<PartyId, BigInt> RingShare(
    const Params& params, netsim::Bus& bus,
    const std::map<PartyId, BigInt>& secrets,
    const std::map<PartyId, ring::RushingHook>& rushing = {});

std::map<PartyId, BigInt> RingShareHardened(
    const Params& params, netsim::Bus& bus,
    const std::map<PartyId, BigInt>& secrets, int k_collusion,
    const std::map<PartyId, ring::RushingHook>& rushing = {});

std::map<PartyId, BigInt> SampleRingSecrets(const Params& params,
                                            const PartySet& parties, Drbg& rng);

// All degrees 2..n-1 go out in a single round. `degrees` restricts the set.
std::map<PartyId, EncKey> Keygen(const Params& params, netsim::Bus& bus,
                                 const std::map<PartyId, BigInt>& ring_masks,
                                 Drbg& rng, const std::vector<int>& degrees = {});

struct Window {
  int64_t start = 0;
  int64_t len = 0;

  int64_t end() const { return start + len; }  // exclusive
  bool Overlaps(const Window& o) const {
    return start < o.end() && o.start < end();
  }
  friend bool operator==(const Window&, const Window&) = default;
};

// Append-only set of consumed slot ranges.
class SlotRegistry {
 public:
  const std::vector<Window>& consumed() const { return consumed_; }
  bool Overlaps(const Window& w) const;
  // Throws SlotReused on overlap; otherwise records the window.
  void Reserve(const Window& w);

  std::string ToJson() const;
  static SlotRegistry FromJson(const std::string& text);
  static SlotRegistry Load(const std::string& path);  // missing file -> empty
  void Save(const std::string& path) const;

 private:
  std::vector<Window> consumed_;
};

struct Query {
  std::vector<BigInt> coeffs;  // signed
  // user -> term index -> exponent; missing entries mean exponent 0.
  std::map<PartyId, std::map<int, uint64_t>> exponents;
  PartySet participants;
  Window window;
  std::optional<std::pair<PartyId, PartyId>> special;  // (user 1, user 2)

  size_t terms() const { return coeffs.size(); }
  uint64_t Exponent(PartyId i, int k) const;
  std::pair<PartyId, PartyId> SpecialUsers() const;
};

void ValidateQuery(const Query& q);

// c mapped into [0, N); negatives become N - |c|.
BigInt NormalizeCoefficient(const BigInt& c, const BigInt& n_cap);

// Mask exponent q^{(|P|-1)}(i) lambda_{i,P} mod N~, after threshold checks.
BigInt MaskExponent(const Params& params, const EncKey& key,
                    const PartySet& participants);

// x^e * slot_hash^mask_exponent mod N, with both mask factors precomputed.
BigInt EncodeMasked(const Params& params, const BigInt& x, uint64_t e,
                    const BigInt& slot_hash, const BigInt& mask_exponent);

BigInt EncodeOrdinary(const Params& params, const BigInt& x, uint64_t e,
                      const EncKey& key, const PartySet& participants,
                      int64_t t);

paillier::Ciphertext EncodeUser2(const Params& params, const BigInt& x,
                                 uint64_t e, const EncKey& key,
                                 const PartySet& participants, int64_t t,
                                 const paillier::PublicKey& pub, Drbg& rng);

// others[k] holds C(x_ik) for every i other than user 2 (user 1 included).
std::vector<paillier::Ciphertext> EncodeUser1(
    const Params& params, const std::vector<std::vector<BigInt>>& others,
    const std::vector<paillier::Ciphertext>& user2,
    const std::vector<BigInt>& coeffs, const paillier::PublicKey& pub,
    Drbg& rng);

BigInt Aggregate(const std::vector<paillier::Ciphertext>& blinded,
                 const paillier::KeyPair& agg, const BigInt& n_cap);

// sum_k c_k prod_i x_ik^{e_ik} mod N.
BigInt EvaluatePlain(const Query& q,
                     const std::map<PartyId, std::vector<BigInt>>& data,
                     const BigInt& n_cap);

struct DeployOptions {
  SetupOptions setup;
  std::vector<int> degrees;  // empty: all of 2..n-1
  size_t max_terms = 64;     // sizes the aggregator's Paillier modulus
  std::map<PartyId, ring::RushingHook> rushing;
};

struct Deployment {
  Params params;
  paillier::KeyPair agg;
  size_t max_terms = 0;
  std::map<PartyId, EncKey> keys;
  std::map<PartyId, BigInt> ring_masks;
  netsim::Transcript keygen_transcript;
  std::vector<netsim::ByteCount> keygen_bytes;
};

Deployment Deploy(size_t kappa, int n, int theta_min, Drbg& rng,
                  const DeployOptions& options = {});

// Keygen ceremony over an existing parameter set.
Deployment DeployWithParams(const Params& params, Drbg& rng,
                            const DeployOptions& options = {});

struct AggregationResult {
  BigInt value;
  netsim::Transcript transcript;
  std::vector<netsim::ByteCount> bytes;
};

// data[i][k] is user i's value for term k; ignored where the exponent is 0.
AggregationResult RunAggregation(
    const Deployment& deployment, const Query& query,
    const std::map<PartyId, std::vector<BigInt>>& data, SlotRegistry& registry,
    Drbg& rng, const std::vector<netsim::Observer>& taps = {});

class KeygenDriver : public netsim::Driver {
 public:
  KeygenDriver(const Params& params, Drbg rng, std::vector<int> degrees = {})
      : params_(params), rng_(std::move(rng)), degrees_(std::move(degrees)) {}
  std::string name() const override { return "pda.keygen"; }
  void Run(netsim::Bus& bus) override;
  const std::map<PartyId, EncKey>& keys() const { return keys_; }

 private:
  Params params_;
  Drbg rng_;
  std::vector<int> degrees_;
  std::map<PartyId, EncKey> keys_;
};

class AggregationDriver : public netsim::Driver {
 public:
  AggregationDriver(const Deployment& deployment, const Query& query,
                    const std::map<PartyId, std::vector<BigInt>>& data,
                    SlotRegistry& registry, Drbg rng)
      : deployment_(deployment),
        query_(query),
        data_(data),
        registry_(registry),
        rng_(std::move(rng)) {}
  std::string name() const override { return "pda.aggregate"; }
  void Run(netsim::Bus& bus) override;
  const BigInt& value() const { return value_; }

 private:
  const Deployment& deployment_;
  const Query& query_;
  const std::map<PartyId, std::vector<BigInt>>& data_;
  SlotRegistry& registry_;
  Drbg rng_;
  BigInt value_;
};

// Bus members for an aggregation: the aggregator plus P.
PartySet AggregationParties(const Query& query);

}  // namespace pdakit::pda

#endif  // PDAKIT_PDA_H_
