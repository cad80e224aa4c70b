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

#ifndef PDAKIT_ARITH_H_
#define PDAKIT_ARITH_H_

#include <map>
#include <span>
#include <vector>

#include "pdakit/bigint.h"
#include "pdakit/drbg.h"
#include "pdakit/netsim.h"
#include "pdakit/types.h"

namespace pdakit::arith {

struct Params {
  BigInt p;   // safe prime
  BigInt g;   // base for multiplicative masks, in [2, p)
  BigInt g1;  // unit of Z_{M^2} used by the master-key ring
  int n = 0;
  int n_min = 3;

  // Key modulus M = p(p-1) and master modulus M^2.
  BigInt KeyModulus() const { return p * (p - 1); }
  BigInt MasterModulus() const { return KeyModulus() * KeyModulus(); }
};

Params Setup(size_t kappa, int n, int n_min, Drbg& rng);

// Validates and assembles parameters from explicit values.
Params MakeParams(const BigInt& p, const BigInt& g, const BigInt& g1, int n,
                  int n_min);

struct MasterKey {
  PartyId id = 0;
  BigInt k;  // in Z_{M^2}
};

struct EncKey {
  PartyId id = 0;
  std::map<int, BigInt> shares;  // group size k -> R_i^{(k)} in Z_M
};

enum class Kind { kAdditive, kMultiplicative };

struct Ciphertext {
  Kind kind = Kind::kAdditive;
  BigInt value;
  PartyId participant = 0;
  PartySet group;
};

// Ring exchange over every party on the bus.
std::map<PartyId, MasterKey> Initialize(const Params& params, netsim::Bus& bus,
                                        Drbg& rng);

// One round: party j sends K_j (1+M)^{poly_j(i)} to every i, for every group
// size k from n_min up to the number of parties on the bus.
std::map<PartyId, EncKey> Keygen(const Params& params,
                                 const std::map<PartyId, MasterKey>& masters,
                                 netsim::Bus& bus, Drbg& rng);

Ciphertext EncryptAdd(const Params& params, const BigInt& x, const EncKey& key,
                      const PartySet& group);
Ciphertext EncryptMul(const Params& params, const BigInt& x, const EncKey& key,
                      const PartySet& group);

// Additive mask R_i^{(|P|)} lambda_{i,P} mod p.
BigInt AdditiveMask(const Params& params, const EncKey& key,
                    const PartySet& group);
// Multiplicative mask g^{R_i^{(|P|)} lambda_{i,P} mod (p-1)} mod p.
BigInt MultiplicativeMask(const Params& params, const EncKey& key,
                          const PartySet& group);

// Sum or product of the plaintexts behind one ciphertext per member of `group`.
BigInt Decrypt(const Params& params, std::span<const Ciphertext> cts,
               const PartySet& group);

}  // namespace pdakit::arith

#endif  // PDAKIT_ARITH_H_
