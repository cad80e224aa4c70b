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

#ifndef PDAKIT_ATTACKS_H_
#define PDAKIT_ATTACKS_H_

#include <array>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "pdakit/bigint.h"
#include "pdakit/drbg.h"
#include "pdakit/netsim.h"
#include "pdakit/pda.h"
#include "pdakit/types.h"

namespace pdakit::attacks {

// Solves A a = b (mod m) by elimination with unit pivots. Free variables are
// set to zero. Throws kSingularSystem when a pivot column has only non-unit
// entries, kInvalidArgument when the rows disagree.
std::vector<BigInt> SolveMod(std::vector<std::vector<BigInt>> a,
                             std::vector<BigInt> b, const BigInt& m);

struct CollusionResult {
  bool determined = false;
  // Coefficients a_1..a_d of the recovered polynomial and its value at the
  // victim; set when determined.
  std::vector<BigInt> coeffs;
  BigInt victim_value;
  // Two distinct zero-constant polynomials that agree on every coalition
  // point but not at the victim; set when undetermined.
  std::array<std::vector<BigInt>, 2> witnesses;
  std::array<BigInt, 2> witness_values;
};

// Pools the coalition's points (id, q(id)) of a degree-d polynomial with
// q(0) = 0 and targets q(victim). Throws kSingularSystem on repeated or zero
// IDs.
CollusionResult CollusionAttack(
    std::span<const std::pair<PartyId, BigInt>> points, int degree,
    PartyId victim, const BigInt& m);

// Same attack using encoding keys from a deployment.
CollusionResult CollusionAttack(const std::map<PartyId, pda::EncKey>& keys,
                                const PartySet& coalition, int degree,
                                PartyId victim, const BigInt& n_tilde);

struct RushingOutcome {
  PartyId attacker = 0;
  PartyId victim = 0;
  BigInt predicted;  // y_victim^a
  BigInt actual;     // the victim's mask
  bool success = false;
  netsim::Transcript transcript;
};

// The victim's ring predecessor waits for y_{victim+1} and broadcasts
// y_{victim+1} g~^{-a}. Against the plain ring this makes the victim's mask
// equal y_victim^a. With `honest` the attacker broadcasts its true value.
RushingOutcome RushingAttackDemo(const BigInt& base, const BigInt& m,
                                 const PartySet& ring, PartyId victim,
                                 int k_collusion, Drbg& rng,
                                 bool honest = false);

}  // namespace pdakit::attacks

#endif  // PDAKIT_ATTACKS_H_
