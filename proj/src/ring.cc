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

#include "pdakit/ring.h"

#include <algorithm>
#include <string>

#include "pdakit/error.h"
#include "pdakit/numtheory.h"

namespace pdakit::ring {

BigInt RingMask(const BigInt& y_prev, const BigInt& y_next, const BigInt& r,
                const BigInt& m) {
  if (nt::Gcd(y_prev, m) != 1) {
    Fail(ErrorCode::kNonInvertibleBroadcast,
         "ring value " + y_prev.get_str(16) + " is not a unit");
  }
  const BigInt base = nt::ModMul(y_next, nt::ModInv(y_prev, m), m);
  return nt::ModPow(base, r, m);
}

PartyId RingNeighbor(const PartySet& ring, PartyId id, int offset) {
  auto it = std::find(ring.begin(), ring.end(), id);
  Require(it != ring.end(), ErrorCode::kPartyMissing,
          "party " + std::to_string(id) + " is not on the ring");
  const long n = static_cast<long>(ring.size());
  long pos = (it - ring.begin()) + offset;
  pos = ((pos % n) + n) % n;
  return ring[pos];
}

std::map<PartyId, BigInt> RingExchange(
    netsim::Bus& bus, const BigInt& base, const BigInt& m,
    const std::map<PartyId, BigInt>& secrets, int relay_rounds,
    const std::map<PartyId, RushingHook>& rushing) {
  const PartySet& ring = bus.parties();
  const int n = static_cast<int>(ring.size());
  Require(relay_rounds >= 0, ErrorCode::kInvalidArgument,
          "relay round count must be non-negative");
  if (n < 3 || n <= relay_rounds + 2) {
    Fail(ErrorCode::kRingTooSmall,
         std::to_string(n) + " parties cannot run " +
             std::to_string(relay_rounds) + " relay rounds");
  }
  for (PartyId id : ring) {
    Require(secrets.count(id) > 0, ErrorCode::kPartyMissing,
            "no ring secret for party " + std::to_string(id));
  }

  // Round 1: everyone publishes y_i. Rushing parties choose last.
  const int y_round = bus.BeginRound();
  std::map<PartyId, BigInt> honest;
  for (PartyId id : ring) honest[id] = nt::ModPow(base, secrets.at(id), m);
  std::map<PartyId, BigInt> chosen = honest;
  for (const auto& [id, hook] : rushing) {
    if (auto v = hook(id, honest)) chosen[id] = nt::Mod(*v, m);
  }
  for (PartyId id : ring) bus.Broadcast(id, "ring_y", chosen[id]);

  std::map<PartyId, BigInt> y;
  for (const auto& msg : bus.Delivered(y_round)) {
    if (msg.kind == "ring_y") y[msg.from] = msg.Value();
  }
  for (PartyId id : ring) {
    Require(y.count(id) > 0, ErrorCode::kPartyMissing,
            "party " + std::to_string(id) + " sent no ring value");
  }

  // chain[i] holds the partially exponentiated base for target i.
  std::map<PartyId, BigInt> chain;
  for (PartyId i : ring) {
    const BigInt& prev = y[RingNeighbor(ring, i, -1)];
    if (nt::Gcd(prev, m) != 1) {
      Fail(ErrorCode::kNonInvertibleBroadcast,
           "ring value of party " + std::to_string(RingNeighbor(ring, i, -1)) +
               " is not a unit");
    }
    chain[i] = nt::ModMul(y[RingNeighbor(ring, i, relay_rounds + 1)],
                          nt::ModInv(prev, m), m);
  }

  // Relay step s: party i+k-s+1 raises target i's value and publishes it.
  for (int s = 1; s <= relay_rounds; ++s) {
    const int r = bus.BeginRound();
    for (PartyId relay : ring) {
      const PartyId target = RingNeighbor(ring, relay, -(relay_rounds - s + 1));
      const BigInt v = nt::ModPow(chain[target], secrets.at(relay), m);
      bus.Broadcast(relay, "ring_relay", v, "target=" + std::to_string(target));
    }
    for (const auto& msg : bus.Delivered(r)) {
      if (msg.kind != "ring_relay") continue;
      chain[RingNeighbor(ring, msg.from, -(relay_rounds - s + 1))] = msg.Value();
    }
  }

  std::map<PartyId, BigInt> masks;
  for (PartyId i : ring) masks[i] = nt::ModPow(chain[i], secrets.at(i), m);
  return masks;
}

}  // namespace pdakit::ring
