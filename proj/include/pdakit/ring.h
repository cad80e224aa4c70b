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

#ifndef PDAKIT_RING_H_
#define PDAKIT_RING_H_

#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "pdakit/bigint.h"
#include "pdakit/netsim.h"
#include "pdakit/types.h"

namespace pdakit::ring {

// Lets a party pick its broadcast after seeing every honest one in the
// same round. Returning nullopt keeps the honest value.
using RushingHook = std::function<std::optional<BigInt>(
    PartyId self, const std::map<PartyId, BigInt>& honest)>;

// (y_next * y_prev^{-1})^r mod m.
BigInt RingMask(const BigInt& y_prev, const BigInt& y_next, const BigInt& r,
                const BigInt& m);

// Neighbour of `id` at signed distance `offset` in the ID-ordered ring.
PartyId RingNeighbor(const PartySet& ring, PartyId id, int offset);

// One broadcast round of y_i = base^{r_i}; returns each party's mask Y_i.
// With relay_rounds = k > 0 the mask becomes
// (y_{i+k+1} y_{i-1}^{-1})^{r_{i+k} ... r_i}, built by k extra relay rounds.
std::map<PartyId, BigInt> RingExchange(
    netsim::Bus& bus, const BigInt& base, const BigInt& m,
    const std::map<PartyId, BigInt>& secrets, int relay_rounds = 0,
    const std::map<PartyId, RushingHook>& rushing = {});

}  // namespace pdakit::ring

#endif  // PDAKIT_RING_H_
