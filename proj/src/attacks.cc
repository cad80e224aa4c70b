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

#include "pdakit/attacks.h"

#include <algorithm>
#include <set>

#include "pdakit/error.h"
#include "pdakit/numtheory.h"
#include "pdakit/ring.h"

namespace pdakit::attacks {

std::vector<BigInt> SolveMod(std::vector<std::vector<BigInt>> a,
                             std::vector<BigInt> b, const BigInt& m) {
  const size_t rows = a.size();
  Require(b.size() == rows, ErrorCode::kInvalidArgument, "shape mismatch");
  const size_t cols = rows == 0 ? 0 : a[0].size();
  for (auto& row : a) {
    for (auto& v : row) v = nt::Mod(v, m);
  }
  for (auto& v : b) v = nt::Mod(v, m);

  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pick = rows;
    bool any_nonzero = false;
    for (size_t i = r; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      any_nonzero = true;
      if (nt::Gcd(a[i][c], m) == 1) {
        pick = i;
        break;
      }
    }
    if (pick == rows) {
      if (any_nonzero) {
        Fail(ErrorCode::kSingularSystem,
             "column " + std::to_string(c) + " has no invertible pivot");
      }
      continue;
    }
    std::swap(a[r], a[pick]);
    std::swap(b[r], b[pick]);
    const BigInt inv = nt::ModInv(a[r][c], m);
    for (auto& v : a[r]) v = nt::ModMul(v, inv, m);
    b[r] = nt::ModMul(b[r], inv, m);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const BigInt f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] = nt::Mod(a[i][j] - f * a[r][j], m);
      b[i] = nt::Mod(b[i] - f * b[r], m);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (size_t i = r; i < rows; ++i) {
    Require(b[i] == 0, ErrorCode::kInvalidArgument, "inconsistent system");
  }
  std::vector<BigInt> x(cols, 0);
  for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

CollusionResult CollusionAttack(
    std::span<const std::pair<PartyId, BigInt>> points, int degree,
    PartyId victim, const BigInt& m) {
  Require(degree >= 1, ErrorCode::kInvalidArgument, "degree must be positive");
  std::set<PartyId> seen;
  for (const auto& [id, y] : points) {
    if (id == 0 || !seen.insert(id).second) {
      Fail(ErrorCode::kSingularSystem,
           "coalition point " + std::to_string(id) + " is repeated or zero");
    }
  }
  const size_t d = static_cast<size_t>(degree);
  std::vector<std::vector<BigInt>> a;
  std::vector<BigInt> b;
  for (const auto& [id, y] : points) {
    std::vector<BigInt> row(d);
    BigInt pw = 1;
    for (size_t j = 0; j < d; ++j) {
      pw = nt::ModMul(pw, id, m);
      row[j] = pw;
    }
    a.push_back(std::move(row));
    b.push_back(y);
  }
  const std::vector<BigInt> sol = SolveMod(a, b, m);
  const BigInt at_victim = nt::EvalZeroConstPoly(sol, victim, m);

  CollusionResult out;
  if (points.size() >= d) {
    out.determined = true;
    out.coeffs = sol;
    out.victim_value = at_victim;
    return out;
  }
  // Add x^{d-s} * prod (x - i_m): zero at every coalition ID and at 0,
  // degree exactly d.
  std::vector<BigInt> extra = {1};  // ascending powers, constant first
  for (const auto& [id, y] : points) {
    std::vector<BigInt> next(extra.size() + 1, 0);
    for (size_t j = 0; j < extra.size(); ++j) {
      next[j + 1] = nt::Mod(next[j + 1] + extra[j], m);
      next[j] = nt::Mod(next[j] - extra[j] * id, m);
    }
    extra = std::move(next);
  }
  extra.insert(extra.begin(), d - points.size(), BigInt(0));
  std::vector<BigInt> second = sol;
  for (size_t j = 1; j < extra.size(); ++j) {
    second[j - 1] = nt::Mod(second[j - 1] + extra[j], m);
  }
  out.witnesses = {sol, second};
  out.witness_values = {at_victim, nt::EvalZeroConstPoly(second, victim, m)};
  return out;
}

CollusionResult CollusionAttack(const std::map<PartyId, pda::EncKey>& keys,
                                const PartySet& coalition, int degree,
                                PartyId victim, const BigInt& n_tilde) {
  std::vector<std::pair<PartyId, BigInt>> points;
  for (PartyId id : coalition) {
    auto it = keys.find(id);
    Require(it != keys.end(), ErrorCode::kKeyMissing,
            "no key for coalition member " + std::to_string(id));
    auto jt = it->second.evaluations.find(degree);
    Require(jt != it->second.evaluations.end(), ErrorCode::kKeyMissing,
            "member " + std::to_string(id) + " has no degree " +
                std::to_string(degree) + " key");
    points.emplace_back(id, jt->second);
  }
  return CollusionAttack(points, degree, victim, n_tilde);
}

RushingOutcome RushingAttackDemo(const BigInt& base, const BigInt& m,
                                 const PartySet& ring, PartyId victim,
                                 int k_collusion, Drbg& rng, bool honest) {
  Require(std::find(ring.begin(), ring.end(), victim) != ring.end(),
          ErrorCode::kInvalidArgument, "victim is not in the ring");
  std::map<PartyId, BigInt> secrets;
  for (PartyId id : ring) {
    Drbg party = rng.Fork("attack.ring", id);
    secrets[id] = party.Unit(m);
  }
  RushingOutcome out;
  out.victim = victim;
  out.attacker = ring::RingNeighbor(ring, victim, -1);
  const PartyId next = ring::RingNeighbor(ring, victim, 1);
  Drbg attacker_rng = rng.Fork("attack.rushing");
  const BigInt a = attacker_rng.Range(1, m);

  std::map<PartyId, ring::RushingHook> hooks;
  hooks[out.attacker] = [&](PartyId self,
                            const std::map<PartyId, BigInt>& honest_ys)
      -> std::optional<BigInt> {
    if (honest) return nt::ModPow(base, secrets.at(self), m);
    return nt::ModMul(honest_ys.at(next), nt::ModPow(base, -a, m), m);
  };
  netsim::Bus bus(ring);
  const auto masks = ring::RingExchange(bus, base, m, secrets, k_collusion, hooks);
  // The attacker only uses what was broadcast.
  for (const auto& msg : bus.transcript().OfKind("ring_y")) {
    if (msg.from == victim) out.predicted = nt::ModPow(msg.Value(), a, m);
  }
  out.actual = masks.at(victim);
  out.success = out.predicted == out.actual;
  out.transcript = bus.transcript();
  return out;
}

}  // namespace pdakit::attacks
