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

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>

#include "pdakit/error.h"
#include "pdakit/numtheory.h"

namespace pdakit::pda {
namespace {

using Data = std::map<PartyId, std::vector<BigInt>>;

// One shared deployment keeps the suite quick on small machines.
const Deployment& SharedDeployment() {
  static const Deployment dep = [] {
    Drbg rng(101);
    return Deploy(32, 6, 3, rng);
  }();
  return dep;
}

PartySet Users(int n) {
  PartySet out;
  for (int i = 1; i <= n; ++i) out.push_back(i);
  return out;
}

std::vector<PartySet> Subsets(int n, size_t min_size) {
  std::vector<PartySet> out;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    PartySet s;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) s.push_back(i + 1);
    }
    if (s.size() >= min_size) out.push_back(s);
  }
  return out;
}

Query RandomQuery(Drbg& rng, const PartySet& members, size_t terms,
                  int64_t start) {
  Query q;
  q.participants = members;
  q.window = {start, static_cast<int64_t>(terms)};
  for (size_t k = 0; k < terms; ++k) {
    BigInt c = rng.Range(-50, 51);
    q.coeffs.push_back(c);
    for (PartyId i : members) {
      const uint64_t e = rng.NextU64() % 4;
      if (e != 0) q.exponents[i][static_cast<int>(k)] = e;
    }
  }
  return q;
}

Data RandomData(Drbg& rng, const PartySet& members, size_t terms,
                const BigInt& bound) {
  Data d;
  for (PartyId i : members) {
    for (size_t k = 0; k < terms; ++k) d[i].push_back(rng.Below(bound));
  }
  return d;
}

Params ToyRingParams() {
  Params p;
  p.n_tilde = 23;
  p.g_tilde = 5;
  return p;
}

TEST(PdaSetup, ToyHasOrderDividingNTilde) {
  Drbg rng(7);
  const Params p = pda::Setup(8, 4, 3, rng);
  EXPECT_EQ(nt::ModPow(p.h, p.n_tilde, p.n_cap), 1);
  EXPECT_NE(p.h, 1);
  EXPECT_EQ(p.hash_seed.size(), 32u);
  EXPECT_EQ(p.theta_min, 3);
}

TEST(PdaSetup, SameSeedSameParams) {
  Drbg a(42), b(42);
  const Params pa = pda::Setup(16, 5, 3, a);
  const Params pb = pda::Setup(16, 5, 3, b);
  EXPECT_EQ(pa.n_cap, pb.n_cap);
  EXPECT_EQ(pa.n_tilde, pb.n_tilde);
  EXPECT_EQ(pa.g, pb.g);
  EXPECT_EQ(pa.g_tilde, pb.g_tilde);
  EXPECT_EQ(pa.hash_seed, pb.hash_seed);
}

TEST(PdaSetup, RejectsBadThreshold) {
  Drbg rng(1);
  try {
    pda::Setup(16, 2, 3, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(PdaSetup, HardenedRaisesThreshold) {
  Drbg rng(3);
  const Params p = pda::Setup(16, 6, 3, rng, {.hardened_k = 2});
  EXPECT_EQ(p.theta_min, 4);
  EXPECT_EQ(p.hardened_k, 2);
}

TEST(PdaSetup, HashSlotLandsInSubgroup) {
  const Params& p = SharedDeployment().params;
  for (int64_t t = 0; t < 20; ++t) {
    EXPECT_EQ(nt::ModPow(HashSlot(p, t), p.n_tilde, p.n_cap), 1);
  }
  EXPECT_NE(HashSlot(p, 1), HashSlot(p, 2));
}

TEST(PdaRing, ToyGroupProductIsOne) {
  netsim::Bus bus(Users(3));
  const auto masks = RingShare(ToyRingParams(), bus, {{1, 3}, {2, 4}, {3, 6}});
  EXPECT_EQ(nt::Mod(masks.at(1) * masks.at(2) * masks.at(3), 23), 1);
  EXPECT_EQ(bus.transcript().size(), 3u);
  for (PartyId i : Users(3)) EXPECT_EQ(bus.BytesSent(i) > 0, true);
}

TEST(PdaRing, HardenedZeroMatchesPlain) {
  Drbg rng(5);
  const Params p = ToyRingParams();
  const auto secrets = SampleRingSecrets(p, Users(4), rng);
  netsim::Bus a(Users(4)), b(Users(4));
  EXPECT_EQ(RingShare(p, a, secrets), RingShareHardened(p, b, secrets, 0));
  EXPECT_EQ(a.transcript(), b.transcript());
}

TEST(PdaRing, HardenedOneOverFiveUsers) {
  Drbg rng(9);
  const Params p = ToyRingParams();
  const auto secrets = SampleRingSecrets(p, Users(5), rng);
  netsim::Bus bus(Users(5));
  const auto masks = RingShareHardened(p, bus, secrets, 1);
  BigInt prod = 1;
  for (const auto& [id, y] : masks) prod = nt::ModMul(prod, y, 23);
  EXPECT_EQ(prod, 1);
}

TEST(PdaRing, HardenedNeedsLargerRing) {
  Drbg rng(9);
  const Params p = ToyRingParams();
  const auto secrets = SampleRingSecrets(p, Users(4), rng);
  netsim::Bus bus(Users(4));
  try {
    RingShareHardened(p, bus, secrets, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRingTooSmall);
  }
}

TEST(PdaKeygen, KeyCountIsNMinusTwo) {
  const Deployment& dep = SharedDeployment();
  ASSERT_EQ(dep.keys.size(), 6u);
  for (const auto& [id, key] : dep.keys) {
    EXPECT_EQ(key.id, id);
    EXPECT_EQ(key.evaluations.size(), 4u);
    EXPECT_EQ(key.evaluations.begin()->first, 2);
    EXPECT_EQ(key.evaluations.rbegin()->first, 5);
  }
}

TEST(PdaKeygen, OneRoundAfterRing) {
  const Deployment& dep = SharedDeployment();
  EXPECT_EQ(dep.keygen_transcript.Rounds(), (std::vector<int>{1, 2}));
  // 6 senders x 5 recipients x 4 degrees.
  EXPECT_EQ(dep.keygen_transcript.InRound(2).size(), 120u);
}

// Evaluations of degree d are points of one polynomial with zero constant
// term: d of them determine all the others.
TEST(PdaKeygen, EvaluationsInterpolate) {
  const Deployment& dep = SharedDeployment();
  const BigInt& m = dep.params.n_tilde;
  for (int d = 2; d <= 5; ++d) {
    PartySet basis = Users(d);
    basis.insert(basis.begin(), 0);  // q(0) = 0
    for (PartyId target = d + 1; target <= 6; ++target) {
      BigInt acc = 0;
      for (PartyId j : basis) {
        if (j == 0) continue;
        mpq_class l(1);
        for (PartyId o : basis) {
          if (o == j) continue;
          mpq_class f(BigInt(target - o), BigInt(j - o));
          f.canonicalize();
          l *= f;
        }
        const BigInt num = l.get_num(), den = l.get_den();
        acc += dep.keys.at(j).evaluations.at(d) * num * nt::ModInv(den, m);
      }
      EXPECT_EQ(nt::Mod(acc, m), dep.keys.at(target).evaluations.at(d))
          << "d=" << d << " target=" << target;
    }
  }
}

TEST(PdaKeygen, LagrangeSumVanishesOnEverySubset) {
  const Deployment& dep = SharedDeployment();
  const BigInt& m = dep.params.n_tilde;
  for (const PartySet& p : Subsets(6, 3)) {
    const int d = static_cast<int>(p.size()) - 1;
    const auto w = nt::ComputeLagrangeWeights(p);
    BigInt acc = 0;
    for (PartyId i : p) acc += dep.keys.at(i).evaluations.at(d) * w.weight(i);
    EXPECT_EQ(nt::Mod(acc, m), 0);
  }
}

TEST(PdaKeygen, TamperedShareFailsExtraction) {
  Drbg rng(11);
  const Params p = pda::Setup(16, 4, 3, rng);
  netsim::Bus bus(Users(4));
  auto masks = RingShare(p, bus, SampleRingSecrets(p, Users(4), rng));
  masks[2] = nt::ModMul(masks[2], 2, p.n_tilde);
  // Y_2^N~ no longer cancels, so some product leaves the (1+N~) subgroup.
  try {
    Keygen(p, bus, masks, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kExtractionFailed);
  }
}

TEST(PdaKeygen, DegreeSubset) {
  Drbg rng(12);
  DeployOptions opts;
  opts.degrees = {3};
  const Deployment dep = Deploy(16, 5, 3, rng, opts);
  for (const auto& [id, key] : dep.keys) {
    EXPECT_EQ(key.evaluations.size(), 1u);
    EXPECT_EQ(key.evaluations.count(3), 1u);
  }
}

TEST(PdaEncode, MaskCancelsOnEverySubsetAndSlot) {
  const Deployment& dep = SharedDeployment();
  const Params& p = dep.params;
  for (const PartySet& set : Subsets(6, 3)) {
    for (int64_t t : {0, 17}) {
      BigInt prod = 1;
      for (PartyId i : set) {
        prod = nt::ModMul(prod, EncodeOrdinary(p, 1, 0, dep.keys.at(i), set, t),
                          p.n_cap);
      }
      EXPECT_EQ(prod, 1);
    }
  }
}

TEST(PdaEncode, OneToTheZeroIsPureMask) {
  const Deployment& dep = SharedDeployment();
  const Params& p = dep.params;
  const PartySet set = {1, 2, 4};
  const BigInt c = EncodeOrdinary(p, 1, 0, dep.keys.at(4), set, 9);
  EXPECT_EQ(c, nt::ModPow(HashSlot(p, 9), MaskExponent(p, dep.keys.at(4), set),
                          p.n_cap));
  EXPECT_EQ(c, EncodeOrdinary(p, 1, 0, dep.keys.at(4), set, 9));
  EXPECT_NE(c, EncodeOrdinary(p, 1, 0, dep.keys.at(4), set, 10));
}

TEST(PdaEncode, ProductRecoversMonomial) {
  const Deployment& dep = SharedDeployment();
  const Params& p = dep.params;
  Drbg rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const PartySet set = Subsets(6, 3)[rng.NextU64() % Subsets(6, 3).size()];
    BigInt prod = 1, expect = 1;
    for (PartyId i : set) {
      const BigInt x = rng.Below(p.n_cap);
      const uint64_t e = rng.NextU64() % 4;
      prod = nt::ModMul(prod, EncodeOrdinary(p, x, e, dep.keys.at(i), set, trial),
                        p.n_cap);
      expect = nt::ModMul(expect, nt::ModPow(x, BigInt(static_cast<unsigned long>(e)), p.n_cap),
                          p.n_cap);
    }
    EXPECT_EQ(prod, expect);
  }
}

TEST(PdaEncode, BelowThreshold) {
  const Deployment& dep = SharedDeployment();
  try {
    EncodeOrdinary(dep.params, 3, 1, dep.keys.at(1), {1, 2}, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGroupBelowThreshold);
  }
}

TEST(PdaEncode, HardenedRejectsLowDegreeKeys) {
  Deployment dep = SharedDeployment();
  dep.params.hardened_k = 2;
  try {
    // |P| = 3 needs the degree 2 key, which is unusable when k = 2.
    MaskExponent(dep.params, dep.keys.at(1), {1, 2, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGroupBelowThreshold);
  }
  EXPECT_NO_THROW(MaskExponent(dep.params, dep.keys.at(1), {1, 2, 3, 4}));
}

TEST(PdaEncode, MissingDegreeKey) {
  const Deployment& dep = SharedDeployment();
  EncKey key = dep.keys.at(1);
  key.evaluations.erase(3);
  try {
    MaskExponent(dep.params, key, {1, 2, 3, 4});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kKeyMissing);
  }
}

TEST(PdaEncode, UserTwoWrapsTheEncoding) {
  const Deployment& dep = SharedDeployment();
  Drbg rng(14);
  const PartySet set = {1, 2, 3};
  const auto ct = EncodeUser2(dep.params, 7, 2, dep.keys.at(2), set, 4,
                              dep.agg.pub, rng);
  EXPECT_EQ(paillier::Decrypt(ct, dep.agg),
            EncodeOrdinary(dep.params, 7, 2, dep.keys.at(2), set, 4));
}

TEST(PdaEncode, SingleTermForcesUnitBlind) {
  const Deployment& dep = SharedDeployment();
  const auto& pub = dep.agg.pub;
  Drbg rng(15);
  const paillier::Ciphertext e2 = paillier::Encrypt(9, pub, rng);
  const auto out = EncodeUser1(dep.params, {{4, 5}}, {e2}, {3}, pub, rng);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0], paillier::Scale(paillier::Scale(e2, 20, pub), 3, pub));
}

TEST(PdaEncode, BlindingPreservesTheSum) {
  const Deployment& dep = SharedDeployment();
  const auto& pub = dep.agg.pub;
  const BigInt& n = dep.params.n_cap;
  Drbg rng(16);
  const std::vector<BigInt> coeffs = {5, -2, 11};
  std::vector<std::vector<BigInt>> others;
  std::vector<paillier::Ciphertext> e2;
  paillier::Ciphertext plain{1};
  for (size_t k = 0; k < 3; ++k) {
    others.push_back({rng.Below(n), rng.Below(n)});
    e2.push_back(paillier::Encrypt(rng.Below(n), pub, rng));
    const BigInt prod = nt::ModMul(others[k][0], others[k][1], n);
    plain = paillier::Add(
        plain,
        paillier::Scale(paillier::Scale(e2[k], prod, pub),
                        NormalizeCoefficient(coeffs[k], n), pub),
        pub);
  }
  const auto blinded = EncodeUser1(dep.params, others, e2, coeffs, pub, rng);
  EXPECT_EQ(Aggregate(blinded, dep.agg, n),
            nt::Mod(paillier::Decrypt(plain, dep.agg), n));
}

TEST(PdaEncode, SingleBlindedTermHidesItsValue) {
  const Deployment& dep = SharedDeployment();
  const auto& pub = dep.agg.pub;
  const BigInt& n = dep.params.n_cap;
  Drbg rng(17);
  int matches = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const BigInt a = rng.Below(n), b = rng.Below(n), c = rng.Range(1, 100);
    const auto blinded = EncodeUser1(
        dep.params, {{a}, {1}}, {paillier::Encrypt(b, pub, rng),
                                 paillier::Encrypt(1, pub, rng)},
        {c, 1}, pub, rng);
    if (paillier::Decrypt(blinded[0], dep.agg) == c * a * b) ++matches;
  }
  EXPECT_EQ(matches, 0);
}

TEST(PdaEncode, User1NeedsEveryTerm) {
  const Deployment& dep = SharedDeployment();
  Drbg rng(18);
  const auto e2 = paillier::Encrypt(1, dep.agg.pub, rng);
  try {
    EncodeUser1(dep.params, {{2}}, {e2, e2}, {1, 1}, dep.agg.pub, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingEncoding);
  }
}

TEST(PdaNormalize, NegativeCoefficient) {
  EXPECT_EQ(NormalizeCoefficient(-3, 35), 32);
  EXPECT_EQ(NormalizeCoefficient(40, 35), 5);
}

TEST(PdaAggregate, TripleProductPlusSquare) {
  const Deployment& dep = SharedDeployment();
  Drbg rng(19);
  Query q;
  q.participants = {1, 2, 3};
  q.coeffs = {1, 2};
  q.window = {100, 2};
  q.exponents[1] = {{0, 1}, {1, 2}};
  q.exponents[2] = {{0, 1}};
  q.exponents[3] = {{0, 1}};
  const Data data = RandomData(rng, q.participants, 2, dep.params.n_cap);
  SlotRegistry reg;
  const auto res = RunAggregation(dep, q, data, reg, rng);
  const BigInt& n = dep.params.n_cap;
  const BigInt x1 = data.at(1)[0], x1b = data.at(1)[1];
  EXPECT_EQ(res.value,
            nt::Mod(x1 * data.at(2)[0] * data.at(3)[0] + 2 * x1b * x1b, n));
  EXPECT_EQ(res.value, EvaluatePlain(q, data, n));
}

TEST(PdaAggregate, AllOnesGivesCoefficientSum) {
  const Deployment& dep = SharedDeployment();
  Drbg rng(20);
  Query q = RandomQuery(rng, {1, 3, 4, 6}, 4, 0);
  Data data;
  for (PartyId i : q.participants) data[i] = std::vector<BigInt>(4, 1);
  SlotRegistry reg;
  BigInt sum = 0;
  for (const auto& c : q.coeffs) sum += c;
  EXPECT_EQ(RunAggregation(dep, q, data, reg, rng).value,
            nt::Mod(sum, dep.params.n_cap));
}

TEST(PdaAggregate, ZeroPolynomial) {
  const Deployment& dep = SharedDeployment();
  Drbg rng(21);
  Query q;
  q.participants = {2, 3, 5};
  q.coeffs = {0};
  q.window = {0, 1};
  q.exponents[2] = {{0, 1}};
  SlotRegistry reg;
  EXPECT_EQ(RunAggregation(dep, q, {{2, {12345}}}, reg, rng).value, 0);
}

TEST(PdaAggregate, RandomInstancesMatchPlainEvaluation) {
  const Deployment& dep = SharedDeployment();
  Drbg rng(22);
  SlotRegistry reg;
  const auto subsets = Subsets(6, 3);
  int64_t slot = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const PartySet set = subsets[rng.NextU64() % subsets.size()];
    const size_t m = 1 + rng.NextU64() % 4;
    Query q = RandomQuery(rng, set, m, slot);
    slot += static_cast<int64_t>(m);
    if (trial % 3 == 0) q.special = std::make_pair(set.back(), set.front());
    const Data data = RandomData(rng, set, m, dep.params.n_cap);
    EXPECT_EQ(RunAggregation(dep, q, data, reg, rng).value,
              EvaluatePlain(q, data, dep.params.n_cap))
        << "trial " << trial;
  }
}

TEST(PdaAggregate, TwoRoundsAfterDeclaration) {
  const Deployment& dep = SharedDeployment();
  Drbg rng(23);
  Query q = RandomQuery(rng, {1, 2, 3, 4}, 3, 0);
  SlotRegistry reg;
  const auto res =
      RunAggregation(dep, q, RandomData(rng, q.participants, 3, 1000), reg, rng);
  EXPECT_EQ(res.transcript.Rounds(), (std::vector<int>{0, 1, 2}));
  const auto decl = res.transcript.InRound(0);
  ASSERT_EQ(decl.size(), 1u);
  EXPECT_EQ(decl[0].from, kAggregatorId);
  // Users 2..4 post m encodings each in round 1; user 1 posts m in round 2.
  EXPECT_EQ(res.transcript.InRound(1).size(), 9u);
  const auto last = res.transcript.InRound(2);
  ASSERT_EQ(last.size(), 3u);
  for (const auto& msg : last) EXPECT_EQ(msg.from, 1);
  for (const auto& msg : res.transcript.messages()) EXPECT_FALSE(msg.to);
}

TEST(PdaAggregate, OverlappingWindowSendsNothing) {
  const Deployment& dep = SharedDeployment();
  Drbg rng(24);
  SlotRegistry reg;
  reg.Reserve({10, 3});
  Query q = RandomQuery(rng, {1, 2, 3}, 2, 12);
  size_t seen = 0;
  try {
    RunAggregation(dep, q, RandomData(rng, q.participants, 2, 100), reg, rng,
                   {[&](const netsim::Message&) { ++seen; }});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSlotReused);
  }
  EXPECT_EQ(seen, 0u);
  EXPECT_EQ(reg.consumed().size(), 1u);
}

TEST(PdaAggregate, ReusingAWindowIsRejected) {
  const Deployment& dep = SharedDeployment();
  Drbg rng(25);
  SlotRegistry reg;
  Query q = RandomQuery(rng, {1, 2, 3}, 2, 50);
  const Data data = RandomData(rng, q.participants, 2, 100);
  RunAggregation(dep, q, data, reg, rng);
  try {
    RunAggregation(dep, q, data, reg, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSlotReused);
  }
}

TEST(PdaAggregate, SmallGroupRejected) {
  Drbg rng(26);
  const Deployment dep = Deploy(16, 5, 4, rng);
  Query q = RandomQuery(rng, {1, 2, 3}, 1, 0);
  SlotRegistry reg;
  try {
    RunAggregation(dep, q, RandomData(rng, q.participants, 1, 10), reg, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGroupBelowThreshold);
  }
  EXPECT_TRUE(reg.consumed().empty());
}

TEST(PdaAggregate, HardenedDeploymentWorks) {
  Drbg rng(27);
  DeployOptions opts;
  opts.setup.hardened_k = 1;
  const Deployment dep = Deploy(16, 5, 3, rng, opts);
  Query q = RandomQuery(rng, {1, 2, 4, 5}, 2, 0);
  const Data data = RandomData(rng, q.participants, 2, dep.params.n_cap);
  SlotRegistry reg;
  EXPECT_EQ(RunAggregation(dep, q, data, reg, rng).value,
            EvaluatePlain(q, data, dep.params.n_cap));
}

TEST(PdaAggregate, Deterministic) {
  const Deployment& dep = SharedDeployment();
  Drbg seed(28);
  Query q = RandomQuery(seed, {1, 2, 3}, 2, 0);
  const Data data = RandomData(seed, q.participants, 2, 999);
  SlotRegistry r1, r2;
  Drbg a(5), b(5);
  EXPECT_EQ(RunAggregation(dep, q, data, r1, a).transcript,
            RunAggregation(dep, q, data, r2, b).transcript);
}

TEST(PdaAggregate, TamperedCiphertextRejected) {
  const Deployment& dep = SharedDeployment();
  try {
    Aggregate({paillier::Ciphertext{0}}, dep.agg, dep.params.n_cap);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidCiphertext);
  }
}

TEST(PdaQuery, Validation) {
  Query q;
  q.participants = {1, 2, 3};
  q.coeffs = {1, 1};
  q.window = {0, 3};
  try {
    ValidateQuery(q);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
  q.window.len = 2;
  EXPECT_NO_THROW(ValidateQuery(q));
  q.exponents[9][0] = 1;
  EXPECT_THROW(ValidateQuery(q), Error);
}

TEST(PdaRegistry, JsonRoundTripAndFile) {
  SlotRegistry reg;
  reg.Reserve({0, 4});
  reg.Reserve({10, 2});
  EXPECT_TRUE(reg.Overlaps({3, 1}));
  EXPECT_FALSE(reg.Overlaps({4, 6}));
  const SlotRegistry back = SlotRegistry::FromJson(reg.ToJson());
  EXPECT_EQ(back.consumed(), reg.consumed());

  const auto path =
      (std::filesystem::temp_directory_path() / "pdakit_registry_test.json")
          .string();
  std::remove(path.c_str());
  EXPECT_TRUE(SlotRegistry::Load(path).consumed().empty());
  reg.Save(path);
  EXPECT_EQ(SlotRegistry::Load(path).consumed(), reg.consumed());
  std::remove(path.c_str());
}

TEST(PdaRegistry, RejectsOverlapAndEmpty) {
  SlotRegistry reg;
  reg.Reserve({5, 5});
  EXPECT_THROW(reg.Reserve({9, 1}), Error);
  EXPECT_THROW(reg.Reserve({20, 0}), Error);
  EXPECT_NO_THROW(reg.Reserve({10, 1}));
}

TEST(PdaDriver, KeygenCeremony) {
  Drbg rng(29);
  const Params p = pda::Setup(16, 4, 3, rng);
  KeygenDriver driver(p, rng.Fork("ceremony"));
  const auto rec = netsim::RunCeremony(driver, Users(4));
  EXPECT_EQ(driver.keys().size(), 4u);
  EXPECT_EQ(rec.transcript.Rounds(), (std::vector<int>{1, 2}));
}

}  // namespace
}  // namespace pdakit::pda
