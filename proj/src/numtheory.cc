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

#include "pdakit/numtheory.h"

#include <algorithm>
#include <set>
#include <string>

#include "pdakit/error.h"

namespace pdakit::nt {
namespace {

constexpr unsigned kSmallPrimeBound = 2000;

const std::vector<unsigned>& SmallPrimes() {
  static const std::vector<unsigned> primes = [] {
    std::vector<bool> composite(kSmallPrimeBound + 1, false);
    std::vector<unsigned> out;
    for (unsigned i = 2; i <= kSmallPrimeBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned j = i * i; j <= kSmallPrimeBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Exact for n < kSmallPrimeBound^2.
bool TrialDivisionIsPrime(const BigInt& n) {
  if (n < 2) return false;
  for (unsigned p : SmallPrimes()) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  return true;
}

// True if `n` has no factor among the small primes (n itself may be one).
bool PassesSieve(const BigInt& n) {
  for (unsigned p : SmallPrimes()) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  return true;
}

bool MillerRabinRound(const BigInt& n, const BigInt& n_minus_1,
                      const BigInt& d, unsigned long s, const BigInt& a) {
  BigInt x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

BigInt RandomWithTopBit(size_t bits, Drbg& rng) {
  BigInt v = rng.Bits(bits);
  mpz_setbit(v.get_mpz_t(), bits - 1);
  return v;
}

}  // namespace

BigInt Mod(const BigInt& a, const BigInt& m) {
  Require(m > 0, ErrorCode::kInvalidArgument, "modulus must be positive");
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt ModMul(const BigInt& a, const BigInt& b, const BigInt& m) {
  return Mod(a * b, m);
}

BigInt ModPow(const BigInt& base, const BigInt& exp, const BigInt& m) {
  Require(m > 1, ErrorCode::kInvalidArgument, "modulus must exceed 1");
  BigInt b = Mod(base, m);
  BigInt e = exp;
  if (sgn(e) < 0) {
    b = ModInv(b, m);
    e = -e;
  }
  BigInt r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt ModInv(const BigInt& a, const BigInt& m) {
  Require(m > 1, ErrorCode::kInvalidArgument, "modulus must exceed 1");
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), Mod(a, m).get_mpz_t(), m.get_mpz_t()) == 0) {
    Fail(ErrorCode::kNotInvertible,
         a.get_str() + " has no inverse modulo " + m.get_str());
  }
  return r;
}

BigInt Gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt Lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool IsProbablePrime(const BigInt& n, Drbg& rng, int rounds) {
  if (n < 2) return false;
  if (n < BigInt(kSmallPrimeBound) * kSmallPrimeBound) {
    return TrialDivisionIsPrime(n);
  }
  if (!PassesSieve(n)) return false;

  const BigInt n_minus_1 = n - 1;
  BigInt d = n_minus_1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  for (int i = 0; i < rounds; ++i) {
    const BigInt a = rng.Range(2, n_minus_1);
    if (!MillerRabinRound(n, n_minus_1, d, s, a)) return false;
  }
  return true;
}

BigInt GenPrime(size_t bits, Drbg& rng) {
  Require(bits >= 2, ErrorCode::kInvalidArgument, "prime needs >= 2 bits");
  while (true) {
    BigInt c = RandomWithTopBit(bits, rng);
    if (bits > 2) mpz_setbit(c.get_mpz_t(), 0);
    if (IsProbablePrime(c, rng, 1) && IsProbablePrime(c, rng)) return c;
  }
}

bool IsSafePrime(const BigInt& p, Drbg& rng) {
  if (p < 5 || mpz_even_p(p.get_mpz_t())) return false;
  const BigInt half = (p - 1) / 2;
  return IsProbablePrime(half, rng) && IsProbablePrime(p, rng);
}

SafePrimePair GenSafePrime(size_t bits, Drbg& rng) {
  Require(bits >= kMinSafePrimeBits, ErrorCode::kInvalidArgument,
          "safe prime needs at least " + std::to_string(kMinSafePrimeBits) +
              " bits");
  while (true) {
    // p' has bits-1 bits, so p = 2p'+1 has exactly `bits` bits.
    BigInt q = RandomWithTopBit(bits - 1, rng);
    if (bits - 1 > 2) mpz_setbit(q.get_mpz_t(), 0);
    const BigInt p = 2 * q + 1;
    if (!PassesSieve(q) || !PassesSieve(p)) continue;
    if (!IsProbablePrime(q, rng, 1) || !IsProbablePrime(p, rng, 1)) continue;
    if (IsProbablePrime(q, rng) && IsProbablePrime(p, rng)) {
      return SafePrimePair{p, q};
    }
  }
}

std::optional<ChainCofactor> FindChainCofactor(const BigInt& base,
                                               const BigInt& a_start,
                                               const BigInt& a_end,
                                               Drbg& rng) {
  for (BigInt a = a_start; a <= a_end; ++a) {
    const BigInt candidate = 2 * base * a + 1;
    if (IsProbablePrime(candidate, rng, 1) && IsProbablePrime(candidate, rng)) {
      return ChainCofactor{a, candidate};
    }
  }
  return std::nullopt;
}

void CorrelatedModuli::DestroyFactors() {
  for (BigInt* f : {&factors.p, &factors.q, &factors.p_tilde, &factors.q_tilde}) {
    // Overwrite the limbs before releasing them.
    mpz_set_ui(f->get_mpz_t(), 0);
    BigInt().swap(*f);
  }
}

namespace {

struct SidePrime {
  BigInt tilde;  // the kappa-bit safe prime
  BigInt prime;  // the prime whose p-1 it divides
};

SidePrime StrictSide(size_t kappa, const BigInt& avoid, Drbg& rng,
                     size_t budget) {
  for (size_t attempt = 0; attempt < budget; ++attempt) {
    SafePrimePair sp = GenSafePrime(kappa, rng);
    if (sp.p == avoid) continue;
    const BigInt p = 2 * sp.p + 1;
    if (IsProbablePrime(p, rng)) return SidePrime{sp.p, p};
  }
  Fail(ErrorCode::kStrictChainNotFound,
       "no Cunningham chain found for kappa=" + std::to_string(kappa) +
           " within " + std::to_string(budget) + " safe primes");
}

BigInt DistinctSafePrime(size_t kappa, const BigInt& avoid, Drbg& rng) {
  // Small kappa have very few safe primes; refuse rather than spin.
  for (int attempt = 0; attempt < 4096; ++attempt) {
    SafePrimePair sp = GenSafePrime(kappa, rng);
    if (sp.p != avoid) return sp.p;
  }
  Fail(ErrorCode::kInvalidArgument,
       "kappa=" + std::to_string(kappa) + " admits no second safe prime");
}

}  // namespace

CorrelatedModuli GenCorrelatedModuli(size_t kappa, bool strict_safe,
                                     Drbg& rng, size_t strict_budget) {
  Require(kappa >= kMinCorrelatedKappa, ErrorCode::kInvalidArgument,
          "kappa must be at least " + std::to_string(kMinCorrelatedKappa));
  CorrelatedModuli out;
  auto& f = out.factors;

  if (strict_safe) {
    SidePrime ps = StrictSide(kappa, 0, rng, strict_budget);
    SidePrime qs = StrictSide(kappa, ps.tilde, rng, strict_budget);
    f = {ps.prime, qs.prime, ps.tilde, qs.tilde};
  } else {
    bool found = false;
    for (int attempt = 0; attempt < 4096 && !found; ++attempt) {
      f.p_tilde = GenSafePrime(kappa, rng).p;
      // a = 1 would be the strict chain; relaxed mode starts above it.
      auto p_side = FindChainCofactor(f.p_tilde, 2, f.p_tilde, rng);
      if (!p_side) continue;
      f.p = p_side->prime;
      f.q_tilde = DistinctSafePrime(kappa, f.p_tilde, rng);
      // Keep q inside p's bit band so N has a predictable size.
      const size_t target_bits = BitLength(f.p);
      const BigInt lo = BigInt(1) << (target_bits - 1);
      const BigInt hi = (BigInt(1) << target_bits) - 1;
      BigInt a_lo = (lo - 1 + 2 * f.q_tilde - 1) / (2 * f.q_tilde);
      const BigInt a_hi = (hi - 1) / (2 * f.q_tilde);
      if (a_lo < 2) a_lo = 2;
      for (BigInt a = a_lo; a <= a_hi; ++a) {
        const BigInt candidate = 2 * f.q_tilde * a + 1;
        if (candidate != f.p && IsProbablePrime(candidate, rng)) {
          f.q = candidate;
          found = true;
          break;
        }
      }
    }
    Require(found, ErrorCode::kInvalidArgument,
            "no correlated moduli found for kappa=" + std::to_string(kappa));
  }

  out.n = f.p * f.q;
  out.n_tilde = f.p_tilde * f.q_tilde;
  const BigInt phi = (f.p - 1) * (f.q - 1);
  Require(mpz_divisible_p(phi.get_mpz_t(), out.n_tilde.get_mpz_t()) != 0,
          ErrorCode::kInvalidArgument, "N~ does not divide phi(N)");
  out.k_cofactor = phi / out.n_tilde;
  return out;
}

const BigInt& LagrangeWeights::weight(PartyId id) const {
  auto it = weights_.find(id);
  Require(it != weights_.end(), ErrorCode::kInvalidArgument,
          "party " + std::to_string(id) + " is not in the participant set");
  return it->second;
}

BigInt LagrangeWeights::WeightMod(PartyId id, const BigInt& m) const {
  return Mod(weight(id), m);
}

LagrangeWeights ComputeLagrangeWeights(std::span<const PartyId> participants) {
  Require(participants.size() >= 2, ErrorCode::kInvalidArgument,
          "Lagrange weights need at least two participants");
  std::set<PartyId> seen;
  for (PartyId id : participants) {
    Require(id > 0, ErrorCode::kInvalidArgument,
            "participant IDs must be positive");
    Require(seen.insert(id).second, ErrorCode::kDuplicateId,
            "participant " + std::to_string(id) + " listed twice");
  }

  LagrangeWeights out;
  out.participants_.assign(participants.begin(), participants.end());
  std::map<PartyId, mpq_class> exact;
  BigInt scale = 1;
  for (PartyId i : participants) {
    mpq_class l = 1;
    for (PartyId j : participants) {
      if (j == i) continue;
      mpq_class factor(BigInt(-j), BigInt(i - j));
      factor.canonicalize();
      l *= factor;
    }
    scale = Lcm(scale, l.get_den());
    exact.emplace(i, l);
  }
  for (const auto& [id, l] : exact) {
    out.weights_.emplace(id, l.get_num() * (scale / l.get_den()));
  }
  out.scale_ = scale;
  return out;
}

BigInt DlogOnePlusM(const BigInt& y, const BigInt& m) {
  Require(m > 1, ErrorCode::kInvalidArgument, "modulus must exceed 1");
  const BigInt y_red = Mod(y, m * m);
  if (Mod(y_red, m) != 1) {
    Fail(ErrorCode::kNotInSubgroup,
         "value is not congruent to 1 modulo M; not a power of (1+M)");
  }
  return Mod((y_red - 1) / m, m);
}

BigInt HashToSubgroup(int64_t t, const BigInt& h, const BigInt& n,
                      const BigInt& n_tilde, std::span<const uint8_t> seed) {
  static constexpr std::string_view kTag = "pdakit.hash_to_subgroup.v1";
  uint8_t t_bytes[8];
  uint8_t seed_len[8];
  uint64_t tu = static_cast<uint64_t>(t);
  uint64_t sl = seed.size();
  for (int i = 7; i >= 0; --i) {
    t_bytes[i] = static_cast<uint8_t>(tu & 0xff);
    seed_len[i] = static_cast<uint8_t>(sl & 0xff);
    tu >>= 8;
    sl >>= 8;
  }
  const std::span<const uint8_t> parts[] = {
      {reinterpret_cast<const uint8_t*>(kTag.data()), kTag.size()},
      seed_len,
      seed,
      t_bytes};
  // 128 surplus bits make the reduction bias negligible.
  const size_t out_len = (BitLength(n_tilde) + 7) / 8 + 16;
  const std::vector<uint8_t> xof = Shake256(parts, out_len);
  const BigInt exponent = Mod(FromBytes(xof.data(), xof.size()), n_tilde);
  return ModPow(h, exponent, n);
}

BigInt EvalZeroConstPoly(std::span<const BigInt> coeffs, const BigInt& x,
                         const BigInt& m) {
  BigInt acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = Mod((acc + *it) * x, m);
  }
  return acc;
}

}  // namespace pdakit::nt
