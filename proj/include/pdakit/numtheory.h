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

#ifndef PDAKIT_NUMTHEORY_H_
#define PDAKIT_NUMTHEORY_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "pdakit/bigint.h"
#include "pdakit/drbg.h"
#include "pdakit/types.h"

namespace pdakit::nt {

inline constexpr int kMillerRabinRounds = 64;
inline constexpr size_t kMinSafePrimeBits = 3;
inline constexpr size_t kMinCorrelatedKappa = 6;
inline constexpr size_t kDefaultStrictBudget = 20000;

// Reduces into [0, m) for any sign of `a`.
BigInt Mod(const BigInt& a, const BigInt& m);
BigInt ModMul(const BigInt& a, const BigInt& b, const BigInt& m);
// Negative exponents go through ModInv.
BigInt ModPow(const BigInt& base, const BigInt& exp, const BigInt& m);
// Throws kNotInvertible when gcd(a, m) != 1.
BigInt ModInv(const BigInt& a, const BigInt& m);
BigInt Gcd(const BigInt& a, const BigInt& b);
BigInt Lcm(const BigInt& a, const BigInt& b);

// Trial division by a small-prime table, then `rounds` Miller-Rabin rounds
// with bases drawn from `rng`. Numbers below the square of the table bound
// are decided exactly by trial division alone.
bool IsProbablePrime(const BigInt& n, Drbg& rng,
                     int rounds = kMillerRabinRounds);

// Random prime with exactly `bits` bits.
BigInt GenPrime(size_t bits, Drbg& rng);

struct SafePrimePair {
  BigInt p;        // 2 * p_prime + 1
  BigInt p_prime;
};

bool IsSafePrime(const BigInt& p, Drbg& rng);

// Every candidate p' is drawn fresh (no incremental walk), so the output is
// not biased toward primes that follow long prime gaps.
SafePrimePair GenSafePrime(size_t bits, Drbg& rng);

struct ChainCofactor {
  BigInt a;
  BigInt prime;  // 2 * base * a + 1
};

// Smallest a in [a_start, a_end] with 2*base*a + 1 prime.
std::optional<ChainCofactor> FindChainCofactor(const BigInt& base,
                                               const BigInt& a_start,
                                               const BigInt& a_end,
                                               Drbg& rng);

// N = p*q and N~ = p~*q~ with p~ | p-1 and q~ | q-1, so N~ divides phi(N).
struct CorrelatedModuli {
  BigInt n;
  BigInt n_tilde;
  BigInt k_cofactor;  // phi(N) / N~

  // Only populated until DestroyFactors(); callers check invariants first.
  struct Factors {
    BigInt p, q, p_tilde, q_tilde;
  } factors;

  void DestroyFactors();
};

// Relaxed mode searches p = 2*p~*a + 1 upward from a = 2 (q likewise, held
// to p's bit length). Strict mode requires p = 2*p~ + 1 itself, making N a
// safe semiprime with k_cofactor = 4; it gives up after `strict_budget`
// safe-prime draws per side with kStrictChainNotFound.
CorrelatedModuli GenCorrelatedModuli(size_t kappa, bool strict_safe,
                                     Drbg& rng,
                                     size_t strict_budget = kDefaultStrictBudget);

// Denominator-cleared Lagrange coefficients at zero. For every polynomial q
// with integer coefficients and q(0) = 0 of degree < |P|,
//   sum_i weight(i) * q(i) = scale * q(0) = 0
// holds over the integers, hence modulo any M.
class LagrangeWeights {
 public:
  const PartySet& participants() const { return participants_; }
  const BigInt& scale() const { return scale_; }
  // Integer weight lambda_i = scale * L_{i,P}(0); may be negative.
  const BigInt& weight(PartyId id) const;
  // weight(id) reduced into [0, m).
  BigInt WeightMod(PartyId id, const BigInt& m) const;

 private:
  friend LagrangeWeights ComputeLagrangeWeights(std::span<const PartyId>);
  PartySet participants_;
  std::map<PartyId, BigInt> weights_;
  BigInt scale_;
};

// Throws kDuplicateId for repeated IDs, kInvalidArgument for non-positive IDs
// or fewer than two participants.
LagrangeWeights ComputeLagrangeWeights(std::span<const PartyId> participants);

// Solves (1+M)^x = y (mod M^2) as ((y-1)/M) mod M. Throws kNotInSubgroup if
// y mod M != 1.
BigInt DlogOnePlusM(const BigInt& y, const BigInt& m);

// H(t) = h^(XOF(seed, t) mod N~) mod N. Lands in <h>, so H(t)^N~ = 1 mod N
// whenever h^N~ = 1 mod N.
BigInt HashToSubgroup(int64_t t, const BigInt& h, const BigInt& n,
                      const BigInt& n_tilde,
                      std::span<const uint8_t> seed = {});

// sum_{j=1..d} coeffs[j-1] * x^j mod m (zero constant term).
BigInt EvalZeroConstPoly(std::span<const BigInt> coeffs, const BigInt& x,
                         const BigInt& m);

}  // namespace pdakit::nt

#endif  // PDAKIT_NUMTHEORY_H_
