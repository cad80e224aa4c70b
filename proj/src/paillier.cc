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

#include "pdakit/paillier.h"

#include <string>

#include "pdakit/error.h"
#include "pdakit/numtheory.h"

namespace pdakit::paillier {

PublicKey MakePublicKey(const BigInt& n_a) {
  Require(n_a > 2, ErrorCode::kInvalidArgument, "Paillier modulus too small");
  return PublicKey{n_a, n_a * n_a};
}

KeyPair KeyPairFromPrimes(const BigInt& p, const BigInt& q) {
  Require(p != q, ErrorCode::kInvalidArgument, "Paillier primes must differ");
  const BigInt n_a = p * q;
  const BigInt phi = (p - 1) * (q - 1);
  Require(nt::Gcd(n_a, phi) == 1, ErrorCode::kInvalidArgument,
          "gcd(n, phi(n)) must be 1");
  KeyPair kp;
  kp.pub = MakePublicKey(n_a);
  kp.lambda = nt::Lcm(p - 1, q - 1);
  kp.mu = nt::ModInv(kp.lambda, n_a);
  return kp;
}

KeyPair GenerateKeyPair(size_t bits, Drbg& rng) {
  Require(bits >= kMinModulusBits, ErrorCode::kInvalidArgument,
          "Paillier modulus needs at least " + std::to_string(kMinModulusBits) +
              " bits");
  const size_t p_bits = (bits + 1) / 2;
  const size_t q_bits = bits - p_bits;
  while (true) {
    const BigInt p = nt::GenPrime(p_bits, rng);
    const BigInt q = nt::GenPrime(q_bits, rng);
    if (p == q || BitLength(p * q) != bits) continue;
    if (nt::Gcd(p * q, (p - 1) * (q - 1)) != 1) continue;
    return KeyPairFromPrimes(p, q);
  }
}

size_t RequiredModulusBits(const BigInt& n, size_t max_terms) {
  size_t log_terms = 0;
  while ((size_t{1} << log_terms) < max_terms) ++log_terms;
  return 3 * BitLength(n) + log_terms + 2;
}

Ciphertext EncryptWith(const BigInt& m, const PublicKey& pub, const BigInt& r) {
  Require(sgn(m) >= 0, ErrorCode::kInvalidArgument,
          "Paillier plaintext must be non-negative");
  Require(m < pub.n_a, ErrorCode::kMessageTooLarge,
          "plaintext has " + std::to_string(BitLength(m)) +
              " bits, modulus has " + std::to_string(BitLength(pub.n_a)));
  Require(nt::Gcd(r, pub.n_a) == 1, ErrorCode::kInvalidArgument,
          "randomizer must be a unit");
  // (1 + n)^m = 1 + m n mod n^2.
  const BigInt gm = nt::Mod(1 + m * pub.n_a, pub.n_a_sq);
  const BigInt rn = nt::ModPow(r, pub.n_a, pub.n_a_sq);
  return Ciphertext{nt::ModMul(gm, rn, pub.n_a_sq)};
}

Ciphertext Encrypt(const BigInt& m, const PublicKey& pub, Drbg& rng) {
  return EncryptWith(m, pub, rng.Unit(pub.n_a));
}

void ValidateCiphertext(const Ciphertext& c, const PublicKey& pub) {
  Require(sgn(c.value) > 0 && c.value < pub.n_a_sq,
          ErrorCode::kInvalidCiphertext, "ciphertext out of range");
  Require(nt::Gcd(c.value, pub.n_a) == 1, ErrorCode::kInvalidCiphertext,
          "ciphertext shares a factor with the modulus");
}

BigInt Decrypt(const Ciphertext& c, const KeyPair& key) {
  ValidateCiphertext(c, key.pub);
  const BigInt u = nt::ModPow(c.value, key.lambda, key.pub.n_a_sq);
  const BigInt l = (u - 1) / key.pub.n_a;
  return nt::ModMul(l, key.mu, key.pub.n_a);
}

Ciphertext Add(const Ciphertext& a, const Ciphertext& b, const PublicKey& pub) {
  return Ciphertext{nt::ModMul(a.value, b.value, pub.n_a_sq)};
}

Ciphertext Scale(const Ciphertext& c, const BigInt& k, const PublicKey& pub) {
  Require(sgn(k) >= 0, ErrorCode::kInvalidArgument,
          "homomorphic scalar must be non-negative");
  return Ciphertext{nt::ModPow(c.value, k, pub.n_a_sq)};
}

Ciphertext Blind(const Ciphertext& c, const BigInt& unit, const PublicKey& pub) {
  return Ciphertext{nt::ModMul(c.value, unit, pub.n_a_sq)};
}

}  // namespace pdakit::paillier
