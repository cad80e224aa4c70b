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

#ifndef PDAKIT_PAILLIER_H_
#define PDAKIT_PAILLIER_H_

#include <cstddef>

#include "pdakit/bigint.h"
#include "pdakit/drbg.h"

namespace pdakit::paillier {

// Public key with generator fixed to n_a + 1.
struct PublicKey {
  BigInt n_a;
  BigInt n_a_sq;
};

struct KeyPair {
  PublicKey pub;
  BigInt lambda;  // lcm(p-1, q-1)
  BigInt mu;      // lambda^{-1} mod n_a
};

struct Ciphertext {
  BigInt value;

  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

inline constexpr size_t kMinModulusBits = 32;

PublicKey MakePublicKey(const BigInt& n_a);

// Builds a key pair from two distinct primes; used for toy fixtures.
KeyPair KeyPairFromPrimes(const BigInt& p, const BigInt& q);

// Random key pair whose modulus has exactly `bits` bits.
KeyPair GenerateKeyPair(size_t bits, Drbg& rng);

// Modulus size that keeps the sum of `max_terms` products c_k * y_k
// (c_k < n, y_k < n^2) from wrapping.
size_t RequiredModulusBits(const BigInt& n, size_t max_terms);

Ciphertext EncryptWith(const BigInt& m, const PublicKey& pub, const BigInt& r);
Ciphertext Encrypt(const BigInt& m, const PublicKey& pub, Drbg& rng);

BigInt Decrypt(const Ciphertext& c, const KeyPair& key);

Ciphertext Add(const Ciphertext& a, const Ciphertext& b, const PublicKey& pub);
Ciphertext Scale(const Ciphertext& c, const BigInt& k, const PublicKey& pub);
// Multiplies by an arbitrary unit of Z_{n_a^2}; the plaintext is unchanged
// only when the units multiply to 1 across a batch.
Ciphertext Blind(const Ciphertext& c, const BigInt& unit, const PublicKey& pub);

void ValidateCiphertext(const Ciphertext& c, const PublicKey& pub);

}  // namespace pdakit::paillier

#endif  // PDAKIT_PAILLIER_H_
