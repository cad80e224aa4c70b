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

#ifndef PDAKIT_IO_H_
#define PDAKIT_IO_H_

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

#include "pdakit/arith.h"
#include "pdakit/bigint.h"
#include "pdakit/models.h"
#include "pdakit/paillier.h"
#include "pdakit/pda.h"

// JSON forms of parameters, keys and queries. Big integers are lowercase hex
// strings. Malformed input throws kParseError.
namespace pdakit::io {

using Json = nlohmann::json;

Json ToJson(const pda::Params& p);
pda::Params PdaParamsFromJson(const Json& j);

Json ToJson(const pda::EncKey& k);
pda::EncKey PdaKeyFromJson(const Json& j);

Json ToJson(const arith::Params& p);
arith::Params ArithParamsFromJson(const Json& j);

Json ToJson(const arith::EncKey& k);
arith::EncKey ArithKeyFromJson(const Json& j);

Json ToJson(const paillier::KeyPair& k);
paillier::KeyPair PaillierKeyFromJson(const Json& j);

// {"coeffs": [int | decimal string], "exponents": {"user": {"term": int}},
//  "participants": [...], "window": {"start", "len"}, "special": [u1, u2]?}
Json ToJson(const pda::Query& q);
pda::Query QueryFromJson(const Json& j);

// {"modulus_ref": "arith", "terms": [{"coeff": hex, "powers": {"1": 2}}],
//  "participants": [...]}
Json ToJson(const models::AggPolynomial& poly);
models::AggPolynomial PolynomialFromJson(const Json& j);

// Header "user,t0,t1,...": one row per user, one column per term. Values
// are signed decimal integers.
std::map<PartyId, std::vector<BigInt>> ParseTermData(const std::string& csv);

Json ParseJson(const std::string& text);
Json LoadJson(const std::string& path);
void SaveJson(const std::string& path, const Json& j);
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& text);

}  // namespace pdakit::io

#endif  // PDAKIT_IO_H_
