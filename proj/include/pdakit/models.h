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

#ifndef PDAKIT_MODELS_H_
#define PDAKIT_MODELS_H_

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "pdakit/arith.h"
#include "pdakit/bigint.h"
#include "pdakit/drbg.h"
#include "pdakit/netsim.h"
#include "pdakit/types.h"

namespace pdakit::models {

struct Term {
  BigInt coeff;                      // in Z_p
  std::map<PartyId, uint64_t> powers;  // zero entries are allowed
};

struct AggPolynomial {
  std::vector<Term> terms;
  PartySet participants;
};

using Data = std::map<PartyId, BigInt>;

// Structural checks: sorted distinct participants, powers only on members.
void Validate(const AggPolynomial& poly);

// f(x_P) mod p.
BigInt Evaluate(const AggPolynomial& poly, const Data& data, const BigInt& p);
// f(x_P) over the integers, for overflow checks.
BigInt EvaluateInteger(const AggPolynomial& poly, const Data& data);

// Members with a nonzero power in `term`.
PartySet Owners(const Term& term);
// The member that multiplies the coefficient into its value.
PartyId CoefficientHolder(const Term& term, const PartySet& participants);
// c_{ij} x_i^{d_ij} mod p for member i of term j.
BigInt TermValue(const Term& term, PartyId i, const AggPolynomial& poly,
                 const Data& data, const BigInt& p);

struct SigmaSplit {
  std::vector<size_t> sigma;     // single-owner terms
  std::vector<size_t> products;  // all other terms
  PartySet owners;               // P_Sigma
};

SigmaSplit DetectSingleValueTerms(const AggPolynomial& poly);

// Keys for n real users plus the authority's virtual user n+1.
struct AuthorityDeployment {
  arith::Params params;
  PartyId virtual_id = 0;
  std::map<PartyId, arith::EncKey> keys;
  netsim::Transcript keygen_transcript;
};

AuthorityDeployment DeployAuthority(const arith::Params& params, Drbg& rng);

struct AllParticipantsDeployment {
  arith::Params params;
  std::map<PartyId, arith::EncKey> keys;
  netsim::Transcript keygen_transcript;
};

AllParticipantsDeployment DeployAllParticipants(const arith::Params& params,
                                                Drbg& rng);

struct AggregateOptions {
  // Raise ResultOverflow when the integer value of f is not below p.
  bool check_overflow = false;
  // Members that never send in the aggregation round.
  std::set<PartyId> dropouts;
  std::vector<netsim::Observer> taps;
};

struct AuthorityOutcome {
  BigInt value;
  BigInt sigma_sum;                 // contribution of the extra round
  std::vector<BigInt> term_values;  // recovered product terms, by term index
  netsim::Transcript transcript;
};

AuthorityOutcome AuthorityAggregate(const AuthorityDeployment& deployment,
                                    const AggPolynomial& poly, const Data& data,
                                    const AggregateOptions& options = {});

// Extra additive round over P_Sigma* alone; 0 when Sigma is empty.
BigInt ExtraAdditiveRound(const AuthorityDeployment& deployment,
                          const AggPolynomial& poly, const Data& data,
                          netsim::Bus& bus);

struct AllParticipantsOutcome {
  std::map<PartyId, BigInt> values;  // one result per member
  netsim::Transcript transcript;
};

AllParticipantsOutcome AllParticipantsAggregate(
    const AllParticipantsDeployment& deployment, const AggPolynomial& poly,
    const Data& data, const AggregateOptions& options = {});

}  // namespace pdakit::models

#endif  // PDAKIT_MODELS_H_
