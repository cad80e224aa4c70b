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

#ifndef PDAKIT_ANALYTICS_H_
#define PDAKIT_ANALYTICS_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pdakit/bigint.h"
#include "pdakit/drbg.h"
#include "pdakit/pda.h"
#include "pdakit/types.h"

namespace pdakit::analytics {

// round(x * 2^f) mapped into Z_N; negatives become N - |raw|.
// Throws kOverflow unless |raw| < N/2.
BigInt FixedEncode(double x, int f, const BigInt& n);
// Signed integer -> residue, with the same overflow rule.
BigInt ToResidue(const BigInt& raw, const BigInt& n);
// Residues above N/2 are read as negative.
BigInt FromResidue(const BigInt& v, const BigInt& n);
mpq_class FixedDecodeExact(const BigInt& v, int scale_bits, const BigInt& n);
double FixedDecode(const BigInt& v, int scale_bits, const BigInt& n);

// Terms of degree d_k in a query whose highest degree is d_max get their
// coefficient multiplied by 2^{f (d_max - d_k)}, so every term carries the
// common scale 2^{f d_max}.
std::vector<BigInt> AlignCoefficients(const std::vector<BigInt>& coeffs,
                                      const std::vector<int>& degrees, int f);

// sum over P of the per-user monomial prod_{c in columns} x_{i,c}.
// An empty column list counts the users.
struct SumQuery {
  std::string label;
  std::vector<int> columns;
  pda::Query query;
  int scale_bits = 0;  // f * |columns|
};

struct QueryPlan {
  std::string kind;  // "mean_variance" or "linear_regression"
  int f = 0;
  int features = 0;
  PartySet participants;
  std::vector<SumQuery> queries;

  int64_t SlotsUsed() const;
};

// Two queries, sum x and sum x^2, over column 0.
QueryPlan PlanMeanVariance(const PartySet& participants, int f, int theta_min,
                           int64_t first_slot = 0);

// Columns 0..d-1 are features and column d is y. The design gets an
// intercept, giving (d+1)(d+2)/2 queries for X^T X and d+1 for X^T y.
QueryPlan PlanLinearRegression(const PartySet& participants, int d, int f,
                               int theta_min, int64_t first_slot = 0);

using Rows = std::map<PartyId, std::vector<double>>;

// What each user submits for `q`: its fixed-point monomial in the term it
// owns, 1 elsewhere.
std::map<PartyId, std::vector<BigInt>> LocalInputs(const SumQuery& q,
                                                   const Rows& rows, int f,
                                                   const BigInt& n);

struct PlanRun {
  std::vector<mpq_class> sums;  // decoded, one per query
  std::vector<BigInt> raw;      // aggregator outputs in Z_N
  size_t messages = 0;
  size_t bytes = 0;
};

PlanRun ExecutePlan(const pda::Deployment& dep, const QueryPlan& plan,
                    const Rows& rows, pda::SlotRegistry& registry, Drbg& rng);

// The same sums computed in the clear from the unencoded inputs.
std::vector<mpq_class> PlainSums(const QueryPlan& plan, const Rows& rows);

struct MeanVariance {
  mpq_class mean;
  mpq_class variance;  // population variance
};

MeanVariance FinishMeanVariance(const QueryPlan& plan,
                                const std::vector<mpq_class>& sums);

// Solves (A + ridge I) p = b exactly. Returns (intercept, beta_1..beta_d).
// Throws kSingularNormalEquations.
std::vector<mpq_class> FinishRegression(const QueryPlan& plan,
                                        const std::vector<mpq_class>& sums,
                                        const mpq_class& ridge = 0);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  int Column(const std::string& name) const;  // -1 when absent
};

Table ParseCsv(const std::string& text);
Table ReadCsv(const std::string& path);

// Features in header order followed by "y"; users are numbered from 1 in
// row order. Throws kParseError without a "y" column.
Rows RegressionRows(const Table& table, std::vector<std::string>* feature_names);

}  // namespace pdakit::analytics

#endif  // PDAKIT_ANALYTICS_H_
