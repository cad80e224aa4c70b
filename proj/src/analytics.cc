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

#include "pdakit/analytics.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "pdakit/error.h"
#include "pdakit/numtheory.h"

namespace pdakit::analytics {
namespace {

BigInt Pow2(int bits) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(bits));
  return out;
}

BigInt RoundNearest(const mpq_class& q) {
  // Half away from zero.
  mpq_class a = abs(q) + mpq_class(1, 2);
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  return sgn(q) < 0 ? BigInt(-r) : r;
}

SumQuery MakeSumQuery(std::string label, std::vector<int> columns,
                      const PartySet& participants, int f, int64_t start) {
  SumQuery sq;
  sq.label = std::move(label);
  sq.columns = std::move(columns);
  sq.scale_bits = f * static_cast<int>(sq.columns.size());
  pda::Query& q = sq.query;
  q.participants = participants;
  const size_t m = participants.size();
  std::vector<int> degrees(m, static_cast<int>(sq.columns.size()));
  q.coeffs = AlignCoefficients(std::vector<BigInt>(m, 1), degrees, f);
  q.window = {start, static_cast<int64_t>(m)};
  for (size_t k = 0; k < m; ++k) {
    q.exponents[participants[k]][static_cast<int>(k)] = 1;
  }
  return sq;
}

void CheckParticipants(const PartySet& participants, int theta_min) {
  Require(std::is_sorted(participants.begin(), participants.end()),
          ErrorCode::kInvalidArgument, "participants must be sorted");
  if (static_cast<int>(participants.size()) < theta_min) {
    Fail(ErrorCode::kGroupBelowThreshold,
         "|P|=" + std::to_string(participants.size()) + " is below theta_min=" +
             std::to_string(theta_min));
  }
}

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(Trim(cell));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

BigInt ToResidue(const BigInt& raw, const BigInt& n) {
  if (2 * abs(raw) >= n) {
    Fail(ErrorCode::kOverflow, "fixed-point value does not fit in (-N/2, N/2)");
  }
  return nt::Mod(raw, n);
}

BigInt FromResidue(const BigInt& v, const BigInt& n) {
  const BigInt r = nt::Mod(v, n);
  return 2 * r > n ? BigInt(r - n) : r;
}

BigInt FixedEncode(double x, int f, const BigInt& n) {
  Require(f >= 0, ErrorCode::kInvalidArgument, "negative fraction bits");
  Require(std::isfinite(x), ErrorCode::kInvalidArgument, "non-finite input");
  return ToResidue(RoundNearest(mpq_class(x) * Pow2(f)), n);
}

mpq_class FixedDecodeExact(const BigInt& v, int scale_bits, const BigInt& n) {
  mpq_class q(FromResidue(v, n), Pow2(scale_bits));
  q.canonicalize();
  return q;
}

double FixedDecode(const BigInt& v, int scale_bits, const BigInt& n) {
  return FixedDecodeExact(v, scale_bits, n).get_d();
}

std::vector<BigInt> AlignCoefficients(const std::vector<BigInt>& coeffs,
                                      const std::vector<int>& degrees, int f) {
  Require(coeffs.size() == degrees.size(), ErrorCode::kInvalidArgument,
          "one degree per coefficient");
  if (coeffs.empty()) return {};
  const int d_max = *std::max_element(degrees.begin(), degrees.end());
  std::vector<BigInt> out(coeffs.size());
  for (size_t k = 0; k < coeffs.size(); ++k) {
    out[k] = coeffs[k] * Pow2(f * (d_max - degrees[k]));
  }
  return out;
}

int64_t QueryPlan::SlotsUsed() const {
  int64_t total = 0;
  for (const auto& q : queries) total += q.query.window.len;
  return total;
}

QueryPlan PlanMeanVariance(const PartySet& participants, int f, int theta_min,
                           int64_t first_slot) {
  CheckParticipants(participants, theta_min);
  QueryPlan plan;
  plan.kind = "mean_variance";
  plan.f = f;
  plan.features = 1;
  plan.participants = participants;
  const int64_t m = static_cast<int64_t>(participants.size());
  plan.queries.push_back(MakeSumQuery("sum_x", {0}, participants, f, first_slot));
  plan.queries.push_back(
      MakeSumQuery("sum_x2", {0, 0}, participants, f, first_slot + m));
  return plan;
}

QueryPlan PlanLinearRegression(const PartySet& participants, int d, int f,
                               int theta_min, int64_t first_slot) {
  Require(d >= 1, ErrorCode::kInvalidArgument, "regression needs a feature");
  CheckParticipants(participants, theta_min);
  QueryPlan plan;
  plan.kind = "linear_regression";
  plan.f = f;
  plan.features = d;
  plan.participants = participants;
  const int64_t m = static_cast<int64_t>(participants.size());
  int64_t slot = first_slot;
  // Design index 0 is the intercept; index a > 0 is feature column a - 1.
  auto cols = [](int a) {
    return a == 0 ? std::vector<int>{} : std::vector<int>{a - 1};
  };
  for (int a = 0; a <= d; ++a) {
    for (int b = a; b <= d; ++b) {
      std::vector<int> c = cols(a);
      for (int x : cols(b)) c.push_back(x);
      plan.queries.push_back(MakeSumQuery(
          "A[" + std::to_string(a) + "," + std::to_string(b) + "]", c,
          participants, f, slot));
      slot += m;
    }
  }
  for (int a = 0; a <= d; ++a) {
    std::vector<int> c = cols(a);
    c.push_back(d);
    plan.queries.push_back(MakeSumQuery("b[" + std::to_string(a) + "]", c,
                                        participants, f, slot));
    slot += m;
  }
  return plan;
}

std::map<PartyId, std::vector<BigInt>> LocalInputs(const SumQuery& q,
                                                   const Rows& rows, int f,
                                                   const BigInt& n) {
  const size_t m = q.query.participants.size();
  std::map<PartyId, std::vector<BigInt>> out;
  for (size_t k = 0; k < m; ++k) {
    const PartyId id = q.query.participants[k];
    auto it = rows.find(id);
    Require(it != rows.end(), ErrorCode::kInvalidArgument,
            "no data row for user " + std::to_string(id));
    BigInt raw = 1;
    for (int c : q.columns) {
      Require(c >= 0 && static_cast<size_t>(c) < it->second.size(),
              ErrorCode::kInvalidArgument,
              "user " + std::to_string(id) + " lacks column " + std::to_string(c));
      raw *= FromResidue(FixedEncode(it->second[c], f, n), n);
    }
    std::vector<BigInt> inputs(m, BigInt(1));
    inputs[k] = ToResidue(raw, n);
    out[id] = std::move(inputs);
  }
  return out;
}

PlanRun ExecutePlan(const pda::Deployment& dep, const QueryPlan& plan,
                    const Rows& rows, pda::SlotRegistry& registry, Drbg& rng) {
  const BigInt& n = dep.params.n_cap;
  PlanRun run;
  for (size_t j = 0; j < plan.queries.size(); ++j) {
    const SumQuery& sq = plan.queries[j];
    Drbg qrng = rng.Fork("analytics.query", j);
    const auto res = pda::RunAggregation(
        dep, sq.query, LocalInputs(sq, rows, plan.f, n), registry, qrng);
    run.raw.push_back(res.value);
    run.sums.push_back(FixedDecodeExact(res.value, sq.scale_bits, n));
    run.messages += res.transcript.size();
    for (const auto& bc : res.bytes) run.bytes += bc.sent;
  }
  return run;
}

std::vector<mpq_class> PlainSums(const QueryPlan& plan, const Rows& rows) {
  std::vector<mpq_class> out;
  for (const SumQuery& q : plan.queries) {
    mpq_class sum = 0;
    for (PartyId id : plan.participants) {
      const auto& row = rows.at(id);
      mpq_class term = 1;
      for (int c : q.columns) term *= mpq_class(row.at(c));
      sum += term;
    }
    out.push_back(sum);
  }
  return out;
}

MeanVariance FinishMeanVariance(const QueryPlan& plan,
                                const std::vector<mpq_class>& sums) {
  Require(plan.kind == "mean_variance" && sums.size() == 2,
          ErrorCode::kInvalidArgument, "not a mean/variance plan");
  const mpq_class count(static_cast<long>(plan.participants.size()));
  MeanVariance out;
  out.mean = sums[0] / count;
  out.variance = sums[1] / count - out.mean * out.mean;
  out.mean.canonicalize();
  out.variance.canonicalize();
  return out;
}

std::vector<mpq_class> FinishRegression(const QueryPlan& plan,
                                        const std::vector<mpq_class>& sums,
                                        const mpq_class& ridge) {
  const size_t dim = static_cast<size_t>(plan.features) + 1;
  Require(plan.kind == "linear_regression" &&
              sums.size() == dim * (dim + 1) / 2 + dim,
          ErrorCode::kInvalidArgument, "not a regression plan");
  std::vector<std::vector<mpq_class>> a(dim, std::vector<mpq_class>(dim + 1));
  size_t idx = 0;
  for (size_t r = 0; r < dim; ++r) {
    for (size_t c = r; c < dim; ++c) {
      a[r][c] = a[c][r] = sums[idx++];
    }
  }
  for (size_t r = 0; r < dim; ++r) {
    a[r][r] += ridge;
    a[r][dim] = sums[idx++];
  }
  for (size_t c = 0; c < dim; ++c) {
    size_t pivot = c;
    while (pivot < dim && a[pivot][c] == 0) ++pivot;
    if (pivot == dim) {
      Fail(ErrorCode::kSingularNormalEquations,
           "normal equations are singular in column " + std::to_string(c));
    }
    std::swap(a[c], a[pivot]);
    for (size_t r = 0; r < dim; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const mpq_class factor = a[r][c] / a[c][c];
      for (size_t k = c; k <= dim; ++k) a[r][k] -= factor * a[c][k];
    }
  }
  std::vector<mpq_class> p(dim);
  for (size_t r = 0; r < dim; ++r) {
    p[r] = a[r][dim] / a[r][r];
    p[r].canonicalize();
  }
  return p;
}

int Table::Column(const std::string& name) const {
  auto it = std::find(header.begin(), header.end(), name);
  return it == header.end() ? -1 : static_cast<int>(it - header.begin());
}

Table ParseCsv(const std::string& text) {
  Table t;
  std::stringstream ss(text);
  std::string line;
  size_t line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    auto cells = SplitCsvLine(line);
    if (t.header.empty()) {
      t.header = std::move(cells);
      continue;
    }
    if (cells.size() != t.header.size()) {
      Fail(ErrorCode::kParseError, "line " + std::to_string(line_no) + " has " +
                                       std::to_string(cells.size()) +
                                       " cells, expected " +
                                       std::to_string(t.header.size()));
    }
    std::vector<double> row;
    for (const auto& c : cells) {
      size_t used = 0;
      double v = 0;
      try {
        v = std::stod(c, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != c.size()) {
        Fail(ErrorCode::kParseError,
             "line " + std::to_string(line_no) + ": '" + c + "' is not a number");
      }
      row.push_back(v);
    }
    t.rows.push_back(std::move(row));
  }
  Require(!t.header.empty(), ErrorCode::kParseError, "empty CSV");
  return t;
}

Table ReadCsv(const std::string& path) {
  std::ifstream in(path);
  Require(static_cast<bool>(in), ErrorCode::kIoError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseCsv(ss.str());
}

Rows RegressionRows(const Table& table,
                    std::vector<std::string>* feature_names) {
  const int y = table.Column("y");
  Require(y >= 0, ErrorCode::kParseError, "CSV has no 'y' column");
  std::vector<int> order;
  for (int c = 0; c < static_cast<int>(table.header.size()); ++c) {
    if (c != y) order.push_back(c);
  }
  order.push_back(y);
  if (feature_names) {
    feature_names->clear();
    for (size_t i = 0; i + 1 < order.size(); ++i) {
      feature_names->push_back(table.header[order[i]]);
    }
  }
  Rows rows;
  for (size_t r = 0; r < table.rows.size(); ++r) {
    std::vector<double> v;
    for (int c : order) v.push_back(table.rows[r][c]);
    rows[static_cast<PartyId>(r + 1)] = std::move(v);
  }
  return rows;
}

}  // namespace pdakit::analytics
