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

// Acceptance suite: one PASS/FAIL line per criterion. Run with no arguments
// for all criteria, or pass criterion numbers to run a subset. Exit status
// is non-zero when any selected criterion fails.

#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pdakit/analytics.h"
#include "pdakit/arith.h"
#include "pdakit/attacks.h"
#include "pdakit/error.h"
#include "pdakit/io.h"
#include "pdakit/models.h"
#include "pdakit/numtheory.h"
#include "pdakit/pda.h"

namespace pdakit::acceptance {
namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

PartySet Range(int lo, int hi) {
  PartySet out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

PartySet RandomSubset(Drbg& rng, int n, size_t size) {
  PartySet all = Range(1, n);
  for (size_t i = 0; i < size; ++i) {
    const size_t j = i + rng.NextU64() % (all.size() - i);
    std::swap(all[i], all[j]);
  }
  all.resize(size);
  std::sort(all.begin(), all.end());
  return all;
}

std::string Fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// Least-squares slope of log(y) against log(x).
double LogLogSlope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0, my = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= x.size();
  my /= y.size();
  double num = 0, den = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    num += (std::log(x[i]) - mx) * (std::log(y[i]) - my);
    den += (std::log(x[i]) - mx) * (std::log(x[i]) - mx);
  }
  return num / den;
}

struct ArithDeployment {
  arith::Params params;
  std::map<PartyId, arith::EncKey> keys;
};

ArithDeployment DeployArith(size_t kappa, int n, Drbg& rng) {
  ArithDeployment d;
  d.params = arith::Setup(kappa, n, 3, rng);
  netsim::Bus bus(Range(1, n));
  const auto masters = arith::Initialize(d.params, bus, rng);
  d.keys = arith::Keygen(d.params, masters, bus, rng);
  return d;
}

// 1. Arithmetic-protocol correctness.
Verdict Criterion1() {
  const auto start = Clock::now();
  size_t checks = 0, failures = 0;
  for (size_t kappa : {64, 128}) {
    for (int n = 4; n <= 8; ++n) {
      Drbg rng(1000 * kappa + n);
      const ArithDeployment d = DeployArith(kappa, n, rng);
      const BigInt& p = d.params.p;
      for (int v = 0; v < 200; ++v) {
        const size_t size = 3 + v % (n - 2);  // cycles through 3..n
        const PartySet group = RandomSubset(rng, n, size);
        std::vector<arith::Ciphertext> add, mul;
        BigInt sum = 0, prod = 1;
        for (PartyId i : group) {
          const BigInt x = rng.Below(p);
          const BigInt y = rng.Range(1, p);
          add.push_back(arith::EncryptAdd(d.params, x, d.keys.at(i), group));
          mul.push_back(arith::EncryptMul(d.params, y, d.keys.at(i), group));
          sum = nt::Mod(sum + x, p);
          prod = nt::ModMul(prod, y, p);
        }
        checks += 2;
        if (arith::Decrypt(d.params, add, group) != sum) ++failures;
        if (arith::Decrypt(d.params, mul, group) != prod) ++failures;
      }
    }
  }
  const double secs = Seconds(start);
  return {failures == 0 && secs < 60,
          std::to_string(checks - failures) + "/" + std::to_string(checks) +
              " sums and products exact over kappa {64,128}, n 4..8, " +
              Fmt("%.1f s (limit 60 s)", secs)};
}

pda::Query RandomQuery(Drbg& rng, const PartySet& members, int64_t start) {
  pda::Query q;
  q.participants = members;
  const size_t m = 1 + rng.NextU64() % 6;
  q.window = {start, static_cast<int64_t>(m)};
  for (size_t k = 0; k < m; ++k) {
    q.coeffs.push_back(rng.Range(-1000, 1001));
    for (PartyId i : members) {
      const uint64_t e = rng.NextU64() % 4;
      if (e) q.exponents[i][static_cast<int>(k)] = e;
    }
  }
  return q;
}

// 2. PDA end to end.
Verdict Criterion2() {
  const auto start = Clock::now();
  size_t total = 0, exact = 0;
  for (size_t kappa : {32, 64}) {
    for (int n = 4; n <= 8; ++n) {
      Drbg rng(2000 * kappa + n);
      const pda::Deployment dep = pda::Deploy(kappa, n, 3, rng);
      pda::SlotRegistry registry;
      int64_t slot = 0;
      for (int inst = 0; inst < 10; ++inst) {
        const size_t size = 3 + rng.NextU64() % (n - 2);
        const pda::Query q = RandomQuery(rng, RandomSubset(rng, n, size), slot);
        slot += q.window.len;
        std::map<PartyId, std::vector<BigInt>> data;
        for (PartyId i : q.participants) {
          for (size_t k = 0; k < q.terms(); ++k) {
            data[i].push_back(rng.Below(dep.params.n_cap));
          }
        }
        ++total;
        if (pda::RunAggregation(dep, q, data, registry, rng).value ==
            pda::EvaluatePlain(q, data, dep.params.n_cap)) {
          ++exact;
        }
      }
    }
  }
  const double secs = Seconds(start);
  return {exact == total && total == 100 && secs < 120,
          std::to_string(exact) + "/" + std::to_string(total) +
              " random polynomials (m 1..6, degree <= 3) exact over kappa "
              "{32,64}, n 4..8, " +
              Fmt("%.1f s (limit 120 s)", secs)};
}

// 3. Mask cancellation in both schemes.
Verdict Criterion3() {
  size_t sets = 0, groups = 0, bad = 0;
  for (size_t kappa : {64, 128}) {
    for (int n = 4; n <= 8; ++n) {
      Drbg rng(3000 * kappa + n);
      const ArithDeployment d = DeployArith(kappa, n, rng);
      const BigInt m = d.params.KeyModulus();
      ++sets;
      for (int g = 0; g < 50; ++g) {
        const PartySet group = RandomSubset(rng, n, 3 + rng.NextU64() % (n - 2));
        const auto w = nt::ComputeLagrangeWeights(group);
        BigInt acc = 0;
        for (PartyId i : group) {
          acc += d.keys.at(i).shares.at(static_cast<int>(group.size())) * w.weight(i);
        }
        ++groups;
        if (nt::Mod(acc, m) != 0) ++bad;
      }
    }
  }
  for (size_t kappa : {32, 64}) {
    for (int n = 4; n <= 8; ++n) {
      Drbg rng(3100 * kappa + n);
      const pda::Deployment dep = pda::Deploy(kappa, n, 3, rng);
      ++sets;
      for (int g = 0; g < 50; ++g) {
        const PartySet group = RandomSubset(rng, n, 3 + rng.NextU64() % (n - 2));
        const int64_t t = static_cast<int64_t>(rng.NextU64() % 1000000);
        const BigInt hash = pda::HashSlot(dep.params, t);
        BigInt prod = 1;
        for (PartyId i : group) {
          prod = nt::ModMul(
              prod,
              nt::ModPow(hash, pda::MaskExponent(dep.params, dep.keys.at(i), group),
                         dep.params.n_cap),
              dep.params.n_cap);
        }
        ++groups;
        if (prod != 1) ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(groups - bad) + "/" + std::to_string(groups) +
                        " groups cancel exactly across " + std::to_string(sets) +
                        " key sets (arith: sum R*lambda = 0 mod p(p-1); pda: "
                        "prod H(t)^(q*lambda) = 1 mod N)"};
}

// 4. Key storage grows linearly in n.
Verdict Criterion4() {
  std::vector<double> ns, sizes;
  for (int n : {8, 16, 32, 64}) {
    Drbg rng(4000 + n);
    const pda::Deployment dep = pda::Deploy(32, n, 3, rng);
    double total = 0;
    for (const auto& [id, key] : dep.keys) {
      total += static_cast<double>(io::ToJson(key).dump(2).size());
    }
    ns.push_back(n);
    sizes.push_back(total / dep.keys.size());
  }
  Eigen::MatrixXd a(ns.size(), 2);
  Eigen::VectorXd b(ns.size());
  for (size_t i = 0; i < ns.size(); ++i) {
    a(i, 0) = 1;
    a(i, 1) = ns[i];
    b(i) = sizes[i];
  }
  const Eigen::VectorXd fit = a.colPivHouseholderQr().solve(b);
  double worst = 0;
  std::ostringstream os;
  for (size_t i = 0; i < ns.size(); ++i) {
    const double pred = fit(0) + fit(1) * ns[i];
    worst = std::max(worst, std::abs(pred - sizes[i]) / sizes[i]);
    os << (i ? ", " : "") << "n=" << ns[i] << ":" << Fmt("%.0f B", sizes[i]);
  }
  return {worst < 0.05, "mean key file size " + os.str() + "; linear fit " +
                            Fmt("%.1f", fit(1)) + " B/user, max relative residual " +
                            Fmt("%.2f%% (limit 5%%)", 100 * worst)};
}

// 5. Round counts and KeyGen traffic growth.
Verdict Criterion5() {
  std::ostringstream os;
  bool pass = true;

  {
    Drbg rng(5001);
    const auto dep = models::DeployAuthority(arith::Setup(64, 5, 3, rng), rng);
    models::AggPolynomial poly{
        {models::Term{BigInt(2), {{1, 1}, {2, 1}}}, models::Term{BigInt(3), {{4, 2}}},
         models::Term{BigInt(1), {{1, 1}}}},
        {1, 2, 4}};
    models::Data data;
    for (PartyId i : poly.participants) data[i] = rng.Below(dep.params.p);
    const auto out = models::AuthorityAggregate(dep, poly, data);
    std::set<int> rounds;
    for (int r : out.transcript.Rounds()) {
      if (r > 0) rounds.insert(r);
    }
    pass = pass && rounds.size() == 1;
    os << "arith aggregation rounds after declaration=" << rounds.size();
  }
  {
    Drbg rng(5002);
    const pda::Deployment dep = pda::Deploy(64, 6, 3, rng);
    pda::SlotRegistry registry;
    const pda::Query q = RandomQuery(rng, {1, 2, 3, 5}, 0);
    std::map<PartyId, std::vector<BigInt>> data;
    for (PartyId i : q.participants) {
      data[i] = std::vector<BigInt>(q.terms(), BigInt(7));
    }
    const auto res = pda::RunAggregation(dep, q, data, registry, rng);
    std::set<int> rounds;
    for (int r : res.transcript.Rounds()) {
      if (r > 0) rounds.insert(r);
    }
    pass = pass && rounds.size() == 2;
    os << ", pda rounds after declaration=" << rounds.size();
  }

  // Mean bytes sent per party across the whole KeyGen ceremony.
  const std::vector<int> ns = {4, 8, 16, 32};
  std::vector<double> xs, per_party;
  for (int n : ns) {
    Drbg rng(5100 + n);
    const pda::Deployment dep = pda::Deploy(64, n, 3, rng);
    double sent = 0;
    for (const auto& bc : dep.keygen_bytes) sent += static_cast<double>(bc.sent);
    xs.push_back(n);
    per_party.push_back(sent / n);
  }
  const double slope = LogLogSlope(xs, per_party);
  const bool slope_ok = slope >= 1.8 && slope <= 2.2;
  pass = pass && slope_ok;
  os << "; keygen bytes/party";
  for (size_t i = 0; i < ns.size(); ++i) {
    os << " n=" << ns[i] << ":" << Fmt("%.0f", per_party[i]);
  }
  os << "; fitted exponent " << Fmt("%.3f", slope) << " (want [1.8, 2.2])";
  os << "; doubling exponents";
  for (size_t i = 1; i < ns.size(); ++i) {
    os << " " << ns[i - 1] << "->" << ns[i] << ":"
       << Fmt("%.3f", std::log2(per_party[i] / per_party[i - 1]));
  }
  return {pass, os.str()};
}

bool ValidWitness(const std::vector<BigInt>& w, int d,
                  const std::vector<std::pair<PartyId, BigInt>>& points,
                  const BigInt& m) {
  if (static_cast<int>(w.size()) != d) return false;
  for (const auto& [id, y] : points) {
    if (nt::EvalZeroConstPoly(w, id, m) != y) return false;
  }
  return nt::EvalZeroConstPoly(w, 0, m) == 0;
}

// 6. Collusion threshold.
Verdict Criterion6() {
  size_t recovered = 0, recover_trials = 0, undetermined = 0, undet_trials = 0;
  for (int trial = 0; trial < 50; ++trial) {
    Drbg rng(6000 + trial);
    const pda::Deployment dep = pda::Deploy(16, 8, 3, rng);
    const BigInt& m = dep.params.n_tilde;
    for (int d = 2; d <= 6; ++d) {
      for (int s = 1; s <= 7; ++s) {
        const PartySet pick = RandomSubset(rng, 8, s + 1);
        const PartyId victim = pick.back();
        PartySet coalition(pick.begin(), pick.end() - 1);
        std::vector<std::pair<PartyId, BigInt>> points;
        for (PartyId id : coalition) {
          points.emplace_back(id, dep.keys.at(id).evaluations.at(d));
        }
        const auto res = attacks::CollusionAttack(points, d, victim, m);
        const BigInt truth = dep.keys.at(victim).evaluations.at(d);
        if (s >= d) {
          ++recover_trials;
          if (res.determined && res.victim_value == truth) ++recovered;
        } else {
          ++undet_trials;
          if (!res.determined &&
              res.witness_values[0] != res.witness_values[1] &&
              ValidWitness(res.witnesses[0], d, points, m) &&
              ValidWitness(res.witnesses[1], d, points, m)) {
            ++undetermined;
          }
        }
      }
    }
  }
  return {recovered == recover_trials && undetermined == undet_trials,
          "s >= d: " + std::to_string(recovered) + "/" +
              std::to_string(recover_trials) + " victim keys recovered; s < d: " +
              std::to_string(undetermined) + "/" + std::to_string(undet_trials) +
              " Undetermined with two valid witnesses (d 2..6, s 1..7, 50 "
              "trials each)"};
}

// 7. Rushing attack.
Verdict Criterion7() {
  Drbg seed(7000);
  const pda::Params p = pda::Setup(64, 5, 3, seed);
  const PartySet ring = Range(1, 5);
  int plain_hits = 0, hardened_misses = 0;
  for (uint64_t s = 0; s < 100; ++s) {
    Drbg a(7100 + s), b(7100 + s);
    if (attacks::RushingAttackDemo(p.g_tilde, p.n_tilde, ring, 1 + s % 5, 0, a).success) {
      ++plain_hits;
    }
    if (!attacks::RushingAttackDemo(p.g_tilde, p.n_tilde, ring, 1 + s % 5, 1, b).success) {
      ++hardened_misses;
    }
  }
  return {plain_hits == 100 && hardened_misses == 100,
          "base ring predicted " + std::to_string(plain_hits) +
              "/100 victim masks; hardened k=1 mismatched " +
              std::to_string(hardened_misses) + "/100"};
}

// 8. Regression fidelity on a 200-row public dataset.
Verdict Criterion8() {
  const auto start = Clock::now();
  const int f = 20;
  const analytics::Table table =
      analytics::ReadCsv(PDAKIT_SOURCE_DIR "/tests/data/diabetes_200.csv");
  std::vector<std::string> names;
  const analytics::Rows rows = analytics::RegressionRows(table, &names);
  const int users = static_cast<int>(rows.size());
  const int d = static_cast<int>(names.size());

  // Plaintext reference: double-precision least squares with intercept.
  Eigen::MatrixXd x(users, d + 1);
  Eigen::VectorXd y(users);
  for (int i = 0; i < users; ++i) {
    const auto& r = rows.at(i + 1);
    x(i, 0) = 1;
    for (int c = 0; c < d; ++c) x(i, c + 1) = r[c];
    y(i) = r[d];
  }
  const Eigen::VectorXd ref = x.colPivHouseholderQr().solve(y);

  Drbg rng(8000);
  pda::DeployOptions opts;
  opts.degrees = {users - 1};
  opts.max_terms = static_cast<size_t>(users);
  const pda::Deployment dep = pda::Deploy(64, users, 3, rng, opts);
  const auto plan = analytics::PlanLinearRegression(Range(1, users), d, f, 3);
  pda::SlotRegistry registry;
  const auto run = analytics::ExecutePlan(dep, plan, rows, registry, rng);
  const auto coef = analytics::FinishRegression(plan, run.sums);

  const double tol = std::ldexp(1.0, -f + 3);
  double worst_scaled = 0, worst_abs = 0;
  for (int i = 0; i <= d; ++i) {
    const double diff = std::abs(coef[i].get_d() - ref(i));
    worst_abs = std::max(worst_abs, diff);
    worst_scaled = std::max(worst_scaled, diff / std::max(1.0, std::abs(ref(i))));
  }
  return {worst_scaled <= tol,
          std::to_string(users) + " users, " + std::to_string(d) + " features, " +
              std::to_string(plan.queries.size()) + " queries; max |diff|/max(1,|ref|) " +
              Fmt("%.3g", worst_scaled) + " vs 2^-17 = " + Fmt("%.3g", tol) +
              "; max absolute |diff| " + Fmt("%.3g", worst_abs) + "; " +
              Fmt("%.1f s", Seconds(start))};
}

// 9. Window discipline.
Verdict Criterion9() {
  Drbg rng(9000);
  const pda::Deployment dep = pda::Deploy(32, 5, 3, rng);
  const pda::Window consumed{10, 5};  // slots 10..14
  size_t rejected_silent = 0, expected_rejections = 0, accepted = 0,
         expected_accepts = 0;
  for (int64_t start = 3; start <= 17; ++start) {
    for (int64_t len = 1; len <= 6; ++len) {
      pda::SlotRegistry registry;
      registry.Reserve(consumed);
      pda::Query q;
      q.participants = {1, 2, 3, 4};
      q.window = {start, len};
      std::map<PartyId, std::vector<BigInt>> data;
      for (int64_t k = 0; k < len; ++k) {
        q.coeffs.push_back(1);
        for (PartyId i : q.participants) q.exponents[i][static_cast<int>(k)] = 1;
      }
      for (PartyId i : q.participants) {
        data[i] = std::vector<BigInt>(static_cast<size_t>(len), BigInt(3));
      }
      const bool overlap = q.window.Overlaps(consumed);
      size_t messages = 0;
      bool threw_reuse = false;
      try {
        pda::RunAggregation(dep, q, data, registry, rng,
                            {[&](const netsim::Message&) { ++messages; }});
      } catch (const Error& e) {
        threw_reuse = e.code() == ErrorCode::kSlotReused;
      }
      if (overlap) {
        ++expected_rejections;
        if (threw_reuse && messages == 0 && registry.consumed().size() == 1) {
          ++rejected_silent;
        }
      } else {
        ++expected_accepts;
        if (!threw_reuse && messages > 0) ++accepted;
      }
    }
  }
  return {rejected_silent == expected_rejections && accepted == expected_accepts,
          std::to_string(rejected_silent) + "/" +
              std::to_string(expected_rejections) +
              " overlapping windows rejected with zero messages; " +
              std::to_string(accepted) + "/" + std::to_string(expected_accepts) +
              " disjoint windows accepted"};
}

int Main(int argc, char** argv) {
  const std::vector<std::function<Verdict()>> criteria = {
      Criterion1, Criterion2, Criterion3, Criterion4, Criterion5,
      Criterion6, Criterion7, Criterion8, Criterion9};
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!selected.empty() && !selected.count(id)) continue;
    Verdict v;
    try {
      v = criteria[i]();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << id << ": "
              << v.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace pdakit::acceptance

int main(int argc, char** argv) { return pdakit::acceptance::Main(argc, argv); }
