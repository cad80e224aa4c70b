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

// Command-line front end: parameter and key ceremonies, aggregation over
// files, analytics demos, attack demos and microbenchmarks. Every command
// prints one JSON report on stdout; failures print {"error", "detail"} and
// exit with status 1.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "pdakit/analytics.h"
#include "pdakit/attacks.h"
#include "pdakit/error.h"
#include "pdakit/io.h"
#include "pdakit/numtheory.h"
#include "pdakit/pda.h"

namespace pdakit {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

struct Config {
  std::optional<uint64_t> seed;
  size_t kappa = 64;
  int n = 5;
  int theta_min = 3;
  int hardened_k = 0;
  bool strict_safe = false;
  size_t max_terms = 64;
  std::string params;
  std::string keys;
  std::string query;
  std::string data;
  std::string out;
  std::string registry;
  std::string transcript;
  std::string column;
  int frac_bits = 20;
  double ridge = 0;
  int rows = 0;
  int degree = 3;
  int coalition = 2;
  int victim = 0;
  bool honest = false;
  int iterations = 100;
};

uint64_t ResolveSeed(const Config& cfg, bool mandatory) {
  if (cfg.seed) return *cfg.seed;
  if (const char* env = std::getenv("PDA_KIT_SEED")) {
    try {
      size_t used = 0;
      const uint64_t v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    Fail(ErrorCode::kInvalidArgument, "PDA_KIT_SEED is not an unsigned integer");
  }
  Require(!mandatory, ErrorCode::kInvalidArgument,
          "this command needs --seed or PDA_KIT_SEED");
  std::random_device rd;
  return (static_cast<uint64_t>(rd()) << 32) | rd();
}

void Emit(const Json& report) { std::cout << report.dump(2) << std::endl; }

Json Fraction(const mpq_class& q) {
  return Json{{"value", q.get_d()}, {"exact", q.get_str()}};
}

std::string KeyPath(const std::string& dir, PartyId id) {
  return (fs::path(dir) / ("user_" + std::to_string(id) + ".json")).string();
}

pda::Deployment LoadDeployment(const Config& cfg) {
  Require(!cfg.params.empty() && !cfg.keys.empty(), ErrorCode::kInvalidArgument,
          "--params and --keys are required");
  pda::Deployment dep;
  dep.params = io::PdaParamsFromJson(io::LoadJson(cfg.params));
  const Json agg = io::LoadJson((fs::path(cfg.keys) / "aggregator.json").string());
  dep.agg = io::PaillierKeyFromJson(agg.at("paillier"));
  dep.max_terms = agg.at("max_terms").get<size_t>();
  for (PartyId i = 1; i <= dep.params.n; ++i) {
    const std::string path = KeyPath(cfg.keys, i);
    if (fs::exists(path)) dep.keys[i] = io::PdaKeyFromJson(io::LoadJson(path));
  }
  return dep;
}

// ---- gen-params / keygen / aggregate ----

void GenParams(const Config& cfg) {
  Require(!cfg.out.empty(), ErrorCode::kInvalidArgument, "--out is required");
  Drbg rng(ResolveSeed(cfg, false));
  const pda::Params p =
      pda::Setup(cfg.kappa, cfg.n, cfg.theta_min, rng,
                 {.strict_safe = cfg.strict_safe, .hardened_k = cfg.hardened_k});
  io::SaveJson(cfg.out, io::ToJson(p));
  Emit({{"command", "gen-params"},
        {"out", cfg.out},
        {"n", p.n},
        {"theta_min", p.theta_min},
        {"n_cap_bits", BitLength(p.n_cap)},
        {"n_tilde_bits", BitLength(p.n_tilde)}});
}

void Keygen(const Config& cfg) {
  Require(!cfg.params.empty() && !cfg.keys.empty(), ErrorCode::kInvalidArgument,
          "--params and --keys are required");
  const pda::Params params = io::PdaParamsFromJson(io::LoadJson(cfg.params));
  Drbg rng(ResolveSeed(cfg, false));
  pda::DeployOptions opts;
  opts.max_terms = cfg.max_terms;
  const pda::Deployment dep = pda::DeployWithParams(params, rng, opts);
  fs::create_directories(cfg.keys);
  for (const auto& [id, key] : dep.keys) {
    io::SaveJson(KeyPath(cfg.keys, id), io::ToJson(key));
  }
  io::SaveJson((fs::path(cfg.keys) / "aggregator.json").string(),
               {{"paillier", io::ToJson(dep.agg)}, {"max_terms", dep.max_terms}});
  io::WriteFile((fs::path(cfg.keys) / "keygen_transcript.jsonl").string(),
                dep.keygen_transcript.ToJsonl());
  size_t sent = 0;
  for (const auto& bc : dep.keygen_bytes) sent += bc.sent;
  Emit({{"command", "keygen"},
        {"keys", cfg.keys},
        {"users", dep.keys.size()},
        {"degrees_per_user", dep.keys.begin()->second.evaluations.size()},
        {"rounds", dep.keygen_transcript.Rounds().size()},
        {"messages", dep.keygen_transcript.size()},
        {"bytes_sent", sent},
        {"aggregator_modulus_bits", BitLength(dep.agg.pub.n_a)}});
}

void Aggregate(const Config& cfg) {
  Require(!cfg.query.empty() && !cfg.data.empty(), ErrorCode::kInvalidArgument,
          "--query and --data are required");
  const pda::Deployment dep = LoadDeployment(cfg);
  const pda::Query q = io::QueryFromJson(io::LoadJson(cfg.query));
  auto data = io::ParseTermData(io::ReadFile(cfg.data));
  for (auto& [id, row] : data) {
    for (auto& v : row) v = nt::Mod(v, dep.params.n_cap);
  }
  const std::string reg_path = cfg.registry.empty()
                                   ? (fs::path(cfg.keys) / "registry.json").string()
                                   : cfg.registry;
  pda::SlotRegistry registry = pda::SlotRegistry::Load(reg_path);
  Drbg rng(ResolveSeed(cfg, false));
  const auto res = pda::RunAggregation(dep, q, data, registry, rng);
  registry.Save(reg_path);
  Json report{{"command", "aggregate"},
              {"value", res.value.get_str(10)},
              {"plaintext", pda::EvaluatePlain(q, data, dep.params.n_cap).get_str(10)},
              {"rounds", res.transcript.Rounds()},
              {"messages", res.transcript.size()},
              {"registry", reg_path}};
  if (!cfg.transcript.empty()) {
    io::WriteFile(cfg.transcript, res.transcript.ToJsonl());
    report["transcript"] = cfg.transcript;
  } else {
    Json lines = Json::array();
    for (const auto& m : res.transcript.messages()) {
      lines.push_back({{"round", m.round}, {"from", m.from}, {"kind", m.kind},
                       {"tag", m.tag}, {"body", m.body}});
    }
    report["transcript"] = lines;
  }
  Emit(report);
}

// ---- demo ----

pda::Deployment DemoDeployment(const Config& cfg, int users, Drbg& rng) {
  pda::DeployOptions opts;
  opts.degrees = {users - 1};
  opts.max_terms = static_cast<size_t>(users);
  return pda::Deploy(cfg.kappa, users, cfg.theta_min, rng, opts);
}

void DemoStats(const Config& cfg) {
  Require(!cfg.data.empty(), ErrorCode::kInvalidArgument, "--data is required");
  const analytics::Table table = analytics::ReadCsv(cfg.data);
  int col = cfg.column.empty() ? table.Column("x") : table.Column(cfg.column);
  if (col < 0 && cfg.column.empty()) col = 0;
  Require(col >= 0, ErrorCode::kParseError, "no column '" + cfg.column + "'");
  analytics::Rows rows;
  const int users = cfg.rows > 0 ? std::min<int>(cfg.rows, table.rows.size())
                                 : static_cast<int>(table.rows.size());
  PartySet p;
  for (int i = 0; i < users; ++i) {
    rows[i + 1] = {table.rows[i][col]};
    p.push_back(i + 1);
  }
  Drbg rng(ResolveSeed(cfg, true));
  const pda::Deployment dep = DemoDeployment(cfg, users, rng);
  const auto plan = analytics::PlanMeanVariance(p, cfg.frac_bits, cfg.theta_min);
  pda::SlotRegistry registry;
  const auto run = analytics::ExecutePlan(dep, plan, rows, registry, rng);
  const auto mv = analytics::FinishMeanVariance(plan, run.sums);
  const auto plain = analytics::FinishMeanVariance(plan, analytics::PlainSums(plan, rows));
  Emit({{"command", "demo stats"},
        {"column", table.header[col]},
        {"users", users},
        {"queries", plan.queries.size()},
        {"mean", Fraction(mv.mean)},
        {"variance", Fraction(mv.variance)},
        {"plaintext", {{"mean", Fraction(plain.mean)}, {"variance", Fraction(plain.variance)}}},
        {"messages", run.messages},
        {"bytes", run.bytes}});
}

void DemoRegress(const Config& cfg) {
  Require(!cfg.data.empty(), ErrorCode::kInvalidArgument, "--data is required");
  analytics::Table table = analytics::ReadCsv(cfg.data);
  if (cfg.rows > 0 && static_cast<size_t>(cfg.rows) < table.rows.size()) {
    table.rows.resize(cfg.rows);
  }
  std::vector<std::string> names;
  const analytics::Rows rows = analytics::RegressionRows(table, &names);
  const int users = static_cast<int>(rows.size());
  PartySet p;
  for (int i = 1; i <= users; ++i) p.push_back(i);
  Drbg rng(ResolveSeed(cfg, true));
  const pda::Deployment dep = DemoDeployment(cfg, users, rng);
  const auto plan = analytics::PlanLinearRegression(
      p, static_cast<int>(names.size()), cfg.frac_bits, cfg.theta_min);
  pda::SlotRegistry registry;
  const auto t0 = std::chrono::steady_clock::now();
  const auto run = analytics::ExecutePlan(dep, plan, rows, registry, rng);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const mpq_class ridge(cfg.ridge);
  const auto coef = analytics::FinishRegression(plan, run.sums, ridge);
  const auto plain =
      analytics::FinishRegression(plan, analytics::PlainSums(plan, rows), ridge);
  Json out = Json::array();
  double max_dev = 0;
  for (size_t i = 0; i < coef.size(); ++i) {
    const double dev = std::abs(mpq_class(coef[i] - plain[i]).get_d());
    max_dev = std::max(max_dev, dev);
    out.push_back({{"name", i == 0 ? std::string("intercept") : names[i - 1]},
                   {"pda", coef[i].get_d()},
                   {"plaintext", plain[i].get_d()},
                   {"abs_diff", dev}});
  }
  Emit({{"command", "demo regress"},
        {"users", users},
        {"features", names.size()},
        {"frac_bits", cfg.frac_bits},
        {"ridge", cfg.ridge},
        {"queries", plan.queries.size()},
        {"coefficients", out},
        {"max_abs_diff", max_dev},
        {"messages", run.messages},
        {"bytes", run.bytes},
        {"seconds", secs}});
}

// ---- attack ----

void AttackCollusion(const Config& cfg) {
  Drbg rng(ResolveSeed(cfg, true));
  const int n = std::max(cfg.n, cfg.coalition + 1);
  Require(cfg.degree >= 2 && cfg.degree <= n - 1, ErrorCode::kInvalidArgument,
          "--d must lie in [2, n-1]");
  const pda::Deployment dep = pda::Deploy(cfg.kappa, n, cfg.theta_min, rng);
  PartySet coalition;
  for (int i = 1; i <= cfg.coalition; ++i) coalition.push_back(i);
  const PartyId victim = cfg.victim > 0 ? cfg.victim : n;
  Require(victim > cfg.coalition && victim <= n, ErrorCode::kInvalidArgument,
          "victim must be outside the coalition");
  const auto res = attacks::CollusionAttack(dep.keys, coalition, cfg.degree,
                                            victim, dep.params.n_tilde);
  const BigInt truth = dep.keys.at(victim).evaluations.at(cfg.degree);
  Json report{{"command", "attack collusion"},
              {"degree", cfg.degree},
              {"coalition", coalition},
              {"victim", victim}};
  if (res.determined) {
    report["status"] = "recovered";
    report["recovered"] = ToHex(res.victim_value);
    report["matches_victim_key"] = res.victim_value == truth;
  } else {
    report["status"] = "Undetermined";
    report["witness_values"] = {ToHex(res.witness_values[0]),
                                ToHex(res.witness_values[1])};
  }
  Emit(report);
}

void AttackRushing(const Config& cfg) {
  Drbg rng(ResolveSeed(cfg, true));
  const pda::Params p = pda::Setup(cfg.kappa, cfg.n, cfg.theta_min, rng);
  PartySet ring;
  for (int i = 1; i <= cfg.n; ++i) ring.push_back(i);
  const PartyId victim = cfg.victim > 0 ? cfg.victim : 2;
  const auto out = attacks::RushingAttackDemo(p.g_tilde, p.n_tilde, ring, victim,
                                              cfg.hardened_k, rng, cfg.honest);
  Emit({{"command", "attack rushing"},
        {"attacker", out.attacker},
        {"victim", out.victim},
        {"hardened_k", cfg.hardened_k},
        {"honest", cfg.honest},
        {"predicted", ToHex(out.predicted)},
        {"actual", ToHex(out.actual)},
        {"success", out.success}});
}

// ---- bench ----

struct Timing {
  std::vector<double> ms;

  Json Row(const std::string& name, std::optional<double> reference) const {
    std::vector<double> s = ms;
    std::sort(s.begin(), s.end());
    double mean = 0;
    for (double v : s) mean += v;
    mean /= s.size();
    double var = 0;
    for (double v : s) var += (v - mean) * (v - mean);
    const double sd = s.size() > 1 ? std::sqrt(var / (s.size() - 1)) : 0;
    Json row{{"algorithm", name},     {"iterations", s.size()},
             {"min_ms", s.front()},   {"max_ms", s.back()},
             {"mean_ms", mean},       {"median_ms", s[s.size() / 2]},
             {"std_ms", sd}};
    row["reference_mean_ms"] = reference ? Json(*reference) : Json(nullptr);
    return row;
  }
};

template <typename F>
Timing Measure(int iterations, F&& f) {
  Timing t;
  for (int i = 0; i < iterations; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f(i);
    t.ms.push_back(std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count());
  }
  return t;
}

void Bench(const Config& cfg) {
  Drbg rng(ResolveSeed(cfg, true));
  const int iters = std::max(cfg.iterations, 1);
  Json rows = Json::array();

  pda::Params params;
  rows.push_back(Measure(1, [&](int) {
                   params = pda::Setup(cfg.kappa, cfg.n, cfg.theta_min, rng);
                 }).Row("setup", std::nullopt));
  pda::Deployment dep;
  rows.push_back(Measure(1, [&](int) {
                   dep = pda::DeployWithParams(params, rng);
                 }).Row("keygen_ceremony", std::nullopt));

  // One product term over every user, as in the reference microbenchmark.
  PartySet all;
  for (int i = 1; i <= cfg.n; ++i) all.push_back(i);
  const BigInt& n_cap = dep.params.n_cap;
  Drbg data_rng = rng.Fork("bench.data");
  const BigInt x = data_rng.Below(n_cap);
  const auto& pub = dep.agg.pub;

  rows.push_back(Measure(iters, [&](int i) {
                   pda::EncodeOrdinary(dep.params, x, 1, dep.keys.at(3), all, i);
                 }).Row("encode_ordinary", 0.129));
  paillier::Ciphertext e2;
  rows.push_back(Measure(iters, [&](int i) {
                   e2 = pda::EncodeUser2(dep.params, x, 1, dep.keys.at(2), all, i,
                                         pub, data_rng);
                 }).Row("encode_user2", 9.458));
  std::vector<BigInt> others;
  for (PartyId i : all) {
    if (i != 2) others.push_back(pda::EncodeOrdinary(dep.params, x, 1, dep.keys.at(i), all, 0));
  }
  std::vector<paillier::Ciphertext> blinded;
  rows.push_back(Measure(iters, [&](int) {
                   pda::EncodeOrdinary(dep.params, x, 1, dep.keys.at(1), all, 0);
                   blinded = pda::EncodeUser1(dep.params, {others}, {e2}, {1}, pub,
                                              data_rng);
                 }).Row("encode_user1", 9.846));
  rows.push_back(Measure(iters, [&](int) {
                   pda::Aggregate(blinded, dep.agg, n_cap);
                 }).Row("aggregate", 0.28));

  // Byte counts are deterministic, unlike the timings above.
  pda::Query q;
  q.participants = all;
  q.coeffs = {1};
  q.window = {1000000, 1};
  std::map<PartyId, std::vector<BigInt>> data;
  for (PartyId i : all) {
    q.exponents[i][0] = 1;
    data[i] = {data_rng.Below(n_cap)};
  }
  pda::SlotRegistry registry;
  const auto agg = pda::RunAggregation(dep, q, data, registry, rng);
  Json keygen_bytes = Json::array();
  for (PartyId i : all) {
    size_t sent = 0;
    for (const auto& bc : dep.keygen_bytes) {
      if (bc.party == i) sent += bc.sent;
    }
    keygen_bytes.push_back({{"party", i}, {"sent", sent}});
  }
  size_t agg_bytes = 0;
  for (const auto& bc : agg.bytes) agg_bytes += bc.sent;
  Emit({{"command", "bench"},
        {"kappa", cfg.kappa},
        {"n", cfg.n},
        {"n_cap_bits", BitLength(n_cap)},
        {"aggregator_modulus_bits", BitLength(pub.n_a)},
        {"timings", rows},
        {"note", "reference_mean_ms values come from a 2.8 GHz i3 run at kappa=512 "
                 "and are informational only"},
        {"bytes", {{"keygen_sent_per_party", keygen_bytes},
                   {"aggregation_sent_total", agg_bytes},
                   {"aggregation_rounds", agg.transcript.Rounds().size()}}}});
}

void AddSeed(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--seed", cfg.seed, "DRBG seed (falls back to PDA_KIT_SEED)");
}

void AddShape(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--kappa", cfg.kappa, "security parameter in bits");
  cmd->add_option("--n", cfg.n, "number of users");
  cmd->add_option("--theta-min,--n-min", cfg.theta_min, "minimum group size");
}

int Main(int argc, char** argv) {
  CLI::App app{"pdakit: privacy-preserving polynomial aggregation toolkit"};
  app.require_subcommand(1);
  Config cfg;

  auto* gen = app.add_subcommand("gen-params", "generate public parameters");
  AddShape(gen, cfg);
  AddSeed(gen, cfg);
  gen->add_option("--out", cfg.out, "output params JSON")->required();
  gen->add_option("--hardened-k", cfg.hardened_k, "relay rounds in the ring exchange");
  gen->add_flag("--strict-safe-primes", cfg.strict_safe, "require safe-prime N factors");

  auto* keygen = app.add_subcommand("keygen", "run the key ceremony");
  AddSeed(keygen, cfg);
  keygen->add_option("--params", cfg.params)->required();
  keygen->add_option("--keys", cfg.keys, "output key directory")->required();
  keygen->add_option("--max-terms", cfg.max_terms, "largest query the aggregator accepts");

  auto* aggregate = app.add_subcommand("aggregate", "evaluate a query end to end");
  AddSeed(aggregate, cfg);
  aggregate->add_option("--params", cfg.params)->required();
  aggregate->add_option("--keys", cfg.keys)->required();
  aggregate->add_option("--query", cfg.query)->required();
  aggregate->add_option("--data", cfg.data)->required();
  aggregate->add_option("--registry", cfg.registry, "slot registry (default KEYS/registry.json)");
  aggregate->add_option("--transcript", cfg.transcript, "write the transcript as JSONL");

  auto* demo = app.add_subcommand("demo", "analytics over a CSV file");
  demo->require_subcommand(1);
  auto* stats = demo->add_subcommand("stats", "mean and variance of one column");
  auto* regress = demo->add_subcommand("regress", "least squares against column y");
  for (auto* c : {stats, regress}) {
    AddShape(c, cfg);
    AddSeed(c, cfg);
    c->add_option("--data", cfg.data)->required();
    c->add_option("--f", cfg.frac_bits, "fixed-point fraction bits");
    c->add_option("--rows", cfg.rows, "use only the first ROWS rows");
  }
  stats->add_option("--column", cfg.column);
  regress->add_option("--ridge", cfg.ridge, "ridge term added to the diagonal");

  auto* attack = app.add_subcommand("attack", "attack demonstrations");
  attack->require_subcommand(1);
  auto* collusion = attack->add_subcommand("collusion", "pool keys to interpolate a victim's");
  auto* rushing = attack->add_subcommand("rushing", "rushing attack on the ring exchange");
  for (auto* c : {collusion, rushing}) {
    AddShape(c, cfg);
    AddSeed(c, cfg);
    c->add_option("--victim", cfg.victim);
  }
  collusion->add_option("--d", cfg.degree, "polynomial degree under attack");
  collusion->add_option("--s", cfg.coalition, "coalition size");
  rushing->add_option("--hardened-k", cfg.hardened_k);
  rushing->add_flag("--honest", cfg.honest, "attacker follows the protocol");

  auto* bench = app.add_subcommand("bench", "per-algorithm timings and byte counts");
  AddShape(bench, cfg);
  AddSeed(bench, cfg);
  bench->add_option("--iterations", cfg.iterations);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    Emit({{"error", "Usage"}, {"detail", e.what()}});
    return 2;
  }
  if (*collusion || *rushing) {
    // Attack demos default to small toy moduli.
    if ((*collusion ? collusion : rushing)->count("--kappa") == 0) cfg.kappa = 16;
  }
  if (*collusion && collusion->count("--n") == 0) cfg.n = 8;

  try {
    if (*gen) GenParams(cfg);
    if (*keygen) Keygen(cfg);
    if (*aggregate) Aggregate(cfg);
    if (*stats) DemoStats(cfg);
    if (*regress) DemoRegress(cfg);
    if (*collusion) AttackCollusion(cfg);
    if (*rushing) AttackRushing(cfg);
    if (*bench) {
      if (bench->count("--kappa") == 0) cfg.kappa = 512;
      if (bench->count("--n") == 0) cfg.n = 10;
      Bench(cfg);
    }
  } catch (const Error& e) {
    Emit({{"error", std::string(ErrorCodeName(e.code()))}, {"detail", e.detail()}});
    return 1;
  } catch (const std::exception& e) {
    Emit({{"error", "Internal"}, {"detail", e.what()}});
    return 1;
  }
  return 0;
}

}  // namespace
}  // namespace pdakit

int main(int argc, char** argv) { return pdakit::Main(argc, argv); }
