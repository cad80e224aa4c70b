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

#include "pdakit/io.h"

#include <fstream>
#include <sstream>

#include "pdakit/error.h"

namespace pdakit::io {
namespace {

std::string Hex(const BigInt& v) { return ToHex(v); }

std::string BytesHex(const std::vector<uint8_t>& bytes) {
  static const char kDigits[] = "0123456789abcdef";
  std::string out;
  for (uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

std::vector<uint8_t> BytesFromHex(const std::string& s) {
  Require(s.size() % 2 == 0, ErrorCode::kParseError, "odd-length byte string");
  auto nibble = [&](char c) -> uint8_t {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    Fail(ErrorCode::kParseError, "bad hex digit in byte string");
  };
  std::vector<uint8_t> out;
  for (size_t i = 0; i < s.size(); i += 2) {
    out.push_back(static_cast<uint8_t>(nibble(s[i]) << 4 | nibble(s[i + 1])));
  }
  return out;
}

BigInt HexField(const Json& j, const char* key) {
  return FromHex(j.at(key).get<std::string>());
}

BigInt SignedInteger(const Json& v) {
  if (v.is_number_integer()) return BigInt(std::to_string(v.get<int64_t>()));
  const std::string s = v.get<std::string>();
  BigInt out;
  if (s.empty() || out.set_str(s, 10) != 0) {
    Fail(ErrorCode::kParseError, "'" + s + "' is not a decimal integer");
  }
  return out;
}

template <typename F>
auto Guard(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    Fail(ErrorCode::kParseError, std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json ToJson(const pda::Params& p) {
  return Json{{"n_cap", Hex(p.n_cap)},
              {"n_tilde", Hex(p.n_tilde)},
              {"g", Hex(p.g)},
              {"g_tilde", Hex(p.g_tilde)},
              {"h", Hex(p.h)},
              {"hash_seed", BytesHex(p.hash_seed)},
              {"n", p.n},
              {"theta_min", p.theta_min},
              {"hardened_k", p.hardened_k}};
}

pda::Params PdaParamsFromJson(const Json& j) {
  return Guard("params", [&] {
    pda::Params p;
    p.n_cap = HexField(j, "n_cap");
    p.n_tilde = HexField(j, "n_tilde");
    p.g = HexField(j, "g");
    p.g_tilde = HexField(j, "g_tilde");
    p.h = HexField(j, "h");
    p.hash_seed = BytesFromHex(j.at("hash_seed").get<std::string>());
    p.n = j.at("n").get<int>();
    p.theta_min = j.at("theta_min").get<int>();
    p.hardened_k = j.value("hardened_k", 0);
    return p;
  });
}

Json ToJson(const pda::EncKey& k) {
  Json ev = Json::object();
  for (const auto& [d, v] : k.evaluations) ev[std::to_string(d)] = Hex(v);
  return Json{{"id", k.id}, {"evaluations", ev}};
}

pda::EncKey PdaKeyFromJson(const Json& j) {
  return Guard("pda key", [&] {
    pda::EncKey k;
    k.id = j.at("id").get<int>();
    for (const auto& [d, v] : j.at("evaluations").items()) {
      k.evaluations[std::stoi(d)] = FromHex(v.get<std::string>());
    }
    return k;
  });
}

Json ToJson(const arith::Params& p) {
  return Json{{"p", Hex(p.p)}, {"g", Hex(p.g)}, {"g1", Hex(p.g1)},
              {"n", p.n},      {"n_min", p.n_min}};
}

arith::Params ArithParamsFromJson(const Json& j) {
  return Guard("arith params", [&] {
    return arith::MakeParams(HexField(j, "p"), HexField(j, "g"),
                             HexField(j, "g1"), j.at("n").get<int>(),
                             j.at("n_min").get<int>());
  });
}

Json ToJson(const arith::EncKey& k) {
  Json sh = Json::object();
  for (const auto& [size, v] : k.shares) sh[std::to_string(size)] = Hex(v);
  return Json{{"id", k.id}, {"shares", sh}};
}

arith::EncKey ArithKeyFromJson(const Json& j) {
  return Guard("arith key", [&] {
    arith::EncKey k;
    k.id = j.at("id").get<int>();
    for (const auto& [size, v] : j.at("shares").items()) {
      k.shares[std::stoi(size)] = FromHex(v.get<std::string>());
    }
    return k;
  });
}

Json ToJson(const paillier::KeyPair& k) {
  return Json{{"n_a", Hex(k.pub.n_a)}, {"lambda", Hex(k.lambda)}, {"mu", Hex(k.mu)}};
}

paillier::KeyPair PaillierKeyFromJson(const Json& j) {
  return Guard("paillier key", [&] {
    paillier::KeyPair k;
    k.pub = paillier::MakePublicKey(HexField(j, "n_a"));
    k.lambda = HexField(j, "lambda");
    k.mu = HexField(j, "mu");
    return k;
  });
}

Json ToJson(const pda::Query& q) {
  Json coeffs = Json::array();
  for (const auto& c : q.coeffs) {
    if (c.fits_slong_p()) {
      coeffs.push_back(c.get_si());
    } else {
      coeffs.push_back(c.get_str(10));
    }
  }
  Json ex = Json::object();
  for (const auto& [i, row] : q.exponents) {
    Json r = Json::object();
    for (const auto& [k, e] : row) r[std::to_string(k)] = e;
    ex[std::to_string(i)] = r;
  }
  Json out{{"coeffs", coeffs},
           {"exponents", ex},
           {"participants", q.participants},
           {"window", {{"start", q.window.start}, {"len", q.window.len}}}};
  if (q.special) out["special"] = {q.special->first, q.special->second};
  return out;
}

pda::Query QueryFromJson(const Json& j) {
  return Guard("query", [&] {
    pda::Query q;
    for (const auto& c : j.at("coeffs")) q.coeffs.push_back(SignedInteger(c));
    for (const auto& [i, row] : j.at("exponents").items()) {
      for (const auto& [k, e] : row.items()) {
        q.exponents[std::stoi(i)][std::stoi(k)] = e.get<uint64_t>();
      }
    }
    q.participants = j.at("participants").get<PartySet>();
    q.window = {j.at("window").at("start").get<int64_t>(),
                j.at("window").at("len").get<int64_t>()};
    if (j.contains("special")) {
      const auto s = j.at("special").get<std::vector<int>>();
      Require(s.size() == 2, ErrorCode::kParseError, "special needs two users");
      q.special = std::make_pair(s[0], s[1]);
    }
    return q;
  });
}

Json ToJson(const models::AggPolynomial& poly) {
  Json terms = Json::array();
  for (const auto& t : poly.terms) {
    Json powers = Json::object();
    for (const auto& [i, d] : t.powers) powers[std::to_string(i)] = d;
    terms.push_back({{"coeff", Hex(t.coeff)}, {"powers", powers}});
  }
  return Json{{"modulus_ref", "arith"},
              {"terms", terms},
              {"participants", poly.participants}};
}

models::AggPolynomial PolynomialFromJson(const Json& j) {
  return Guard("polynomial", [&] {
    models::AggPolynomial poly;
    if (j.contains("modulus_ref")) {
      Require(j.at("modulus_ref") == "arith", ErrorCode::kParseError,
              "unsupported modulus_ref");
    }
    for (const auto& t : j.at("terms")) {
      models::Term term;
      term.coeff = FromHex(t.at("coeff").get<std::string>());
      for (const auto& [i, d] : t.at("powers").items()) {
        term.powers[std::stoi(i)] = d.get<uint64_t>();
      }
      poly.terms.push_back(std::move(term));
    }
    poly.participants = j.at("participants").get<PartySet>();
    return poly;
  });
}

std::map<PartyId, std::vector<BigInt>> ParseTermData(const std::string& csv) {
  std::map<PartyId, std::vector<BigInt>> out;
  std::stringstream ss(csv);
  std::string line;
  bool header = true;
  size_t columns = 0;
  while (std::getline(ss, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      const auto b = cell.find_first_not_of(" \t");
      const auto e = cell.find_last_not_of(" \t");
      cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    if (header) {
      Require(!cells.empty() && cells[0] == "user", ErrorCode::kParseError,
              "data CSV must start with a 'user' column");
      columns = cells.size();
      header = false;
      continue;
    }
    Require(cells.size() == columns, ErrorCode::kParseError,
            "data row has the wrong number of cells");
    std::vector<BigInt> row;
    for (size_t c = 1; c < cells.size(); ++c) {
      BigInt v;
      if (cells[c].empty() || v.set_str(cells[c], 10) != 0) {
        Fail(ErrorCode::kParseError, "'" + cells[c] + "' is not an integer");
      }
      row.push_back(v);
    }
    const PartyId id = std::stoi(cells[0]);
    Require(out.emplace(id, std::move(row)).second, ErrorCode::kDuplicateId,
            "user " + cells[0] + " appears twice");
  }
  Require(!header, ErrorCode::kParseError, "empty data CSV");
  return out;
}

Json ParseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    Fail(ErrorCode::kParseError, e.what());
  }
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  Require(static_cast<bool>(in), ErrorCode::kIoError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  Require(static_cast<bool>(out), ErrorCode::kIoError, "cannot write " + path);
  out << text;
}

Json LoadJson(const std::string& path) { return ParseJson(ReadFile(path)); }

void SaveJson(const std::string& path, const Json& j) {
  WriteFile(path, j.dump(2) + "\n");
}

}  // namespace pdakit::io
