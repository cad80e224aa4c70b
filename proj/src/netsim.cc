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

#include "pdakit/netsim.h"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

#include "pdakit/error.h"

namespace pdakit::netsim {

using nlohmann::json;

std::vector<int> Transcript::Rounds() const {
  std::set<int> rounds;
  for (const auto& m : messages_) rounds.insert(m.round);
  return {rounds.begin(), rounds.end()};
}

std::vector<Message> Transcript::InRound(int round) const {
  std::vector<Message> out;
  for (const auto& m : messages_) {
    if (m.round == round) out.push_back(m);
  }
  return out;
}

std::vector<Message> Transcript::OfKind(std::string_view kind) const {
  std::vector<Message> out;
  for (const auto& m : messages_) {
    if (m.kind == kind) out.push_back(m);
  }
  return out;
}

std::string Transcript::ToJsonl() const {
  std::string out;
  for (const auto& m : messages_) {
    json j = {{"round", m.round}, {"from", m.from}, {"kind", m.kind}};
    if (m.to) j["to"] = *m.to;
    if (!m.tag.empty()) j["tag"] = m.tag;
    j["body"] = m.body;
    out += j.dump();
    out += '\n';
  }
  return out;
}

Transcript Transcript::FromJsonl(std::string_view text) {
  Transcript t;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      Message m;
      m.round = j.at("round").get<int>();
      m.from = j.at("from").get<PartyId>();
      if (j.contains("to")) m.to = j.at("to").get<PartyId>();
      m.kind = j.at("kind").get<std::string>();
      if (j.contains("tag")) m.tag = j.at("tag").get<std::string>();
      m.body = j.at("body").get<std::string>();
      FromHex(m.body);
      t.Append(std::move(m));
    } catch (const json::exception& e) {
      Fail(ErrorCode::kParseError, std::string("transcript line: ") + e.what());
    }
  }
  return t;
}

std::string ByteReportJson(const std::vector<ByteCount>& report) {
  json arr = json::array();
  for (const auto& b : report) {
    arr.push_back({{"party", b.party},
                   {"round", b.round},
                   {"sent", b.sent},
                   {"received", b.received}});
  }
  return arr.dump();
}

Bus::Bus(PartySet parties) : parties_(std::move(parties)) {
  std::sort(parties_.begin(), parties_.end());
  Require(!parties_.empty(), ErrorCode::kInvalidArgument, "empty party set");
  Require(std::adjacent_find(parties_.begin(), parties_.end()) == parties_.end(),
          ErrorCode::kDuplicateId, "party listed twice on the bus");
}

int Bus::BeginRound() { return ++round_; }

void Bus::Post(Message m) {
  for (const auto& obs : observers_) obs(m);
  transcript_.Append(std::move(m));
}

void Bus::Broadcast(PartyId from, std::string_view kind, const BigInt& value,
                    std::string_view tag) {
  Post(Message{round_, from, std::nullopt, std::string(kind), std::string(tag),
               ToHex(value)});
}

void Bus::Send(PartyId from, PartyId to, std::string_view kind,
               const BigInt& value, std::string_view tag) {
  Post(Message{round_, from, to, std::string(kind), std::string(tag),
               ToHex(value)});
}

std::vector<Message> Bus::Delivered(int round) const {
  std::vector<Message> out = transcript_.InRound(round);
  std::stable_sort(out.begin(), out.end(),
                   [](const Message& a, const Message& b) { return a.from < b.from; });
  return out;
}

std::vector<Message> Bus::Inbox(PartyId party, int round) const {
  std::vector<Message> out;
  for (auto& m : Delivered(round)) {
    if (!m.to || *m.to == party) out.push_back(std::move(m));
  }
  return out;
}

std::vector<ByteCount> Bus::ByteReport() const {
  std::map<std::pair<PartyId, int>, ByteCount> table;
  auto row = [&](PartyId p, int r) -> ByteCount& {
    auto [it, fresh] = table.try_emplace({p, r});
    if (fresh) {
      it->second.party = p;
      it->second.round = r;
    }
    return it->second;
  };
  for (const auto& m : transcript_.messages()) {
    row(m.from, m.round).sent += m.body.size();
    if (m.to) {
      row(*m.to, m.round).received += m.body.size();
    } else {
      for (PartyId p : parties_) {
        if (p != m.from) row(p, m.round).received += m.body.size();
      }
    }
  }
  std::vector<ByteCount> out;
  for (auto& [key, v] : table) out.push_back(v);
  return out;
}

size_t Bus::BytesSent(PartyId party) const {
  size_t total = 0;
  for (const auto& m : transcript_.messages()) {
    if (m.from == party) total += m.body.size();
  }
  return total;
}

CeremonyRecord RunCeremony(Driver& driver, const PartySet& parties,
                           const std::vector<Observer>& taps) {
  Bus bus(parties);
  for (const auto& tap : taps) bus.AddObserver(tap);
  try {
    driver.Run(bus);
  } catch (const Error& e) {
    Fail(e.code(), driver.name() + " round " + std::to_string(bus.round()) +
                       ": " + e.detail());
  }
  return CeremonyRecord{bus.transcript(), bus.ByteReport()};
}

}  // namespace pdakit::netsim
