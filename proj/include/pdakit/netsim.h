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

#ifndef PDAKIT_NETSIM_H_
#define PDAKIT_NETSIM_H_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdakit/bigint.h"
#include "pdakit/types.h"

namespace pdakit::netsim {

// Round 0 is reserved for declarations made before the first barrier.
struct Message {
  int round = 0;
  PartyId from = 0;
  std::optional<PartyId> to;  // unset for broadcasts
  std::string kind;
  std::string tag;
  std::string body;  // lowercase hex

  BigInt Value() const { return FromHex(body); }
  friend bool operator==(const Message&, const Message&) = default;
};

class Transcript {
 public:
  void Append(Message m) { messages_.push_back(std::move(m)); }
  const std::vector<Message>& messages() const { return messages_; }
  size_t size() const { return messages_.size(); }

  // Distinct rounds with at least one message, ascending.
  std::vector<int> Rounds() const;
  std::vector<Message> InRound(int round) const;
  std::vector<Message> OfKind(std::string_view kind) const;

  std::string ToJsonl() const;
  static Transcript FromJsonl(std::string_view text);

  friend bool operator==(const Transcript&, const Transcript&) = default;

 private:
  std::vector<Message> messages_;
};

struct ByteCount {
  PartyId party = 0;
  int round = 0;
  size_t sent = 0;
  size_t received = 0;

  friend bool operator==(const ByteCount&, const ByteCount&) = default;
};

std::string ByteReportJson(const std::vector<ByteCount>& report);

// Passive tap; sees every message the moment it is posted.
using Observer = std::function<void(const Message&)>;

// Synchronous broadcast network. Every message is visible to everyone;
// `to` only marks the intended recipient for accounting.
class Bus {
 public:
  explicit Bus(PartySet parties);

  const PartySet& parties() const { return parties_; }
  int round() const { return round_; }

  // Closes the current round and opens the next one.
  int BeginRound();

  void Broadcast(PartyId from, std::string_view kind, const BigInt& value,
                 std::string_view tag = {});
  void Send(PartyId from, PartyId to, std::string_view kind,
            const BigInt& value, std::string_view tag = {});

  void AddObserver(Observer observer) { observers_.push_back(std::move(observer)); }

  // Messages posted in `round`, sorted by sender ID then posting order.
  std::vector<Message> Delivered(int round) const;
  // As above, restricted to broadcasts and messages addressed to `party`.
  std::vector<Message> Inbox(PartyId party, int round) const;

  const Transcript& transcript() const { return transcript_; }
  std::vector<ByteCount> ByteReport() const;
  size_t BytesSent(PartyId party) const;

 private:
  void Post(Message m);

  PartySet parties_;
  int round_ = 0;
  Transcript transcript_;
  std::vector<Observer> observers_;
};

// A protocol run that drives a bus and keeps its own per-party outputs.
class Driver {
 public:
  virtual ~Driver() = default;
  virtual std::string name() const = 0;
  virtual void Run(Bus& bus) = 0;
};

struct CeremonyRecord {
  Transcript transcript;
  std::vector<ByteCount> bytes;
};

// Runs `driver` on a fresh bus. Driver errors are rethrown with the
// ceremony name and the round in which they occurred.
CeremonyRecord RunCeremony(Driver& driver, const PartySet& parties,
                           const std::vector<Observer>& taps = {});

}  // namespace pdakit::netsim

#endif  // PDAKIT_NETSIM_H_
