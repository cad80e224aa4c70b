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

#include "pdakit/error.h"

namespace pdakit {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kNotInvertible: return "NotInvertible";
    case ErrorCode::kNotInSubgroup: return "NotInSubgroup";
    case ErrorCode::kStrictChainNotFound: return "StrictChainNotFound";
    case ErrorCode::kMessageTooLarge: return "MessageTooLarge";
    case ErrorCode::kInvalidCiphertext: return "InvalidCiphertext";
    case ErrorCode::kPartyMissing: return "PartyMissing";
    case ErrorCode::kNonInvertibleBroadcast: return "NonInvertibleBroadcast";
    case ErrorCode::kExtractionFailed: return "ExtractionFailed";
    case ErrorCode::kGroupTooSmall: return "GroupTooSmall";
    case ErrorCode::kKeyMissing: return "KeyMissing";
    case ErrorCode::kMixedKinds: return "MixedKinds";
    case ErrorCode::kIncompleteGroup: return "IncompleteGroup";
    case ErrorCode::kResultOverflow: return "ResultOverflow";
    case ErrorCode::kIncompleteBroadcast: return "IncompleteBroadcast";
    case ErrorCode::kSlotReused: return "SlotReused";
    case ErrorCode::kGroupBelowThreshold: return "GroupBelowThreshold";
    case ErrorCode::kMissingEncoding: return "MissingEncoding";
    case ErrorCode::kRingTooSmall: return "RingTooSmall";
    case ErrorCode::kSingularSystem: return "SingularSystem";
    case ErrorCode::kSingularNormalEquations: return "SingularNormalEquations";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace pdakit
