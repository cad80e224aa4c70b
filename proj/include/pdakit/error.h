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

#ifndef PDAKIT_ERROR_H_
#define PDAKIT_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace pdakit {

// Every failure the library reports carries one of these codes. The CLI
// prints the code name verbatim in its {"error": ..., "detail": ...} report.
enum class ErrorCode {
  kInvalidArgument,
  kDuplicateId,
  kNotInvertible,
  kNotInSubgroup,
  kStrictChainNotFound,
  kMessageTooLarge,
  kInvalidCiphertext,
  kPartyMissing,
  kNonInvertibleBroadcast,
  kExtractionFailed,
  kGroupTooSmall,
  kKeyMissing,
  kMixedKinds,
  kIncompleteGroup,
  kResultOverflow,
  kIncompleteBroadcast,
  kSlotReused,
  kGroupBelowThreshold,
  kMissingEncoding,
  kRingTooSmall,
  kSingularSystem,
  kSingularNormalEquations,
  kOverflow,
  kParseError,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

inline void Require(bool condition, ErrorCode code, const std::string& detail) {
  if (!condition) Fail(code, detail);
}

}  // namespace pdakit

#endif  // PDAKIT_ERROR_H_
