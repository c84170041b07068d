// Copyright 2026 The ngbus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ngbus/errors.hpp"

namespace ngbus {

const char * to_string(ErrorCode code) noexcept
{
  switch (code) {
    case ErrorCode::kMalformedTopic: return "MALFORMED_TOPIC";
    case ErrorCode::kInvariantViolation: return "INVARIANT_VIOLATION";
    case ErrorCode::kTruncated: return "TRUNCATED";
    case ErrorCode::kBadTag: return "BAD_TAG";
    case ErrorCode::kBadMagic: return "BAD_MAGIC";
    case ErrorCode::kBadVersion: return "BAD_VERSION";
    case ErrorCode::kBadLength: return "BAD_LENGTH";
    case ErrorCode::kBadEnum: return "BAD_ENUM";
    case ErrorCode::kBackpressureTimeout: return "BACKPRESSURE_TIMEOUT";
    case ErrorCode::kPayloadTooLarge: return "PAYLOAD_TOO_LARGE";
    case ErrorCode::kConnectionLost: return "CONNECTION_LOST";
    case ErrorCode::kTruncatedStream: return "TRUNCATED_STREAM";
    case ErrorCode::kUnsupportedEncoding: return "UNSUPPORTED_ENCODING";
    case ErrorCode::kSpawnFailed: return "SPAWN_FAILED";
    case ErrorCode::kTimeout: return "TIMEOUT";
    case ErrorCode::kConfigInvalid: return "CONFIG_INVALID";
    case ErrorCode::kBindFailed: return "BIND_FAILED";
    case ErrorCode::kScenarioMismatch: return "SCENARIO_MISMATCH";
    case ErrorCode::kEmptyInput: return "EMPTY_INPUT";
    case ErrorCode::kIoFailed: return "IO_FAILED";
    case ErrorCode::kCallbackFailed: return "CALLBACK_FAILED";
  }
  return "UNKNOWN";
}

}  // namespace ngbus
