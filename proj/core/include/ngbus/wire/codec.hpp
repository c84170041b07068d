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

#ifndef NGBUS__WIRE__CODEC_HPP_
#define NGBUS__WIRE__CODEC_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "ngbus/domain_id.hpp"
#include "ngbus/messages.hpp"
#include "ngbus/topic_name.hpp"

namespace ngbus::wire {

/// Deterministic little-endian payload encoding. Fields in declaration
/// order; strings and variable-length lists as u32 count + elements; image
/// pixel data appended raw after its count. The byte layout is documented
/// bit-exactly in docs/wire-format.md and pinned by golden-file tests.
std::vector<std::uint8_t> encode_payload(const Image & msg);
std::vector<std::uint8_t> encode_payload(const Imu & msg);
std::vector<std::uint8_t> encode_payload(const JointState & msg);
std::vector<std::uint8_t> encode_payload(const GameState & msg);
std::vector<std::uint8_t> encode_payload(const Payload & msg);

/// Inverse of encode_payload. The produced message's deep-copy counter is
/// incremented by exactly 1 (its bytes were materialized from the buffer).
/// \throws Error{kBadTag} for an unknown tag, Error{kTruncated} when the
/// buffer is shorter than its declared counts, Error{kInvariantViolation}
/// when decoded fields violate a message invariant (bad enum byte, step
/// mismatch, trailing bytes).
Payload decode_payload(std::uint8_t tag, std::span<const std::uint8_t> bytes);

/// A parsed inter-process frame. Layout: magic "BHW1" | domain_id u32 |
/// topic_len u16 + topic bytes | type_tag u8 | seq u64 | payload_len u32 |
/// payload. All integers little-endian.
struct WireFrame
{
  DomainId domain;
  TopicName topic;
  std::uint8_t type_tag{0};
  std::uint64_t seq{0};
  std::vector<std::uint8_t> payload;
};

inline constexpr std::uint8_t kFrameMagic[4] = {'B', 'H', 'W', '1'};

/// Bytes of the frame header that precede the payload, for a given topic.
constexpr std::size_t frame_overhead(std::size_t topic_len) noexcept
{
  return 4 + 4 + 2 + topic_len + 1 + 8 + 4;
}

std::vector<std::uint8_t> frame(
  DomainId domain, const TopicName & topic, std::uint64_t seq, std::uint8_t tag,
  std::span<const std::uint8_t> payload);

/// \throws Error{kBadMagic}, Error{kTruncated}; Error{kMalformedTopic} if the
/// carried topic fails validation; Error{kInvariantViolation} on trailing bytes.
WireFrame parse_frame(std::span<const std::uint8_t> bytes);

}  // namespace ngbus::wire

#endif  // NGBUS__WIRE__CODEC_HPP_
