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

#ifndef NGBUS__INTER__RECORD_STREAM_HPP_
#define NGBUS__INTER__RECORD_STREAM_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ngbus::inter {

/// Reassembles length-delimited records from a TCP byte stream.
///
/// Each record is a u32 little-endian byte count followed by that many
/// bytes (one wire frame). Frames of any size cross the stream this way;
/// reassembly yields the exact frame bytes that were sent.
class RecordStream
{
public:
  /// Records longer than this are treated as stream corruption.
  static constexpr std::uint32_t kMaxRecordBytes = 16u * 1024u * 1024u;

  /// Appends raw bytes read from the socket.
  /// \throws Error{kTruncatedStream} when a declared length exceeds
  /// kMaxRecordBytes (the stream cannot be resynchronized).
  void feed(std::span<const std::uint8_t> data);

  /// Next complete record, or nullopt if more bytes are needed.
  std::optional<std::vector<std::uint8_t>> next();

  /// Signals end-of-stream.
  /// \throws Error{kTruncatedStream} if the peer disconnected mid-record;
  /// the partial record is discarded, never surfaced.
  void finish();

  std::size_t buffered() const noexcept {return buffer_.size() - consumed_;}

private:
  std::vector<std::uint8_t> buffer_;
  std::size_t consumed_{0};
};

}  // namespace ngbus::inter

#endif  // NGBUS__INTER__RECORD_STREAM_HPP_
