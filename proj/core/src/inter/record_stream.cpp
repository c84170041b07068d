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

#include "ngbus/inter/record_stream.hpp"

#include <cstring>
#include <string>

#include "ngbus/errors.hpp"

namespace ngbus::inter {

void RecordStream::feed(std::span<const std::uint8_t> data)
{
  if (consumed_ > 0 && consumed_ == buffer_.size()) {
    buffer_.clear();
    consumed_ = 0;
  }
  buffer_.insert(buffer_.end(), data.begin(), data.end());
}

std::optional<std::vector<std::uint8_t>> RecordStream::next()
{
  if (buffered() < 4) {
    return std::nullopt;
  }
  const std::uint8_t * p = buffer_.data() + consumed_;
  std::uint32_t len = static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
    (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
  if (len > kMaxRecordBytes) {
    throw Error(
      ErrorCode::kTruncatedStream,
      "record length " + std::to_string(len) + " exceeds the sanity bound");
  }
  if (buffered() < 4u + len) {
    return std::nullopt;
  }
  auto begin = buffer_.begin() + static_cast<std::ptrdiff_t>(consumed_ + 4);
  std::vector<std::uint8_t> record(begin, begin + len);
  consumed_ += 4u + len;
  if (consumed_ == buffer_.size()) {
    buffer_.clear();
    consumed_ = 0;
  }
  return record;
}

void RecordStream::finish()
{
  if (buffered() != 0) {
    std::size_t left = buffered();
    buffer_.clear();
    consumed_ = 0;
    throw Error(
      ErrorCode::kTruncatedStream,
      "peer disconnected with " + std::to_string(left) + " bytes of a partial record");
  }
}

}  // namespace ngbus::inter
