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

#include "ngbus/topic_name.hpp"

#include "ngbus/errors.hpp"

namespace ngbus {

namespace {
bool segment_char(char c) noexcept
{
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}
}  // namespace

TopicName TopicName::validate(std::string_view raw)
{
  if (raw.empty()) {
    throw Error(ErrorCode::kMalformedTopic, "empty topic name");
  }
  if (raw.front() != '/') {
    throw Error(ErrorCode::kMalformedTopic, "no leading '/' in '" + std::string(raw) + "'");
  }
  if (raw.back() == '/') {
    throw Error(ErrorCode::kMalformedTopic, "trailing '/' in '" + std::string(raw) + "'");
  }
  std::size_t seg_len = 0;
  for (std::size_t i = 1; i < raw.size(); ++i) {
    char c = raw[i];
    if (c == '/') {
      if (seg_len == 0) {
        throw Error(ErrorCode::kMalformedTopic, "empty segment in '" + std::string(raw) + "'");
      }
      seg_len = 0;
    } else if (segment_char(c)) {
      ++seg_len;
    } else {
      throw Error(
        ErrorCode::kMalformedTopic,
        "character '" + std::string(1, c) + "' outside [a-z0-9_] in '" + std::string(raw) + "'");
    }
  }
  return TopicName(std::string(raw));
}

}  // namespace ngbus
