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

#ifndef NGBUS__TOPIC_NAME_HPP_
#define NGBUS__TOPIC_NAME_HPP_

#include <string>
#include <string_view>

namespace ngbus {

/// A validated topic name: non-empty, leading '/', '/'-separated segments
/// of [a-z0-9_]+, no trailing '/'. Equivalent to the regex ^(/[a-z0-9_]+)+$.
class TopicName
{
public:
  /// Validates `raw` and returns the topic name.
  /// \throws Error{kMalformedTopic} naming the violated rule.
  static TopicName validate(std::string_view raw);

  const std::string & str() const noexcept {return value_;}

  friend bool operator==(const TopicName &, const TopicName &) = default;
  friend auto operator<=>(const TopicName &, const TopicName &) = default;

private:
  explicit TopicName(std::string value)
  : value_(std::move(value)) {}

  std::string value_;
};

}  // namespace ngbus

#endif  // NGBUS__TOPIC_NAME_HPP_
