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

#ifndef NGBUS__QOS_HPP_
#define NGBUS__QOS_HPP_

#include <cstddef>

namespace ngbus {

/// Delivery policy of a topic.
/// RELIABLE is the "TCP-like" lossless ordered service; BEST_EFFORT is the
/// non-blocking "UDP-like" service for high-frequency sensor data where
/// missing individual messages is not detrimental.
enum class Reliability
{
  kReliable,
  kBestEffort,
};

/// Per-topic quality of service: reliability plus KEEP_LAST history depth.
/// A subscriber retains at most `history_depth` undelivered messages;
/// on overflow BEST_EFFORT evicts the oldest, RELIABLE blocks the publisher.
struct QoSProfile
{
  Reliability reliability{Reliability::kReliable};
  std::size_t history_depth{10};

  friend bool operator==(const QoSProfile &, const QoSProfile &) = default;
};

/// Default profile for high-rate sensor streams: best effort, depth 5.
inline QoSProfile sensor_qos() noexcept {return {Reliability::kBestEffort, 5};}

/// Default profile for must-arrive topics: reliable, depth 10.
inline QoSProfile reliable_qos() noexcept {return {Reliability::kReliable, 10};}

}  // namespace ngbus

#endif  // NGBUS__QOS_HPP_
