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

#ifndef NGBUS__INTRA__SUBSCRIBER_QUEUE_HPP_
#define NGBUS__INTRA__SUBSCRIBER_QUEUE_HPP_

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <functional>
#include <mutex>
#include <optional>

#include "ngbus/messages.hpp"
#include "ngbus/qos.hpp"

namespace ngbus::intra {

/// Bounded per-subscriber message queue with KEEP_LAST history.
///
/// Holds at most qos.history_depth envelopes. On overflow, BEST_EFFORT
/// evicts the oldest queued message; RELIABLE blocks the pusher until a
/// taker frees a slot or the timeout expires. Safe for concurrent pushers
/// and takers.
class SubscriberQueue
{
public:
  SubscriberQueue(
    QoSProfile qos,
    std::chrono::nanoseconds block_timeout = std::chrono::seconds(1))
  : qos_(qos), block_timeout_(block_timeout) {}

  /// \throws Error{kBackpressureTimeout} (RELIABLE only) when no slot frees
  /// up within the timeout. After close(), pushes are dropped silently.
  void push(MessageEnvelope env);

  /// Oldest queued envelope, or nullopt when the queue is empty.
  std::optional<MessageEnvelope> take();

  /// Invoked (outside the queue lock) after each successful push; used by
  /// executors to wake their scheduling loop.
  void set_ready_hook(std::function<void()> hook);

  /// Unblocks pending pushers; subsequent pushes are dropped. Queued
  /// messages remain takeable.
  void close();

  std::size_t size() const;
  bool empty() const {return size() == 0;}
  std::uint64_t evictions() const;
  QoSProfile qos() const noexcept {return qos_;}

private:
  QoSProfile qos_;
  std::chrono::nanoseconds block_timeout_;
  mutable std::mutex mutex_;
  std::condition_variable slot_freed_;
  std::deque<MessageEnvelope> queue_;
  std::function<void()> ready_hook_;
  std::uint64_t evictions_{0};
  bool closed_{false};
};

}  // namespace ngbus::intra

#endif  // NGBUS__INTRA__SUBSCRIBER_QUEUE_HPP_
