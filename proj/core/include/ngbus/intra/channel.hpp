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

#ifndef NGBUS__INTRA__CHANNEL_HPP_
#define NGBUS__INTRA__CHANNEL_HPP_

#include <chrono>
#include <memory>
#include <mutex>
#include <vector>

#include "ngbus/domain_id.hpp"
#include "ngbus/intra/subscriber_queue.hpp"
#include "ngbus/messages.hpp"
#include "ngbus/qos.hpp"
#include "ngbus/topic_name.hpp"

namespace ngbus::intra {

/// In-process topic channel: the zero-copy intra-process communication path.
///
/// A published payload is handed to subscribers as a shared immutable view of
/// the very object the publisher gave up. No payload bytes are copied on this
/// path, whatever the subscriber count; deep_copy_count stays untouched. A
/// subscriber that needs to mutate a message copies it explicitly, which is
/// exactly the operation the diagnostic counts.
class IntraChannel
{
public:
  IntraChannel(
    TopicName topic, QoSProfile qos,
    std::chrono::nanoseconds block_timeout = std::chrono::seconds(1))
  : topic_(std::move(topic)), qos_(qos), block_timeout_(block_timeout) {}

  /// Registers a new subscriber and returns its queue.
  std::shared_ptr<SubscriberQueue> subscribe();

  /// Publishes a uniquely-owned payload; the caller relinquishes ownership.
  /// With no subscribers the message is dropped silently. Queue overflow
  /// follows each subscriber queue's KEEP_LAST / blocking policy.
  /// \throws Error{kBackpressureTimeout} under RELIABLE backpressure.
  void publish_unique(std::uint64_t seq, DomainId domain, std::unique_ptr<Payload> msg);

  const TopicName & topic() const noexcept {return topic_;}
  QoSProfile qos() const noexcept {return qos_;}
  std::size_t subscriber_count() const;

  /// Unblocks all pending publishers and stops accepting messages.
  void close();

private:
  TopicName topic_;
  QoSProfile qos_;
  std::chrono::nanoseconds block_timeout_;
  mutable std::mutex mutex_;
  std::vector<std::shared_ptr<SubscriberQueue>> subscribers_;
};

}  // namespace ngbus::intra

#endif  // NGBUS__INTRA__CHANNEL_HPP_
