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

#ifndef NGBUS__GRAPH__NODE_HPP_
#define NGBUS__GRAPH__NODE_HPP_

#include <atomic>
#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "ngbus/intra/channel.hpp"
#include "ngbus/intra/subscriber_queue.hpp"
#include "ngbus/inter/receiver.hpp"
#include "ngbus/inter/sender.hpp"
#include "ngbus/messages.hpp"
#include "ngbus/qos.hpp"
#include "ngbus/topic_name.hpp"

namespace ngbus::graph {

class Container;

/// Topic publication handle. Wired by the container to either an in-process
/// channel (zero-copy) or a loopback sender (encode + socket); the publishing
/// node cannot tell the difference. Thread-safe.
class Publisher
{
public:
  /// Publishes a uniquely-owned message; the caller relinquishes ownership,
  /// which is what makes the zero-copy handover safe.
  void publish(std::unique_ptr<Payload> msg);

  const TopicName & topic() const noexcept {return topic_;}
  std::uint64_t published() const noexcept {return seq_.load(std::memory_order_relaxed);}

private:
  friend class Container;
  friend class Node;
  explicit Publisher(TopicName topic)
  : topic_(std::move(topic)) {}

  TopicName topic_;
  DomainId domain_;
  std::shared_ptr<intra::IntraChannel> channel_;
  std::shared_ptr<inter::Sender> sender_;
  std::atomic<std::uint64_t> seq_{0};
};

using SubscriptionCallback = std::function<void(const MessageEnvelope &)>;

/// A named unit owning publishers, subscriptions, timers, and optional
/// background workers. Nodes declare their endpoints up front; the container
/// wires and schedules them when it spins.
class Node
{
public:
  const std::string & name() const noexcept {return name_;}

  /// Declares a publication. The transport is chosen by the container.
  std::shared_ptr<Publisher> advertise(const TopicName & topic);

  /// Declares a subscription; QoS comes from the container's topic table.
  void subscribe(const TopicName & topic, SubscriptionCallback callback);

  /// Declares a subscription with an explicit QoS profile.
  void subscribe(const TopicName & topic, QoSProfile qos, SubscriptionCallback callback);

  /// Declares a periodic timer.
  void add_timer(std::chrono::nanoseconds period, std::function<void()> callback);

  /// Declares a worker running on its own thread for the container's
  /// lifetime (e.g. a socket listener). The worker must return promptly
  /// once `stop` becomes true.
  void add_background(std::function<void(const std::atomic<bool> & stop)> worker);

private:
  friend class Container;
  explicit Node(std::string name)
  : name_(std::move(name)) {}

  struct Subscription
  {
    Subscription(TopicName topic_in, std::optional<QoSProfile> qos, SubscriptionCallback cb)
    : topic(std::move(topic_in)), explicit_qos(qos), callback(std::move(cb)) {}

    TopicName topic;
    std::optional<QoSProfile> explicit_qos;
    SubscriptionCallback callback;
    // wired state
    std::shared_ptr<intra::SubscriberQueue> queue;
    std::shared_ptr<inter::Receiver> receiver;
  };

  struct TimerSpec
  {
    std::chrono::nanoseconds period;
    std::function<void()> callback;
  };

  std::string name_;
  std::vector<std::shared_ptr<Publisher>> publishers_;
  std::vector<std::unique_ptr<Subscription>> subscriptions_;
  std::vector<TimerSpec> timers_;
  std::vector<std::function<void(const std::atomic<bool> &)>> backgrounds_;
};

}  // namespace ngbus::graph

#endif  // NGBUS__GRAPH__NODE_HPP_
