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

#include "ngbus/graph/node.hpp"

#include <utility>

#include "ngbus/errors.hpp"

namespace ngbus::graph {

void Publisher::publish(std::unique_ptr<Payload> msg)
{
  const std::uint64_t seq = seq_.fetch_add(1, std::memory_order_relaxed);
  if (channel_) {
    channel_->publish_unique(seq, domain_, std::move(msg));
    return;
  }
  if (sender_) {
    sender_->send(seq, *msg);
    return;
  }
  throw Error(
    ErrorCode::kInvariantViolation,
    "publisher on '" + topic_.str() + "' used before its container spun");
}

std::shared_ptr<Publisher> Node::advertise(const TopicName & topic)
{
  auto pub = std::shared_ptr<Publisher>(new Publisher(topic));
  publishers_.push_back(pub);
  return pub;
}

void Node::subscribe(const TopicName & topic, SubscriptionCallback callback)
{
  subscriptions_.push_back(
    std::make_unique<Subscription>(topic, std::nullopt, std::move(callback)));
}

void Node::subscribe(const TopicName & topic, QoSProfile qos, SubscriptionCallback callback)
{
  subscriptions_.push_back(
    std::make_unique<Subscription>(topic, qos, std::move(callback)));
}

void Node::add_timer(std::chrono::nanoseconds period, std::function<void()> callback)
{
  timers_.push_back(TimerSpec{period, std::move(callback)});
}

void Node::add_background(std::function<void(const std::atomic<bool> &)> worker)
{
  backgrounds_.push_back(std::move(worker));
}

}  // namespace ngbus::graph
