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

#include "ngbus/intra/channel.hpp"

#include <utility>

namespace ngbus::intra {

std::shared_ptr<SubscriberQueue> IntraChannel::subscribe()
{
  auto queue = std::make_shared<SubscriberQueue>(qos_, block_timeout_);
  std::lock_guard<std::mutex> lock(mutex_);
  subscribers_.push_back(queue);
  return queue;
}

void IntraChannel::publish_unique(
  std::uint64_t seq, DomainId domain, std::unique_ptr<Payload> msg)
{
  std::vector<std::shared_ptr<SubscriberQueue>> targets;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    targets = subscribers_;
  }
  if (targets.empty()) {
    return;
  }
  // unique_ptr -> shared_ptr<const> is a pointer handover, not a byte copy;
  // every subscriber sees the identical payload object.
  std::shared_ptr<const Payload> view = std::move(msg);
  for (auto & queue : targets) {
    queue->push(MessageEnvelope{topic_, seq, domain, view});
  }
}

std::size_t IntraChannel::subscriber_count() const
{
  std::lock_guard<std::mutex> lock(mutex_);
  return subscribers_.size();
}

void IntraChannel::close()
{
  std::lock_guard<std::mutex> lock(mutex_);
  for (auto & queue : subscribers_) {
    queue->close();
  }
}

}  // namespace ngbus::intra
