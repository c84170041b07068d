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

#include "ngbus/intra/subscriber_queue.hpp"

#include <utility>

#include "ngbus/errors.hpp"

namespace ngbus::intra {

void SubscriberQueue::push(MessageEnvelope env)
{
  std::function<void()> hook;
  {
    std::unique_lock<std::mutex> lock(mutex_);
    if (closed_) {
      return;
    }
    if (queue_.size() >= qos_.history_depth) {
      if (qos_.reliability == Reliability::kBestEffort) {
        queue_.pop_front();
        ++evictions_;
      } else {
        bool freed = slot_freed_.wait_for(
          lock, block_timeout_,
          [this] {return closed_ || queue_.size() < qos_.history_depth;});
        if (closed_) {
          return;
        }
        if (!freed) {
          throw Error(
            ErrorCode::kBackpressureTimeout,
            "subscriber queue full for longer than the block timeout");
        }
      }
    }
    queue_.push_back(std::move(env));
    hook = ready_hook_;
  }
  if (hook) {
    hook();
  }
}

std::optional<MessageEnvelope> SubscriberQueue::take()
{
  std::optional<MessageEnvelope> out;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (queue_.empty()) {
      return std::nullopt;
    }
    out = std::move(queue_.front());
    queue_.pop_front();
  }
  slot_freed_.notify_all();
  return out;
}

void SubscriberQueue::set_ready_hook(std::function<void()> hook)
{
  std::lock_guard<std::mutex> lock(mutex_);
  ready_hook_ = std::move(hook);
}

void SubscriberQueue::close()
{
  {
    std::lock_guard<std::mutex> lock(mutex_);
    closed_ = true;
  }
  slot_freed_.notify_all();
}

std::size_t SubscriberQueue::size() const
{
  std::lock_guard<std::mutex> lock(mutex_);
  return queue_.size();
}

std::uint64_t SubscriberQueue::evictions() const
{
  std::lock_guard<std::mutex> lock(mutex_);
  return evictions_;
}

}  // namespace ngbus::intra
