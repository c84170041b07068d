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

#include "ngbus/graph/container.hpp"

#include <csignal>
#include <algorithm>
#include <utility>

#include "ngbus/errors.hpp"
#include "ngbus/wire/codec.hpp"

namespace ngbus::graph {

namespace {

std::atomic<bool> g_signalled{false};

void on_signal(int)
{
  g_signalled.store(true, std::memory_order_relaxed);
}

inter::TransportKind kind_for(Reliability reliability) noexcept
{
  return reliability == Reliability::kReliable ?
         inter::TransportKind::kTcpReliable : inter::TransportKind::kUdpBestEffort;
}

constexpr auto kIdleSlice = std::chrono::milliseconds(50);

}  // namespace

void install_signal_handlers()
{
  struct sigaction sa{};
  sa.sa_handler = on_signal;
  sigemptyset(&sa.sa_mask);
  sigaction(SIGINT, &sa, nullptr);
  sigaction(SIGTERM, &sa, nullptr);
}

bool shutdown_signalled() noexcept
{
  return g_signalled.load(std::memory_order_relaxed);
}

ContainerOptions options_from(const Topology & topo)
{
  ContainerOptions opts;
  opts.domain = topo.domain;
  opts.mode = topo.mode;
  opts.executor = topo.executor;
  opts.topics = topo.topics;
  opts.ipc_topics = topo.ipc_topics;
  return opts;
}

Container::Container(ContainerOptions options)
: options_(std::move(options))
{
}

Container::~Container()
{
  request_shutdown();
}

Node & Container::add_node(std::string name)
{
  if (wired_.load()) {
    throw Error(ErrorCode::kInvariantViolation, "add_node after the container started spinning");
  }
  for (const auto & n : nodes_) {
    if (n->name() == name) {
      throw Error(ErrorCode::kConfigInvalid, "duplicate node name '" + name + "'");
    }
  }
  nodes_.push_back(std::unique_ptr<Node>(new Node(std::move(name))));
  return *nodes_.back();
}

Route Container::route(const TopicName & topic) const noexcept
{
  const bool ipc = std::find(
    options_.ipc_topics.begin(), options_.ipc_topics.end(), topic.str()) !=
    options_.ipc_topics.end();
  return (options_.mode == RunMode::kComposedIpc && ipc) ? Route::kIntra : Route::kInter;
}

void Container::wire()
{
  wired_.store(true);

  auto find_spec = [this](const TopicName & topic) -> const TopicSpec * {
      for (const TopicSpec & t : options_.topics) {
        if (t.name == topic) {return &t;}
      }
      return nullptr;
    };

  auto topic_spec = [&find_spec](const TopicName & topic) -> const TopicSpec & {
      if (const TopicSpec * ts = find_spec(topic)) {
        return *ts;
      }
      throw Error(
        ErrorCode::kConfigInvalid,
        "topic '" + topic.str() + "' is routed across processes but has no topology entry");
    };

  // Intra channels for every IPC-routed topic touched by this container.
  auto channel_for =
    [this, &find_spec](const TopicName & topic, std::optional<QoSProfile> hint)
    {
      for (auto & ch : channels_) {
        if (ch->topic() == topic) {
          return ch;
        }
      }
      QoSProfile qos = reliable_qos();
      if (const TopicSpec * ts = find_spec(topic)) {
        qos = ts->qos;
      } else if (hint) {
        qos = *hint;
      }
      channels_.push_back(
        std::make_shared<intra::IntraChannel>(topic, qos, options_.reliable_block_timeout));
      return channels_.back();
    };

  // Subscriptions first so a subscriber's explicit QoS shapes the channel
  // it ends up sharing with publishers.
  for (auto & node : nodes_) {
    for (auto & sub : node->subscriptions_) {
      if (route(sub->topic) == Route::kIntra) {
        sub->queue = channel_for(sub->topic, sub->explicit_qos)->subscribe();
      } else {
        const TopicSpec & ts = topic_spec(sub->topic);
        const QoSProfile qos = sub->explicit_qos.value_or(ts.qos);
        sub->queue = std::make_shared<intra::SubscriberQueue>(
          qos, options_.reliable_block_timeout);
        sub->receiver = std::make_shared<inter::Receiver>(
          inter::Endpoint(options_.domain, sub->topic, kind_for(qos.reliability), ts.slot));
      }
    }
  }
  for (auto & node : nodes_) {
    for (auto & pub : node->publishers_) {
      pub->domain_ = options_.domain;
      if (route(pub->topic()) == Route::kIntra) {
        pub->channel_ = channel_for(pub->topic(), std::nullopt);
      } else {
        const TopicSpec & ts = topic_spec(pub->topic());
        pub->sender_ = std::make_shared<inter::Sender>(
          inter::Endpoint(options_.domain, pub->topic(), kind_for(ts.qos.reliability), ts.slot));
      }
    }
  }

  // Scheduling entities in declaration order: a node's timers, then its
  // subscriptions, node by node.
  for (auto & node : nodes_) {
    for (auto & timer : node->timers_) {
      auto e = std::make_unique<Entity>();
      e->timer = &timer;
      entities_.push_back(std::move(e));
    }
    for (auto & sub : node->subscriptions_) {
      auto e = std::make_unique<Entity>();
      e->sub = sub.get();
      entities_.push_back(std::move(e));
    }
  }
}

void Container::spin()
{
  if (spinning_.exchange(true)) {
    throw Error(ErrorCode::kInvariantViolation, "spin() may only be called once");
  }
  wire();

  for (auto & e : entities_) {
    if (e->sub) {
      e->sub->queue->set_ready_hook(
        [this] {
          std::lock_guard<std::mutex> lock(sched_mutex_);
          sched_cv_.notify_all();
        });
    }
  }

  std::vector<std::thread> readers;
  for (auto & node : nodes_) {
    for (auto & sub : node->subscriptions_) {
      if (sub->receiver) {
        readers.emplace_back([this, s = sub.get()] {reader_loop(*s);});
      }
    }
    for (auto & worker : node->backgrounds_) {
      background_threads_.emplace_back(
        [this, &worker] {
          try {
            worker(stop_);
          } catch (const std::exception & ex) {
            record_failure(ex.what());
          }
        });
    }
  }

  if (options_.executor.kind == ExecutorKind::kSingleThreaded) {
    run_single();
  } else {
    run_multi(std::max(1u, options_.executor.threads));
  }

  request_shutdown();
  for (auto & t : readers) {
    t.join();
  }
  for (auto & t : background_threads_) {
    t.join();
  }
  background_threads_.clear();

  std::lock_guard<std::mutex> lock(failure_mutex_);
  if (!first_failure_.empty()) {
    throw Error(ErrorCode::kCallbackFailed, first_failure_);
  }
}

void Container::request_shutdown()
{
  stop_.store(true);
  for (auto & ch : channels_) {
    ch->close();
  }
  for (auto & node : nodes_) {
    for (auto & sub : node->subscriptions_) {
      if (sub->queue) {
        sub->queue->close();
      }
    }
  }
  std::lock_guard<std::mutex> lock(sched_mutex_);
  sched_cv_.notify_all();
}

bool Container::shutdown_requested() const noexcept
{
  return stop_.load(std::memory_order_relaxed);
}

bool Container::serve(Entity & entity)
{
  try {
    if (entity.timer) {
      entity.timer->callback();
      return true;
    }
    auto env = entity.sub->queue->take();
    if (!env) {
      return false;
    }
    if (entity.in_flight.fetch_add(1, std::memory_order_acq_rel) != 0) {
      guard_violations_.fetch_add(1, std::memory_order_relaxed);
    }
    try {
      entity.sub->callback(*env);
    } catch (...) {
      entity.in_flight.fetch_sub(1, std::memory_order_acq_rel);
      throw;
    }
    entity.in_flight.fetch_sub(1, std::memory_order_acq_rel);
    return true;
  } catch (const std::exception & ex) {
    record_failure(ex.what());
    return true;
  } catch (...) {
    record_failure("callback raised a non-standard exception");
    return true;
  }
}

void Container::record_failure(const std::string & what)
{
  {
    std::lock_guard<std::mutex> lock(failure_mutex_);
    if (first_failure_.empty()) {
      first_failure_ = what;
    }
  }
  request_shutdown();
}

std::chrono::steady_clock::time_point Container::next_timer_deadline() const
{
  auto deadline = std::chrono::steady_clock::now() + kIdleSlice;
  for (const auto & e : entities_) {
    if (e->timer && !e->executing && e->next_fire < deadline) {
      deadline = e->next_fire;
    }
  }
  return deadline;
}

void Container::run_single()
{
  const auto start = std::chrono::steady_clock::now();
  for (auto & e : entities_) {
    if (e->timer) {
      e->next_fire = start + e->timer->period;
    }
  }
  while (!stop_.load(std::memory_order_relaxed)) {
    if (shutdown_signalled()) {
      request_shutdown();
      break;
    }
    bool served_any = false;
    for (auto & e : entities_) {
      if (stop_.load(std::memory_order_relaxed)) {
        break;
      }
      if (e->timer) {
        const auto now = std::chrono::steady_clock::now();
        if (now >= e->next_fire) {
          e->next_fire += e->timer->period;
          if (e->next_fire <= now) {
            e->next_fire = now + e->timer->period;
          }
          if (serve(*e)) {
            served_any = true;
          }
        }
      } else if (!e->sub->queue->empty()) {
        if (serve(*e)) {
          served_any = true;
        }
      }
    }
    if (!served_any && !stop_.load(std::memory_order_relaxed)) {
      std::unique_lock<std::mutex> lock(sched_mutex_);
      sched_cv_.wait_until(
        lock, next_timer_deadline(),
        [this] {
          if (stop_.load(std::memory_order_relaxed)) {return true;}
          for (const auto & e : entities_) {
            if (e->sub && !e->sub->queue->empty()) {return true;}
          }
          return false;
        });
    }
  }
}

void Container::run_multi(unsigned n_threads)
{
  const auto start = std::chrono::steady_clock::now();
  for (auto & e : entities_) {
    if (e->timer) {
      e->next_fire = start + e->timer->period;
    }
  }
  auto worker = [this] {
      std::unique_lock<std::mutex> lock(sched_mutex_);
      while (!stop_.load(std::memory_order_relaxed)) {
        const auto now = std::chrono::steady_clock::now();
        std::size_t pick = entities_.size();
        for (std::size_t k = 0; k < entities_.size(); ++k) {
          const std::size_t idx = (rr_next_ + k) % entities_.size();
          Entity & e = *entities_[idx];
          if (e.executing) {
            continue;
          }
          if (e.timer ? now >= e.next_fire : !e.sub->queue->empty()) {
            pick = idx;
            break;
          }
        }
        if (pick == entities_.size()) {
          if (shutdown_signalled()) {
            lock.unlock();
            request_shutdown();
            return;
          }
          sched_cv_.wait_until(lock, next_timer_deadline());
          continue;
        }
        Entity & e = *entities_[pick];
        e.executing = true;
        rr_next_ = (pick + 1) % entities_.size();
        if (e.timer) {
          e.next_fire += e.timer->period;
          if (e.next_fire <= now) {
            e.next_fire = now + e.timer->period;
          }
        }
        lock.unlock();
        serve(e);
        lock.lock();
        e.executing = false;
        sched_cv_.notify_all();
      }
    };
  std::vector<std::thread> workers;
  workers.reserve(n_threads);
  for (unsigned i = 0; i < n_threads; ++i) {
    workers.emplace_back(worker);
  }
  for (auto & t : workers) {
    t.join();
  }
}

void Container::reader_loop(Node::Subscription & sub)
{
  inter::Receiver & rx = *sub.receiver;
  while (!stop_.load(std::memory_order_relaxed)) {
    auto frame = rx.poll(kIdleSlice);
    if (!frame) {
      continue;
    }
    std::shared_ptr<const Payload> payload;
    try {
      payload = std::make_shared<const Payload>(
        wire::decode_payload(frame->type_tag, frame->payload));
    } catch (const Error &) {
      rx.counters().malformed.fetch_add(1, std::memory_order_relaxed);
      continue;
    }
    const MessageEnvelope env{
      std::move(frame->topic), frame->seq, frame->domain, std::move(payload)};
    while (!stop_.load(std::memory_order_relaxed)) {
      try {
        sub.queue->push(env);
        break;
      } catch (const Error & e) {
        if (e.code() != ErrorCode::kBackpressureTimeout) {
          record_failure(e.what());
          break;
        }
        // Reliable delivery: keep waiting; TCP flow control stalls the
        // publisher in the meantime.
      }
    }
  }
}

Container::TopicCounters Container::receive_counters(const TopicName & topic) const
{
  TopicCounters out;
  for (const auto & node : nodes_) {
    for (const auto & sub : node->subscriptions_) {
      if (sub->topic != topic) {
        continue;
      }
      if (sub->receiver) {
        const inter::DropCounters & c = sub->receiver->counters();
        out.wrong_domain += c.wrong_domain.load(std::memory_order_relaxed);
        out.queue_full += c.queue_full.load(std::memory_order_relaxed);
        out.malformed += c.malformed.load(std::memory_order_relaxed);
      }
      if (sub->queue) {
        out.queue_full += sub->queue->evictions();
      }
    }
  }
  return out;
}

std::uint64_t Container::guard_violations() const noexcept
{
  return guard_violations_.load(std::memory_order_relaxed);
}

}  // namespace ngbus::graph
