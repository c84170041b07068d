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

#ifndef NGBUS__GRAPH__CONTAINER_HPP_
#define NGBUS__GRAPH__CONTAINER_HPP_

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "ngbus/graph/node.hpp"
#include "ngbus/graph/topology.hpp"

namespace ngbus::graph {

enum class Route
{
  kIntra,
  kInter,
};

struct ContainerOptions
{
  DomainId domain;
  RunMode mode{RunMode::kComposedIpc};
  ExecutorSpec executor;
  std::vector<TopicSpec> topics;
  std::vector<std::string> ipc_topics;
  std::chrono::nanoseconds reliable_block_timeout{std::chrono::seconds(1)};
};

/// Derives container options from a topology (used both by the composed
/// harness and by single-node standalone processes).
ContainerOptions options_from(const Topology & topo);

/// Hosts a set of nodes under one executor.
///
/// For a topic published and subscribed inside the container, delivery is
/// in-process and zero-copy iff the topic is IPC-enabled and the mode is
/// composed-ipc; every other subscription reads from a loopback endpoint and
/// every other publication writes to one. spin() blocks until shutdown and
/// rethrows the first callback failure as Error{kCallbackFailed}.
class Container
{
public:
  explicit Container(ContainerOptions options);
  ~Container();

  Container(const Container &) = delete;
  Container & operator=(const Container &) = delete;

  Node & add_node(std::string name);

  /// Transport a topic takes between two endpoints inside this container.
  Route route(const TopicName & topic) const noexcept;

  /// Runs the executor until request_shutdown() (or a process signal flagged
  /// via install_signal_handlers). Single-threaded executors serve ready
  /// entities fair round-robin; multi-threaded executors run up to N
  /// callbacks concurrently, never the same subscription concurrently with
  /// itself.
  void spin();

  void request_shutdown();
  bool shutdown_requested() const noexcept;

  struct TopicCounters
  {
    std::uint64_t wrong_domain{0};
    std::uint64_t queue_full{0};
    std::uint64_t malformed{0};
  };

  /// Receive-path counters summed over this container's subscriptions to
  /// `topic` (all zero for intra-routed topics: nothing to parse, nothing
  /// to drop).
  TopicCounters receive_counters(const TopicName & topic) const;

  /// Subscription-callback mutual-exclusion violations observed (must be 0).
  std::uint64_t guard_violations() const noexcept;

  const ContainerOptions & options() const noexcept {return options_;}

private:
  struct Entity;

  void wire();
  void run_single();
  void run_multi(unsigned n_threads);
  bool serve(Entity & entity);
  void record_failure(const std::string & what);
  void reader_loop(Node::Subscription & sub);
  std::chrono::steady_clock::time_point next_timer_deadline() const;

  ContainerOptions options_;
  std::vector<std::unique_ptr<Node>> nodes_;

  struct Entity
  {
    Node::TimerSpec * timer{nullptr};
    Node::Subscription * sub{nullptr};
    std::chrono::steady_clock::time_point next_fire{};
    bool executing{false};
    std::atomic<unsigned> in_flight{0};
  };

  std::vector<std::unique_ptr<Entity>> entities_;
  std::vector<std::shared_ptr<intra::IntraChannel>> channels_;
  std::vector<std::thread> background_threads_;

  mutable std::mutex sched_mutex_;
  std::condition_variable sched_cv_;
  std::size_t rr_next_{0};

  std::atomic<bool> stop_{false};
  std::atomic<bool> wired_{false};
  std::atomic<bool> spinning_{false};
  std::atomic<std::uint64_t> guard_violations_{0};

  std::mutex failure_mutex_;
  std::string first_failure_;
};

/// Installs idempotent SIGINT/SIGTERM handlers that flag every container to
/// shut down at its next scheduling point.
void install_signal_handlers();

/// True once a flagged signal has been received.
bool shutdown_signalled() noexcept;

}  // namespace ngbus::graph

#endif  // NGBUS__GRAPH__CONTAINER_HPP_
