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

#include <doctest.h>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

#include "ngbus/bench/runner.hpp"
#include "ngbus/errors.hpp"
#include "ngbus/graph/container.hpp"
#include "ngbus/graph/topology.hpp"

using namespace ngbus;
using namespace ngbus::graph;
using namespace std::chrono_literals;

namespace {

std::unique_ptr<Payload> tiny_imu(std::int64_t stamp)
{
  return std::make_unique<Payload>(
    Imu(Header{Time{stamp}, ""}, {1, 0, 0, 0}, {0, 0, 0}, {0, 0, 0}));
}

ContainerOptions ipc_options(std::vector<std::string> ipc, ExecutorSpec exec)
{
  ContainerOptions opts;
  opts.domain = DomainId{0};
  opts.mode = RunMode::kComposedIpc;
  opts.executor = exec;
  opts.ipc_topics = std::move(ipc);
  return opts;
}

}  // namespace

TEST_SUITE_BEGIN("graph_runtime");

TEST_CASE("topology json round-trip and NGB_DOMAIN override")
{
  bench::RunOptions opts;
  opts.case_id = 2;
  opts.mode = RunMode::kComposedIpc;
  opts.samples = 10;
  const Topology topo = bench::build_topology(opts);

  CHECK(topo.nodes.size() == 7);
  CHECK(topo.topics.size() == 7);
  CHECK(topo.ipc_topics == std::vector<std::string>{"/image_raw"});

  const std::string text = topo.to_json_string();
  const Topology back = Topology::from_json_string(text);
  CHECK(back.to_json_string() == text);

  Topology overridden = back;
  ::setenv(kDomainEnvVar, "3", 1);
  apply_domain_override(overridden);
  ::unsetenv(kDomainEnvVar);
  CHECK(overridden.domain.id == 3);
}

TEST_CASE("topology validation rejects bad configurations")
{
  bench::RunOptions opts;
  opts.samples = 10;
  Topology topo = bench::build_topology(opts);

  Topology dup_node = topo;
  dup_node.nodes.push_back(dup_node.nodes.front());
  CHECK_THROWS_AS(dup_node.validate(), Error);

  Topology dup_topic = topo;
  dup_topic.topics.push_back(dup_topic.topics.front());
  CHECK_THROWS_AS(dup_topic.validate(), Error);

  Topology gap = topo;
  gap.topics.front().slot = 5;
  CHECK_THROWS_AS(gap.validate(), Error);

  Topology bad_ipc = topo;
  bad_ipc.ipc_topics = {"/not_declared"};
  CHECK_THROWS_AS(bad_ipc.validate(), Error);
}

TEST_CASE("route: intra iff composed-ipc and ipc-enabled")
{
  bench::RunOptions opts;
  opts.case_id = 2;
  opts.samples = 1;

  opts.mode = RunMode::kComposedIpc;
  Container ipc(options_from(bench::build_topology(opts)));
  CHECK(ipc.route(TopicName::validate("/image_raw")) == Route::kIntra);
  CHECK(ipc.route(TopicName::validate("/joint_states")) == Route::kInter);

  opts.mode = RunMode::kComposedNoIpc;
  Container noipc(options_from(bench::build_topology(opts)));
  CHECK(noipc.route(TopicName::validate("/image_raw")) == Route::kInter);
  CHECK(noipc.route(TopicName::validate("/joint_states")) == Route::kInter);
}

TEST_CASE("single-threaded executor serves always-ready entities fairly")
{
  Container c(ipc_options({}, ExecutorSpec{ExecutorKind::kSingleThreaded, 1}));
  Node & node = c.add_node("busy");
  std::atomic<std::uint64_t> a{0}, b{0};
  node.add_timer(0ns, [&a] {a.fetch_add(1);});
  node.add_timer(0ns, [&b] {b.fetch_add(1);});

  std::thread stopper(
    [&c] {
      std::this_thread::sleep_for(200ms);
      c.request_shutdown();
    });
  c.spin();
  stopper.join();

  CHECK(a.load() > 100);
  const std::int64_t diff =
    static_cast<std::int64_t>(a.load()) - static_cast<std::int64_t>(b.load());
  CHECK(std::abs(diff) <= 1);
}

TEST_CASE("in-process pipeline: publish -> subscribe with zero copies")
{
  Container c(ipc_options({"/imu/raw"}, ExecutorSpec{ExecutorKind::kSingleThreaded, 1}));
  Node & pub_node = c.add_node("producer");
  Node & sub_node = c.add_node("consumer");

  auto pub = pub_node.advertise(TopicName::validate("/imu/raw"));
  std::atomic<std::uint64_t> received{0};
  std::atomic<std::uint64_t> copies{0};
  sub_node.subscribe(
    TopicName::validate("/imu/raw"), sensor_qos(),
    [&](const MessageEnvelope & env) {
      copies.fetch_add(payload_diag(*env.payload).deep_copy_count());
      received.fetch_add(1);
    });

  std::atomic<bool> sent{false};
  pub_node.add_timer(
    1ms,
    [&] {
      if (!sent.exchange(true)) {
        for (int i = 0; i < 5; ++i) {
          pub->publish(tiny_imu(i));
        }
      }
    });

  std::thread stopper(
    [&] {
      const auto give_up = std::chrono::steady_clock::now() + 2s;
      while (received.load() < 5 && std::chrono::steady_clock::now() < give_up) {
        std::this_thread::sleep_for(5ms);
      }
      c.request_shutdown();
    });
  c.spin();
  stopper.join();

  CHECK(received.load() == 5);
  CHECK(copies.load() == 0);
}

TEST_CASE("multi-threaded executor overlaps independent slow callbacks")
{
  Container c(ipc_options({"/a", "/b"}, ExecutorSpec{ExecutorKind::kMultiThreaded, 4}));
  Node & pub_node = c.add_node("producer");
  Node & sub_node = c.add_node("consumer");
  auto pub_a = pub_node.advertise(TopicName::validate("/a"));
  auto pub_b = pub_node.advertise(TopicName::validate("/b"));

  std::atomic<int> finished{0};
  std::atomic<std::int64_t> start_ns{0};
  std::atomic<std::int64_t> end_ns{0};
  auto slow = [&finished, &start_ns, &end_ns](const MessageEnvelope &) {
      const auto t0 = std::chrono::steady_clock::now().time_since_epoch().count();
      std::int64_t expected = 0;
      start_ns.compare_exchange_strong(expected, t0);
      std::this_thread::sleep_for(100ms);
      end_ns.store(std::chrono::steady_clock::now().time_since_epoch().count());
      finished.fetch_add(1);
    };
  sub_node.subscribe(TopicName::validate("/a"), sensor_qos(), slow);
  sub_node.subscribe(TopicName::validate("/b"), sensor_qos(), slow);

  std::atomic<bool> sent{false};
  pub_node.add_timer(
    1ms,
    [&] {
      if (!sent.exchange(true)) {
        pub_a->publish(tiny_imu(1));
        pub_b->publish(tiny_imu(2));
      }
    });

  std::thread stopper(
    [&] {
      const auto give_up = std::chrono::steady_clock::now() + 3s;
      while (finished.load() < 2 && std::chrono::steady_clock::now() < give_up) {
        std::this_thread::sleep_for(5ms);
      }
      c.request_shutdown();
    });
  c.spin();
  stopper.join();

  REQUIRE(finished.load() == 2);
  const double elapsed_ms =
    static_cast<double>(end_ns.load() - start_ns.load()) / 1e6;
  // Two 100 ms callbacks on independent subscriptions: wall time tracks the
  // max, not the sum.
  CHECK(elapsed_ms < 150.0);
}

TEST_CASE("a subscription is never invoked concurrently with itself")
{
  Container c(ipc_options({"/imu/raw"}, ExecutorSpec{ExecutorKind::kMultiThreaded, 4}));
  Node & pub_node = c.add_node("producer");
  Node & sub_node = c.add_node("consumer");
  auto pub = pub_node.advertise(TopicName::validate("/imu/raw"));

  std::atomic<int> inside{0};
  std::atomic<std::uint64_t> overlaps{0};
  std::atomic<std::uint64_t> handled{0};
  sub_node.subscribe(
    TopicName::validate("/imu/raw"), QoSProfile{Reliability::kBestEffort, 16},
    [&](const MessageEnvelope &) {
      if (inside.fetch_add(1) != 0) {
        overlaps.fetch_add(1);
      }
      std::this_thread::sleep_for(100us);
      inside.fetch_sub(1);
      handled.fetch_add(1);
    });
  pub_node.add_timer(0ns, [&pub] {pub->publish(tiny_imu(0));});

  std::thread stopper(
    [&c] {
      std::this_thread::sleep_for(400ms);
      c.request_shutdown();
    });
  c.spin();
  stopper.join();

  CHECK(handled.load() > 100);
  CHECK(overlaps.load() == 0);
  CHECK(c.guard_violations() == 0);
}

TEST_CASE("callback failures shut the container down loudly")
{
  Container c(ipc_options({}, ExecutorSpec{ExecutorKind::kSingleThreaded, 1}));
  Node & node = c.add_node("faulty");
  node.add_timer(1ms, [] {throw std::runtime_error("sensor exploded");});
  try {
    c.spin();
    FAIL("expected CALLBACK_FAILED");
  } catch (const Error & e) {
    CHECK(e.code() == ErrorCode::kCallbackFailed);
    CHECK(std::string(e.what()).find("sensor exploded") != std::string::npos);
  }
}

TEST_CASE("empty container responds to shutdown promptly")
{
  Container c(ipc_options({}, ExecutorSpec{ExecutorKind::kSingleThreaded, 1}));
  const auto t0 = std::chrono::steady_clock::now();
  std::thread stopper(
    [&c] {
      std::this_thread::sleep_for(50ms);
      c.request_shutdown();
    });
  c.spin();
  stopper.join();
  CHECK(std::chrono::steady_clock::now() - t0 < 1s);
}

TEST_SUITE_END();
