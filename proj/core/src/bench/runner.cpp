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

#include "ngbus/bench/runner.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <memory>
#include <optional>
#include <thread>

#include "ngbus/bench/collector.hpp"
#include "ngbus/bench/gc_sim.hpp"
#include "ngbus/errors.hpp"
#include "ngbus/graph/container.hpp"
#include "ngbus/graph/launch.hpp"
#include "ngbus/nodes/graph_builder.hpp"
#include "ngbus/time.hpp"

namespace ngbus::bench {

namespace fs = std::filesystem;

unsigned default_thread_count()
{
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  return std::min(hw, 4u);
}

std::string default_node_binary()
{
  char buf[4096];
  const ssize_t n = ::readlink("/proc/self/exe", buf, sizeof(buf) - 1);
  if (n <= 0) {
    return "ngb-node";
  }
  buf[n] = '\0';
  return (fs::path(buf).parent_path() / "ngb-node").string();
}

namespace {

QoSProfile image_profile(Reliability reliability)
{
  return reliability == Reliability::kReliable ? reliable_qos() : sensor_qos();
}

graph::TopicSpec topic_spec(
  const char * name, PayloadType type, QoSProfile qos, std::size_t slot)
{
  return graph::TopicSpec{TopicName::validate(name), type, qos, slot};
}

void validate_options(const RunOptions & opts)
{
  if (opts.case_id != 1 && opts.case_id != 2) {
    throw Error(ErrorCode::kConfigInvalid, "case must be 1 or 2");
  }
  if (opts.samples < 1) {
    throw Error(ErrorCode::kConfigInvalid, "samples must be >= 1");
  }
  if (opts.fps <= 0.0) {
    throw Error(ErrorCode::kConfigInvalid, "fps must be positive");
  }
  if (opts.width < 3 || opts.height < 3) {
    throw Error(ErrorCode::kConfigInvalid, "camera frames must be at least 3x3");
  }
}

}  // namespace

graph::Topology build_topology(const RunOptions & opts)
{
  validate_options(opts);
  graph::Topology topo;
  topo.scenario = opts.case_id == 1 ? "case1" : "case2";
  topo.domain = opts.domain;
  topo.mode = opts.mode;
  topo.sample_target = opts.samples;
  topo.warmup_discard = opts.warmup;
  topo.seed = opts.seed;
  topo.gc_port = opts.gc_port;
  topo.out_dir = opts.out_dir;

  if (opts.mode == graph::RunMode::kStandalone) {
    topo.executor = graph::ExecutorSpec{graph::ExecutorKind::kSingleThreaded, 1};
  } else {
    topo.executor = graph::ExecutorSpec{
      graph::ExecutorKind::kMultiThreaded,
      opts.threads == 0 ? default_thread_count() : opts.threads};
  }

  if (opts.mode == graph::RunMode::kComposedIpc) {
    topo.ipc_topics = {nodes::kTopicImageRaw};
  }

  const QoSProfile image_qos = image_profile(opts.image_qos);
  topo.topics.push_back(topic_spec(nodes::kTopicImageRaw, PayloadType::kImage, image_qos, 0));

  topo.nodes.push_back(
    graph::NodeSpec{
      "camera", "camera",
      {{"width", static_cast<double>(opts.width)},
        {"height", static_cast<double>(opts.height)},
        {"fps", opts.fps},
        {"seed", static_cast<double>(opts.seed)}}});

  if (opts.case_id == 1) {
    topo.nodes.push_back(graph::NodeSpec{"sobel", "sobel_sink", {{"publish_gradient", 0}}});
  } else {
    topo.topics.push_back(
      topic_spec(nodes::kTopicImageGradient, PayloadType::kImage, reliable_qos(), 1));
    topo.topics.push_back(
      topic_spec(nodes::kTopicJointStates, PayloadType::kJointState, sensor_qos(), 2));
    topo.topics.push_back(topic_spec(nodes::kTopicImuRaw, PayloadType::kImu, sensor_qos(), 3));
    topo.topics.push_back(topic_spec(nodes::kTopicImuData, PayloadType::kImu, sensor_qos(), 4));
    topo.topics.push_back(
      topic_spec(nodes::kTopicCmdHead, PayloadType::kJointState, sensor_qos(), 5));
    topo.topics.push_back(
      topic_spec(nodes::kTopicGameState, PayloadType::kGameState, reliable_qos(), 6));

    topo.nodes.push_back(graph::NodeSpec{"sobel", "sobel_sink", {{"publish_gradient", 1}}});
    topo.nodes.push_back(graph::NodeSpec{"cm730", "cm730", {{"rate_hz", 125.0}}});
    topo.nodes.push_back(graph::NodeSpec{"fusion", "imu_fusion", {{"alpha", 0.98}}});
    topo.nodes.push_back(graph::NodeSpec{"head_controller", "head_controller", {}});
    topo.nodes.push_back(graph::NodeSpec{"monitor", "monitor", {}});
    topo.nodes.push_back(graph::NodeSpec{"gc_bridge", "gc_bridge", {}});
  }

  topo.validate();
  return topo;
}

namespace {

struct CollectedRun
{
  std::vector<LatencySample> samples;
  SinkDiagnostics diagnostics;
  bool reached_target{false};
};

CollectedRun run_composed(const RunOptions & opts, const graph::Topology & topo)
{
  graph::Container container(graph::options_from(topo));
  SampleCollector collector(
    topo.domain, topo.warmup_discard + topo.sample_target,
    [&container] {container.request_shutdown();});
  nodes::build_all_nodes(container, topo, &collector);

  std::optional<GcTrafficSource> gc_source;
  if (topo.find_topic(nodes::kTopicGameState) != nullptr) {
    gc_source.emplace(topo.gc_port, 2.0, topo.seed);
  }

  const double expected_s =
    static_cast<double>(topo.warmup_discard + topo.sample_target) / opts.fps;
  const auto deadline = std::chrono::steady_clock::now() +
    std::chrono::milliseconds(
    static_cast<std::int64_t>(expected_s * opts.deadline_factor * 1000.0) + 30000);

  std::atomic<bool> done{false};
  std::thread watchdog(
    [&container, &done, deadline] {
      while (!done.load(std::memory_order_relaxed)) {
        if (std::chrono::steady_clock::now() >= deadline || graph::shutdown_signalled()) {
          container.request_shutdown();
          return;
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(100));
      }
    });

  container.spin();
  done.store(true);
  watchdog.join();
  gc_source.reset();

  CollectedRun run;
  SinkOutcome outcome = collector.take_outcome();
  run.reached_target = outcome.samples.size() >= topo.warmup_discard + topo.sample_target;
  run.samples = std::move(outcome.samples);
  run.diagnostics.image_deliveries = outcome.image_deliveries;
  run.diagnostics.image_copy_total = outcome.image_copy_total;
  run.diagnostics.cross_domain_surfaced = outcome.cross_domain_surfaced;
  const auto counters =
    container.receive_counters(TopicName::validate(nodes::kTopicImageRaw));
  run.diagnostics.wrong_domain = counters.wrong_domain;
  run.diagnostics.queue_full = counters.queue_full;
  run.diagnostics.malformed = counters.malformed;
  return run;
}

CollectedRun run_standalone(
  const RunOptions & opts, const graph::Topology & topo, const std::string & topology_path)
{
  const std::string node_binary =
    opts.node_binary.empty() ? default_node_binary() : opts.node_binary;
  if (!fs::exists(node_binary)) {
    throw Error(ErrorCode::kSpawnFailed, "node binary '" + node_binary + "' does not exist");
  }

  graph::StandaloneLaunch launch(topo, node_binary, topology_path);

  std::optional<GcTrafficSource> gc_source;
  if (topo.find_topic(nodes::kTopicGameState) != nullptr) {
    gc_source.emplace(topo.gc_port, 2.0, topo.seed);
  }

  const double expected_s =
    static_cast<double>(topo.warmup_discard + topo.sample_target) / opts.fps;
  const auto deadline_ms = std::chrono::milliseconds(
    static_cast<std::int64_t>(expected_s * opts.deadline_factor * 1000.0) + 30000);

  bool timed_out = false;
  try {
    const int status = launch.wait_for("sobel", deadline_ms);
    if (status != 0) {
      launch.terminate_all();
      throw Error(
        ErrorCode::kCallbackFailed,
        "sink process exited with status " + std::to_string(status));
    }
  } catch (const Error & e) {
    if (e.code() != ErrorCode::kTimeout) {
      launch.terminate_all();
      throw;
    }
    timed_out = true;
  }
  // SIGTERM makes a live sink flush its partial sample file before exiting.
  launch.terminate_all();
  gc_source.reset();

  CollectedRun run;
  const fs::path dir(topo.out_dir);
  const fs::path raw = dir / "sink_raw.csv";
  const fs::path meta_path = dir / "sink_meta.json";
  if (fs::exists(raw)) {
    run.samples = read_sink_raw(raw.string());
  }
  if (fs::exists(meta_path)) {
    const SinkMeta meta = read_sink_meta(meta_path.string());
    run.diagnostics.image_deliveries = meta.image_deliveries;
    run.diagnostics.image_copy_total = meta.image_copy_total;
    run.diagnostics.cross_domain_surfaced = meta.cross_domain_surfaced;
    run.diagnostics.wrong_domain = meta.wrong_domain;
    run.diagnostics.queue_full = meta.queue_full;
    run.diagnostics.malformed = meta.malformed;
    run.reached_target = meta.reached_target && !timed_out;
  }
  return run;
}

}  // namespace

BenchReport run_case(const RunOptions & opts)
{
  validate_options(opts);
  graph::Topology topo = build_topology(opts);

  fs::create_directories(opts.out_dir);
  const std::string topology_path = (fs::path(opts.out_dir) / "topology.json").string();
  topo.save(topology_path);

  CollectedRun run = opts.mode == graph::RunMode::kStandalone ?
    run_standalone(opts, topo, topology_path) : run_composed(opts, topo);

  // Post-warmup slice; negative latencies (wall-clock steps) stay in the raw
  // rows but are counted and excluded from the distribution.
  std::vector<LatencySample> post_warmup;
  if (run.samples.size() > topo.warmup_discard) {
    post_warmup.assign(
      run.samples.begin() + static_cast<std::ptrdiff_t>(topo.warmup_discard),
      run.samples.end());
  }
  std::vector<std::int64_t> clean;
  std::uint64_t anomalies = 0;
  clean.reserve(post_warmup.size());
  for (const LatencySample & s : post_warmup) {
    if (s.latency_ns() < 0) {
      ++anomalies;
    } else {
      clean.push_back(s.latency_ns());
    }
  }

  BenchReport report;
  report.scenario = topo.scenario;
  report.mode = graph::to_string(topo.mode);
  report.sample_count = clean.size();
  report.discarded_warmup = std::min<std::uint64_t>(topo.warmup_discard, run.samples.size());
  report.anomalies = anomalies;
  if (!clean.empty()) {
    report.stats = compute_stats(clean);
  }
  report.diagnostics = run.diagnostics;
  report.topology_json = topo.to_json_string();
  report.width = opts.width;
  report.height = opts.height;
  report.fps = opts.fps;
  report.threads = topo.executor.threads;
  report.image_qos = opts.image_qos == Reliability::kReliable ? "reliable" : "best-effort";
  report.seed = opts.seed;
  char host[256] = {0};
  ::gethostname(host, sizeof(host) - 1);
  report.host = host;
  report.cpu_count = std::max(1u, std::thread::hardware_concurrency());
  report.timestamp = to_rfc3339(now());

  const fs::path dir(opts.out_dir);
  write_samples_csv(post_warmup, (dir / "samples.csv").string());
  if (!clean.empty()) {
    write_plotdata(clean, (dir / "plotdata.txt").string());
  }
  write_report(report, (dir / "report.json").string());

  if (!run.reached_target) {
    throw Error(
      ErrorCode::kTimeout,
      "collected " + std::to_string(run.samples.size()) + " of " +
      std::to_string(topo.warmup_discard + topo.sample_target) +
      " observations before the deadline; partial outputs are in " + opts.out_dir);
  }
  return report;
}

}  // namespace ngbus::bench
