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

// End-to-end acceptance suite. Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero if any criterion fails. Criteria 1-3 run
// the full benchmark protocol (640x480 @ 30 fps, 10000 samples per run, three
// repetitions) through the real bench CLI and take the better part of an
// hour; pass a list of criterion numbers to run a subset.

#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "ngbus/bench/collector.hpp"
#include "ngbus/bench/compare.hpp"
#include "ngbus/bench/report.hpp"
#include "ngbus/bench/runner.hpp"
#include "ngbus/bench/stats.hpp"
#include "ngbus/errors.hpp"
#include "ngbus/gc/codec.hpp"
#include "ngbus/graph/container.hpp"
#include "ngbus/graph/launch.hpp"
#include "ngbus/intra/channel.hpp"
#include "ngbus/inter/sender.hpp"
#include "ngbus/nodes/graph_builder.hpp"
#include "ngbus/nodes/ops.hpp"
#include "ngbus/nodes/quat.hpp"
#include "ngbus/wire/codec.hpp"

#include "../common/generators.hpp"
#include "../common/golden.hpp"
#include "../common/oracles.hpp"

extern char ** environ;

namespace {

using namespace ngbus;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

std::string env_or(const char * name, const std::string & fallback)
{
  const char * v = std::getenv(name);
  return v == nullptr ? fallback : std::string(v);
}

int run_command(const std::vector<std::string> & args)
{
  std::string shown;
  for (const auto & a : args) {
    shown += a + " ";
  }
  std::printf("  $ %s\n", shown.c_str());
  std::fflush(stdout);

  std::vector<char *> argv;
  std::vector<std::string> copy = args;
  argv.reserve(copy.size() + 1);
  for (auto & a : copy) {
    argv.push_back(a.data());
  }
  argv.push_back(nullptr);
  pid_t pid = -1;
  if (::posix_spawn(&pid, copy[0].c_str(), nullptr, nullptr, argv.data(), environ) != 0) {
    return -1;
  }
  int status = 0;
  ::waitpid(pid, &status, 0);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

struct Failure : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string & what)
{
  if (!ok) {
    throw Failure(what);
  }
}

std::string fmt(const char * f, ...)
{
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof(buf), f, ap);
  va_end(ap);
  return buf;
}

// ---------------------------------------------------------------------------
// Benchmark-protocol criteria (1-3). One shared set of runs.

struct BenchmarkRuns
{
  // Per repetition: reports by mode.
  std::vector<std::map<std::string, bench::BenchReport>> case1;
  std::optional<bench::BenchReport> case2_ipc;
};

BenchmarkRuns g_runs;
bool g_runs_done = false;

void execute_benchmark_runs()
{
  if (g_runs_done) {
    return;
  }
  const std::string bench_bin = env_or("NGBUS_BENCH_BIN", "tools/bench");
  const fs::path base = fs::current_path() / "acceptance_out";
  fs::remove_all(base);

  const std::vector<std::string> modes{"standalone", "composed-noipc", "composed-ipc"};
  for (int rep = 1; rep <= 3; ++rep) {
    std::map<std::string, bench::BenchReport> by_mode;
    for (const std::string & mode : modes) {
      const fs::path out = base / ("case1_rep" + std::to_string(rep));
      const auto t0 = Clock::now();
      const int rc = run_command(
        {bench_bin, "run", "--case", "1", "--mode", mode, "--samples", "10000",
          "--width", "640", "--height", "480", "--fps", "30",
          "--out", out.string()});
      const double secs =
        std::chrono::duration<double>(Clock::now() - t0).count();
      require(rc == 0, "bench run case1 " + mode + " failed with exit " + std::to_string(rc));
      const bench::BenchReport report =
        bench::read_report((out / ("case1_" + mode) / "report.json").string());
      std::printf(
        "  [rep %d] case1 %-16s median %8.3f ms  IQR %8.3f ms  (%.0f s)\n",
        rep, mode.c_str(), static_cast<double>(report.stats.median) / 1e6,
        static_cast<double>(report.stats.iqr()) / 1e6, secs);
      std::fflush(stdout);
      by_mode[mode] = report;
    }
    g_runs.case1.push_back(std::move(by_mode));
  }

  const fs::path out2 = base / "case2";
  const int rc = run_command(
    {bench_bin, "run", "--case", "2", "--mode", "composed-ipc", "--samples", "10000",
      "--width", "640", "--height", "480", "--fps", "30", "--out", out2.string()});
  require(rc == 0, "bench run case2 composed-ipc failed with exit " + std::to_string(rc));
  g_runs.case2_ipc =
    bench::read_report((out2 / "case2_composed-ipc" / "report.json").string());
  std::printf(
    "  case2 composed-ipc median %8.3f ms\n",
    static_cast<double>(g_runs.case2_ipc->stats.median) / 1e6);
  g_runs_done = true;
}

std::string criterion1()
{
  execute_benchmark_runs();
  std::string detail;
  for (std::size_t rep = 0; rep < g_runs.case1.size(); ++rep) {
    const auto & by_mode = g_runs.case1[rep];
    const std::int64_t solo = by_mode.at("standalone").stats.median;
    const std::int64_t noipc = by_mode.at("composed-noipc").stats.median;
    const std::int64_t ipc = by_mode.at("composed-ipc").stats.median;
    const double reduction =
      static_cast<double>(solo - ipc) / static_cast<double>(solo);
    detail += fmt(
      "rep%zu ipc %.2fms solo %.2fms noipc %.2fms red %.1f%%; ",
      rep + 1, ipc / 1e6, solo / 1e6, noipc / 1e6, reduction * 100);
    require(ipc < solo, fmt("rep %zu: median(ipc) !< median(standalone)", rep + 1));
    require(ipc < noipc, fmt("rep %zu: median(ipc) !< median(noipc)", rep + 1));
    require(
      reduction >= 0.10,
      fmt("rep %zu: ipc reduction %.1f%% below 10%%", rep + 1, reduction * 100));
  }
  return detail;
}

std::string criterion2()
{
  execute_benchmark_runs();
  std::string detail;
  for (std::size_t rep = 0; rep < g_runs.case1.size(); ++rep) {
    const auto & by_mode = g_runs.case1[rep];
    const std::int64_t solo_iqr = by_mode.at("standalone").stats.iqr();
    const std::int64_t ipc_iqr = by_mode.at("composed-ipc").stats.iqr();
    detail += fmt("rep%zu IQR ipc %.2fms solo %.2fms; ", rep + 1, ipc_iqr / 1e6, solo_iqr / 1e6);
    require(
      ipc_iqr <= solo_iqr,
      fmt("rep %zu: IQR(ipc) %.2fms > IQR(standalone) %.2fms",
        rep + 1, ipc_iqr / 1e6, solo_iqr / 1e6));
  }
  return detail;
}

std::string criterion3()
{
  execute_benchmark_runs();
  std::vector<std::int64_t> case1_medians;
  for (const auto & by_mode : g_runs.case1) {
    case1_medians.push_back(by_mode.at("composed-ipc").stats.median);
  }
  std::sort(case1_medians.begin(), case1_medians.end());
  const std::int64_t case1_med = case1_medians[case1_medians.size() / 2];
  const std::int64_t case2_med = g_runs.case2_ipc->stats.median;
  const double rel = std::abs(static_cast<double>(case2_med - case1_med)) /
    static_cast<double>(case1_med);
  require(
    rel <= 0.25,
    fmt("case2 ipc median %.2fms departs %.1f%% from case1 ipc %.2fms",
      case2_med / 1e6, rel * 100, case1_med / 1e6));
  return fmt(
    "case1 ipc %.2fms vs case2 ipc %.2fms (%.1f%% apart)",
    case1_med / 1e6, case2_med / 1e6, rel * 100);
}

// ---------------------------------------------------------------------------
// Criterion 4: zero-copy accounting in every mode, both cases.

std::string criterion4()
{
  const std::string bench_bin = env_or("NGBUS_BENCH_BIN", "tools/bench");
  const fs::path base = fs::current_path() / "acceptance_out_c4";
  fs::remove_all(base);
  std::string detail;
  for (int case_id : {1, 2}) {
    for (const std::string mode : {"standalone", "composed-noipc", "composed-ipc"}) {
      const fs::path out = base / ("case" + std::to_string(case_id));
      const int rc = run_command(
        {bench_bin, "run", "--case", std::to_string(case_id), "--mode", mode,
          "--samples", "200", "--warmup", "10", "--width", "64", "--height", "48",
          "--fps", "200", "--gc-port", "18930", "--out", out.string()});
      require(rc == 0, fmt("case %d %s exited %d", case_id, mode.c_str(), rc));
      const bench::BenchReport r = bench::read_report(
        (out / ("case" + std::to_string(case_id) + "_" + mode) / "report.json").string());
      require(r.diagnostics.image_deliveries > 0, "no image deliveries recorded");
      if (mode == "composed-ipc") {
        require(
          r.diagnostics.image_copy_total == 0,
          fmt("case %d ipc: copy_total %llu != 0", case_id,
            static_cast<unsigned long long>(r.diagnostics.image_copy_total)));
      } else {
        require(
          r.diagnostics.image_copy_total >= r.diagnostics.image_deliveries,
          fmt("case %d %s: copies %llu < deliveries %llu", case_id, mode.c_str(),
            static_cast<unsigned long long>(r.diagnostics.image_copy_total),
            static_cast<unsigned long long>(r.diagnostics.image_deliveries)));
      }
      detail += fmt(
        "c%d/%s %llu/%llu; ", case_id, mode.c_str(),
        static_cast<unsigned long long>(r.diagnostics.image_copy_total),
        static_cast<unsigned long long>(r.diagnostics.image_deliveries));
    }
  }
  return detail;
}

// ---------------------------------------------------------------------------
// Criterion 5: domain isolation across two full stand-alone stacks.

std::string criterion5()
{
  const std::string node_bin = env_or("NGBUS_NODE_BIN", "tools/ngb-node");
  const fs::path base = fs::current_path() / "acceptance_out_c5";
  fs::remove_all(base);

  auto make_stack = [&](std::uint32_t domain) {
      bench::RunOptions opts;
      opts.case_id = 1;
      opts.mode = graph::RunMode::kStandalone;
      opts.samples = 1000000;  // run until stopped
      opts.warmup = 0;
      opts.width = 64;
      opts.height = 48;
      opts.fps = 60.0;
      opts.domain = DomainId{domain};
      opts.out_dir = (base / ("domain" + std::to_string(domain))).string();
      graph::Topology topo = bench::build_topology(opts);
      fs::create_directories(opts.out_dir);
      const std::string path = opts.out_dir + "/topology.json";
      topo.save(path);
      return std::pair<graph::Topology, std::string>(topo, path);
    };

  auto [topo0, path0] = make_stack(0);
  auto [topo1, path1] = make_stack(1);

  graph::StandaloneLaunch stack0(topo0, node_bin, path0);
  graph::StandaloneLaunch stack1(topo1, node_bin, path1);

  // Both stacks share topic names; the domain id separates them. A probe
  // plays the part of a misconfigured participant: correctly formed frames
  // tagged with the *other* stack's domain id, fired at each sink's port,
  // must be counted and rejected, never surfaced.
  std::atomic<bool> stop_probe{false};
  std::thread probe(
    [&stop_probe] {
      const TopicName topic = TopicName::validate(nodes::kTopicImageRaw);
      const Image img = nodes::generate_frame(8, 8, 0, 1);
      const auto payload = wire::encode_payload(img);
      inter::Sender to_d0(
        inter::Endpoint(DomainId{0}, topic, inter::TransportKind::kTcpReliable, 0));
      inter::Sender to_d1(
        inter::Endpoint(DomainId{1}, topic, inter::TransportKind::kTcpReliable, 0));
      std::uint64_t seq = 0;
      while (!stop_probe.load()) {
        const auto tag = static_cast<std::uint8_t>(PayloadType::kImage);
        to_d0.send_frame(wire::frame(DomainId{1}, topic, seq, tag, payload));
        to_d1.send_frame(wire::frame(DomainId{0}, topic, seq, tag, payload));
        ++seq;
        std::this_thread::sleep_for(std::chrono::milliseconds(50));
      }
    });

  std::this_thread::sleep_for(std::chrono::seconds(10));
  stop_probe.store(true);
  probe.join();
  stack0.terminate_all();
  stack1.terminate_all();

  std::string detail;
  for (std::uint32_t domain : {0u, 1u}) {
    const fs::path meta_path =
      base / ("domain" + std::to_string(domain)) / "sink_meta.json";
    const bench::SinkMeta meta = bench::read_sink_meta(meta_path.string());
    require(
      meta.cross_domain_surfaced == 0,
      fmt("domain %u surfaced %llu cross-domain frames", domain,
        static_cast<unsigned long long>(meta.cross_domain_surfaced)));
    require(
      meta.wrong_domain > 0,
      fmt("domain %u wrong_domain counter is 0 (filter never exercised)", domain));
    require(meta.collected > 0, fmt("domain %u sink processed nothing", domain));
    detail += fmt(
      "d%u surfaced %llu frames, cross 0, wrong_domain %llu; ", domain,
      static_cast<unsigned long long>(meta.collected),
      static_cast<unsigned long long>(meta.wrong_domain));
  }
  return detail;
}

// ---------------------------------------------------------------------------
// Criterion 6: codec round-trips and fuzz totality in under 10 s.

std::string criterion6()
{
  const auto t0 = Clock::now();
  std::mt19937 rng(20260810);
  for (int i = 0; i < 1000; ++i) {
    const Image a = testing::random_image(rng);
    require(
      std::get<Image>(
        wire::decode_payload(1, wire::encode_payload(a))) == a, "image round-trip");
    const Imu b = testing::random_imu(rng);
    require(
      std::get<Imu>(wire::decode_payload(2, wire::encode_payload(b))) == b, "imu round-trip");
    const JointState c = testing::random_joint_state(rng);
    require(
      std::get<JointState>(
        wire::decode_payload(3, wire::encode_payload(c))) == c, "joint round-trip");
    const GameState d = testing::random_game_state(rng);
    require(
      std::get<GameState>(
        wire::decode_payload(4, wire::encode_payload(d))) == d, "game round-trip");
  }
  std::uniform_int_distribution<int> byte(0, 255);
  const Image img = testing::random_image(rng);
  auto bytes = wire::encode_payload(img);
  for (std::size_t len = 0; len <= bytes.size(); ++len) {
    try {
      wire::decode_payload(1, std::span(bytes.data(), len));
    } catch (const Error &) {
    }
  }
  for (int i = 0; i < 2000; ++i) {
    std::vector<std::uint8_t> junk(static_cast<std::size_t>(byte(rng)) * 3);
    for (auto & b : junk) {
      b = static_cast<std::uint8_t>(byte(rng));
    }
    for (std::uint8_t tag = 0; tag <= 5; ++tag) {
      try {
        wire::decode_payload(tag, junk);
      } catch (const Error &) {
      }
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  require(secs < 10.0, fmt("codec property suite took %.1f s (limit 10 s)", secs));
  return fmt("4000 round-trips + fuzz in %.2f s", secs);
}

std::string criterion7()
{
  std::mt19937 rng(20260810);
  std::uniform_int_distribution<std::uint32_t> side(3, 32);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int i = 0; i < 200; ++i) {
    const std::uint32_t w = side(rng);
    const std::uint32_t h = side(rng);
    std::vector<std::uint8_t> pixels(static_cast<std::size_t>(w) * h);
    for (auto & p : pixels) {
      p = static_cast<std::uint8_t>(byte(rng));
    }
    const Image out = nodes::sobel(Image(Header{}, w, h, ImageEncoding::kMono8, w, pixels));
    require(
      out.data == testing::sobel_oracle(pixels, static_cast<int>(w), static_cast<int>(h)),
      fmt("sobel differs from the oracle on image %d (%ux%u)", i, w, h));
  }
  return "200 random images byte-identical to the brute-force oracle";
}

std::string criterion8()
{
  using namespace ngbus::nodes;
  // Gyro-only constant-axis rotation vs closed form.
  FusionState s;
  const double rate = std::numbers::pi / 2;
  for (int i = 0; i < 100; ++i) {
    s = fusion_step(s, {0, 0, rate}, {0, 0, kStandardGravity}, 0.01);
  }
  const double yaw = 2.0 * std::atan2(s.q.z, s.q.w);
  require(std::abs(yaw - rate) < 1e-3, fmt("yaw %.6f differs from pi/2 by >=1e-3", yaw));

  // Gravity convergence.
  FusionState c;
  c.alpha = 0.98;
  const double tilt = 10.0 * std::numbers::pi / 180.0;
  const Vec3 accel{0.0, -kStandardGravity * std::sin(tilt), kStandardGravity * std::cos(tilt)};
  double angle = std::numbers::pi;
  for (int i = 0; i < 2000; ++i) {
    c = fusion_step(c, {0, 0, 0}, accel, 0.008);
    const double next = angle_between(rotate_inverse(c.q, Vec3{0, 0, 1}), accel);
    require(next <= angle + 1e-7, "gravity error not monotonically non-increasing");
    angle = next;
  }
  require(angle < 1e-3, fmt("gravity error %.6f rad after 2000 steps", angle));

  // Norm drift over 1e6 random steps.
  FusionState n;
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> r(-3, 3), a(-12, 12);
  double worst = 0;
  for (int i = 0; i < 1000000; ++i) {
    n = fusion_step(n, {r(rng), r(rng), r(rng)}, {a(rng), a(rng), a(rng)}, 0.002);
    worst = std::max(worst, std::abs(norm(n.q) - 1.0));
  }
  require(worst < 1e-9, fmt("quaternion norm drifted %.3e", worst));
  return fmt("yaw ok, convergence %.2e rad, norm drift %.2e", angle, worst);
}

std::string criterion9()
{
  std::mt19937 rng(20260810);
  for (int i = 0; i < 1000; ++i) {
    const GameState s = testing::random_game_state(rng);
    require(gc::parse_gc_packet(gc::encode_gc_packet(s)) == s, "gc round-trip");
  }
  const GameState zero(0, 0, GamePhase::kInitial, false, 0, 0, 0, 0, {});
  const auto z = gc::encode_gc_packet(zero);
  require(
    std::vector<std::uint8_t>(z.begin(), z.end()) ==
    testing::golden_bytes("gc_initial_zero.bin"), "gc golden (zero) drifted");
  std::array<TeamInfo, 2> teams{TeamInfo{1, 0, 3, 0}, TeamInfo{2, 1, 1, 0}};
  const auto g = gc::encode_gc_packet(GameState(7, 4, GamePhase::kPlaying, true, 1, 0, 600, 0, teams));
  require(
    std::vector<std::uint8_t>(g.begin(), g.end()) ==
    testing::golden_bytes("gc_playing_scores.bin"), "gc golden (scores) drifted");

  std::uniform_int_distribution<int> byte(0, 255);
  std::uniform_int_distribution<std::size_t> len(0, 65536);
  for (int i = 0; i < 2000; ++i) {
    std::vector<std::uint8_t> buf(i % 7 == 0 ? len(rng) : (len(rng) % 64));
    for (auto & b : buf) {
      b = static_cast<std::uint8_t>(byte(rng));
    }
    try {
      (void)gc::parse_gc_packet(buf);
    } catch (const Error &) {
    }
  }
  return "1000 round-trips, goldens stable, fuzz total";
}

std::string criterion10()
{
  // KEEP_LAST: depth-1 best-effort triple publish yields only the last.
  intra::IntraChannel ch(
    TopicName::validate("/x"), QoSProfile{Reliability::kBestEffort, 1});
  auto sub = ch.subscribe();
  for (std::int64_t i = 1; i <= 3; ++i) {
    ch.publish_unique(
      static_cast<std::uint64_t>(i), DomainId{0},
      std::make_unique<Payload>(Imu(Header{Time{i}, ""}, {1, 0, 0, 0}, {0, 0, 0}, {0, 0, 0})));
  }
  auto last = sub->take();
  require(last.has_value() && last->seq == 3, "depth-1 take is not the last publish");
  require(!sub->take().has_value(), "depth-1 queue held more than one message");

  // Fairness: single-threaded executor, 30 Hz VGA camera + Sobel sink.
  bench::RunOptions opts;
  opts.case_id = 1;
  opts.mode = graph::RunMode::kComposedIpc;
  opts.samples = 1000000;
  opts.warmup = 0;
  opts.domain = DomainId{40};
  graph::Topology topo = bench::build_topology(opts);
  topo.executor = graph::ExecutorSpec{graph::ExecutorKind::kSingleThreaded, 1};

  graph::Container container(graph::options_from(topo));
  bench::SampleCollector collector(topo.domain, topo.sample_target, [] {});
  nodes::build_all_nodes(container, topo, &collector);
  std::thread stopper(
    [&container] {
      std::this_thread::sleep_for(std::chrono::seconds(5));
      container.request_shutdown();
    });
  container.spin();
  stopper.join();
  const std::uint64_t processed = collector.collected();
  require(
    processed >= 125,
    fmt("single-threaded executor processed %llu frames in 5 s (< 25/s)",
      static_cast<unsigned long long>(processed)));
  return fmt(
    "KEEP_LAST ok; %llu frames processed in 5 s (>= 125)",
    static_cast<unsigned long long>(processed));
}

std::string criterion11()
{
  std::mt19937 rng(987654321);
  std::uniform_int_distribution<std::int64_t> value(0, 100000000);
  std::vector<std::int64_t> values(10000);
  for (auto & v : values) {
    v = value(rng);
  }
  const bench::DistStats s = bench::compute_stats(values);
  require(s.p5 == testing::percentile_oracle(values, 5), "p5 mismatch");
  require(s.p25 == testing::percentile_oracle(values, 25), "p25 mismatch");
  require(s.median == testing::percentile_oracle(values, 50), "median mismatch");
  require(s.p75 == testing::percentile_oracle(values, 75), "p75 mismatch");
  require(s.p95 == testing::percentile_oracle(values, 95), "p95 mismatch");
  require(s.p99 == testing::percentile_oracle(values, 99), "p99 mismatch");
  require(s.min == testing::percentile_oracle(values, 100.0 / 10000), "min mismatch");
  require(s.max == testing::percentile_oracle(values, 100), "max mismatch");
  return "all percentiles equal the sort-and-index oracle on 10000 inputs";
}

const char * kDescriptions[12] = {
  "",
  "Case-1 ordering: median(ipc) < median(standalone), median(ipc) < median(noipc), >=10% reduction, 3 reps",
  "Dispersion: IQR(composed-ipc) <= IQR(standalone) in the same runs",
  "Stability: |median(case2 ipc) - median(case1 ipc)| <= 25% of median(case1 ipc)",
  "Zero-copy: ipc runs report 0 copies on /image_raw; others >= 1 per delivered image",
  "Domain isolation: two stacks, 10 s, zero cross-domain surfaced, wrong_domain > 0",
  "Codec: 1000 seeded round-trips per type bit-exact, fuzzed truncations, < 10 s",
  "Sobel: 200 random images byte-identical to the brute-force oracle",
  "IMU fusion: closed-form yaw 1e-3, gravity convergence 1e-3, norm drift < 1e-9",
  "GameController codec: round-trip identity, stable goldens, fuzz totality",
  "KEEP_LAST depth-1 semantics and single-threaded executor fairness >= 25 fps",
  "Statistics: percentiles equal the independent sort-and-index oracle",
};

}  // namespace

int main(int argc, char ** argv)
{
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) {
    selected.insert(std::atoi(argv[i]));
  }
  const auto wanted = [&selected](int id) {
      return selected.empty() || selected.count(id) > 0;
    };

  const std::map<int, std::function<std::string()>> criteria{
    {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
    {5, criterion5}, {6, criterion6}, {7, criterion7}, {8, criterion8},
    {9, criterion9}, {10, criterion10}, {11, criterion11},
  };

  // Cheap criteria first; the benchmark-protocol runs (1-3) go last.
  const std::vector<int> order{6, 7, 8, 9, 11, 10, 4, 5, 1, 2, 3};

  std::map<int, std::pair<bool, std::string>> results;
  for (int id : order) {
    if (!wanted(id)) {
      continue;
    }
    std::printf("--- criterion %d: %s\n", id, kDescriptions[id]);
    std::fflush(stdout);
    try {
      results[id] = {true, criteria.at(id)()};
    } catch (const std::exception & e) {
      results[id] = {false, e.what()};
    }
    std::printf(
      "criterion %2d: %s  %s\n", id, results[id].first ? "PASS" : "FAIL",
      results[id].second.c_str());
    std::fflush(stdout);
  }

  std::printf("\n================ acceptance summary ================\n");
  bool all_ok = true;
  for (const auto & [id, result] : results) {
    std::printf("criterion %2d: %s  %s\n", id, result.first ? "PASS" : "FAIL",
      kDescriptions[id]);
    all_ok = all_ok && result.first;
  }
  std::printf("====================================================\n");
  return all_ok ? 0 : 1;
}
