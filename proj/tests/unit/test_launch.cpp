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

#include <signal.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <thread>

#include "ngbus/bench/collector.hpp"
#include "ngbus/bench/runner.hpp"
#include "ngbus/errors.hpp"
#include "ngbus/graph/launch.hpp"

using namespace ngbus;
using namespace std::chrono_literals;
namespace fs = std::filesystem;

namespace {

std::string node_binary()
{
  const char * env = std::getenv("NGBUS_NODE_BIN");
  REQUIRE_MESSAGE(env != nullptr, "NGBUS_NODE_BIN must point at the ngb-node binary");
  return env;
}

fs::path fresh_dir(const std::string & name)
{
  const fs::path dir = fs::temp_directory_path() / ("ngbus_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE_BEGIN("standalone_launch");

TEST_CASE("case 1 spawns exactly two processes and completes")
{
  const fs::path dir = fresh_dir("launch_case1");
  bench::RunOptions opts;
  opts.case_id = 1;
  opts.mode = graph::RunMode::kStandalone;
  opts.samples = 20;
  opts.warmup = 2;
  opts.width = 32;
  opts.height = 32;
  opts.fps = 100.0;
  opts.domain = DomainId{20};
  opts.out_dir = dir.string();

  graph::Topology topo = bench::build_topology(opts);
  const std::string topo_path = (dir / "topology.json").string();
  topo.save(topo_path);

  graph::StandaloneLaunch launch(topo, node_binary(), topo_path);
  CHECK(launch.processes().size() == 2);

  CHECK(launch.wait_for("sobel", 20s) == 0);
  launch.terminate_all();

  const bench::SinkMeta meta = bench::read_sink_meta((dir / "sink_meta.json").string());
  CHECK(meta.reached_target);
  CHECK(meta.collected >= 22);
  CHECK(meta.image_copy_total >= meta.image_deliveries);  // decoded off the wire
  CHECK(meta.cross_domain_surfaced == 0);
}

TEST_CASE("case 2 spawns exactly seven processes")
{
  const fs::path dir = fresh_dir("launch_case2");
  bench::RunOptions opts;
  opts.case_id = 2;
  opts.mode = graph::RunMode::kStandalone;
  opts.samples = 10;
  opts.warmup = 0;
  opts.width = 32;
  opts.height = 32;
  opts.fps = 100.0;
  opts.domain = DomainId{21};
  opts.gc_port = 18910;
  opts.out_dir = dir.string();

  graph::Topology topo = bench::build_topology(opts);
  const std::string topo_path = (dir / "topology.json").string();
  topo.save(topo_path);

  graph::StandaloneLaunch launch(topo, node_binary(), topo_path);
  CHECK(launch.processes().size() == 7);
  CHECK(launch.wait_for("sobel", 20s) == 0);
  launch.terminate_all();
}

TEST_CASE("killing the camera mid-run times out and preserves partial samples")
{
  const fs::path dir = fresh_dir("launch_kill");
  bench::RunOptions opts;
  opts.case_id = 1;
  opts.mode = graph::RunMode::kStandalone;
  opts.samples = 100000;  // unreachable
  opts.warmup = 0;
  opts.width = 32;
  opts.height = 32;
  opts.fps = 50.0;
  opts.domain = DomainId{22};
  opts.out_dir = dir.string();

  graph::Topology topo = bench::build_topology(opts);
  const std::string topo_path = (dir / "topology.json").string();
  topo.save(topo_path);

  graph::StandaloneLaunch launch(topo, node_binary(), topo_path);
  std::this_thread::sleep_for(1200ms);  // let some frames flow

  pid_t camera_pid = -1;
  for (const auto & p : launch.processes()) {
    if (p.node_name == "camera") {
      camera_pid = p.pid;
    }
  }
  REQUIRE(camera_pid > 0);
  ::kill(camera_pid, SIGKILL);

  try {
    launch.wait_for("sobel", 1500ms);
    FAIL("expected TIMEOUT");
  } catch (const Error & e) {
    CHECK(e.code() == ErrorCode::kTimeout);
  }
  launch.terminate_all();

  // The sink flushed what it had when it was terminated.
  const bench::SinkMeta meta = bench::read_sink_meta((dir / "sink_meta.json").string());
  CHECK_FALSE(meta.reached_target);
  const auto rows = bench::read_sink_raw((dir / "sink_raw.csv").string());
  CHECK(rows.size() == meta.collected);
  CHECK(rows.size() > 0);
}

TEST_SUITE_END();
