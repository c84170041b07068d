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

#ifndef NGBUS__BENCH__RUNNER_HPP_
#define NGBUS__BENCH__RUNNER_HPP_

#include <cstdint>
#include <string>

#include "ngbus/bench/report.hpp"
#include "ngbus/graph/topology.hpp"
#include "ngbus/qos.hpp"

namespace ngbus::bench {

struct RunOptions
{
  int case_id{1};
  graph::RunMode mode{graph::RunMode::kComposedIpc};
  std::uint64_t samples{10000};
  std::uint32_t width{640};
  std::uint32_t height{480};
  double fps{30.0};
  Reliability image_qos{Reliability::kReliable};
  unsigned threads{0};  ///< composed executor width; 0 = min(cpu count, 4)
  std::uint32_t seed{42};
  std::uint64_t warmup{100};
  std::string out_dir{"bench_out/run"};
  std::uint16_t gc_port{3838};
  DomainId domain{0};
  std::string node_binary;  ///< standalone node executable; "" = ngb-node beside this one
  double deadline_factor{2.0};
};

/// Threads a composed run will use when RunOptions.threads is 0.
unsigned default_thread_count();

/// Path of the ngb-node binary installed next to the running executable.
std::string default_node_binary();

/// Case 1: camera -> Sobel sink on /image_raw. Case 2: the 7-node robot
/// graph on 7 topics; only /image_raw is IPC-enabled in composed-ipc mode.
/// \throws Error{kConfigInvalid}.
graph::Topology build_topology(const RunOptions & opts);

/// Executes one benchmark run to completion: builds the topology, runs the
/// scenario in the requested mode (spawning one process per node for
/// standalone, hosting a composed container in-process otherwise), collects
/// `samples` post-warmup observations at the Sobel sink, and writes
/// topology.json, samples.csv, plotdata.txt and report.json into out_dir.
/// \throws Error{kTimeout} (partial outputs are still written),
/// Error{kSpawnFailed}, Error{kConfigInvalid}, Error{kCallbackFailed}.
BenchReport run_case(const RunOptions & opts);

}  // namespace ngbus::bench

#endif  // NGBUS__BENCH__RUNNER_HPP_
