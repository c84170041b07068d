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

#ifndef NGBUS__GRAPH__LAUNCH_HPP_
#define NGBUS__GRAPH__LAUNCH_HPP_

#include <sys/types.h>

#include <chrono>
#include <string>
#include <vector>

#include "ngbus/graph/topology.hpp"

namespace ngbus::graph {

struct ProcessHandle
{
  pid_t pid{-1};
  std::string node_name;
  bool exited{false};
  int exit_status{0};
};

/// Stand-alone execution: one OS process per topology node, each running the
/// node binary with the shared topology file as its sole positional argument.
class StandaloneLaunch
{
public:
  /// Spawns all processes. \throws Error{kSpawnFailed}.
  StandaloneLaunch(
    const Topology & topo, std::string node_binary, std::string topology_path);

  /// Terminates anything still running.
  ~StandaloneLaunch();

  StandaloneLaunch(const StandaloneLaunch &) = delete;
  StandaloneLaunch & operator=(const StandaloneLaunch &) = delete;

  const std::vector<ProcessHandle> & processes() const noexcept {return processes_;}

  /// Waits for one node's process to exit and returns its exit status.
  /// \throws Error{kTimeout} when the deadline passes first.
  int wait_for(const std::string & node_name, std::chrono::milliseconds deadline);

  /// SIGTERM to every live process, then SIGKILL after the grace period;
  /// reaps everything.
  void terminate_all(std::chrono::milliseconds grace = std::chrono::seconds(5));

private:
  std::vector<ProcessHandle> processes_;
};

}  // namespace ngbus::graph

#endif  // NGBUS__GRAPH__LAUNCH_HPP_
