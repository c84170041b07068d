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

#include "ngbus/graph/launch.hpp"

#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <thread>

#include "ngbus/errors.hpp"

extern char ** environ;

namespace ngbus::graph {

StandaloneLaunch::StandaloneLaunch(
  const Topology & topo, std::string node_binary, std::string topology_path)
{
  for (const NodeSpec & node : topo.nodes) {
    std::vector<std::string> args{node_binary, topology_path, "--node", node.name};
    std::vector<char *> argv;
    argv.reserve(args.size() + 1);
    for (std::string & a : args) {
      argv.push_back(a.data());
    }
    argv.push_back(nullptr);

    pid_t pid = -1;
    int rc = ::posix_spawn(&pid, node_binary.c_str(), nullptr, nullptr, argv.data(), environ);
    if (rc != 0) {
      terminate_all(std::chrono::milliseconds(500));
      throw Error(
        ErrorCode::kSpawnFailed,
        "spawning '" + node_binary + "' for node '" + node.name + "': " + std::strerror(rc));
    }
    processes_.push_back(ProcessHandle{pid, node.name, false, 0});
  }
}

StandaloneLaunch::~StandaloneLaunch()
{
  terminate_all(std::chrono::seconds(2));
}

namespace {

bool reap(ProcessHandle & proc, bool block)
{
  if (proc.exited) {
    return true;
  }
  int status = 0;
  pid_t rc = ::waitpid(proc.pid, &status, block ? 0 : WNOHANG);
  if (rc == proc.pid) {
    proc.exited = true;
    proc.exit_status =
      WIFEXITED(status) ? WEXITSTATUS(status) : 128 + (WIFSIGNALED(status) ? WTERMSIG(status) : 0);
    return true;
  }
  return false;
}

}  // namespace

int StandaloneLaunch::wait_for(const std::string & node_name, std::chrono::milliseconds deadline)
{
  ProcessHandle * proc = nullptr;
  for (ProcessHandle & p : processes_) {
    if (p.node_name == node_name) {
      proc = &p;
      break;
    }
  }
  if (proc == nullptr) {
    throw Error(ErrorCode::kConfigInvalid, "no spawned process for node '" + node_name + "'");
  }
  const auto give_up = std::chrono::steady_clock::now() + deadline;
  while (!reap(*proc, false)) {
    if (std::chrono::steady_clock::now() >= give_up) {
      throw Error(
        ErrorCode::kTimeout, "node '" + node_name + "' still running after the deadline");
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(20));
  }
  return proc->exit_status;
}

void StandaloneLaunch::terminate_all(std::chrono::milliseconds grace)
{
  bool any_alive = false;
  for (ProcessHandle & p : processes_) {
    if (!reap(p, false)) {
      ::kill(p.pid, SIGTERM);
      any_alive = true;
    }
  }
  if (!any_alive) {
    return;
  }
  const auto give_up = std::chrono::steady_clock::now() + grace;
  for (;;) {
    bool all_done = true;
    for (ProcessHandle & p : processes_) {
      if (!reap(p, false)) {
        all_done = false;
      }
    }
    if (all_done) {
      return;
    }
    if (std::chrono::steady_clock::now() >= give_up) {
      break;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(20));
  }
  for (ProcessHandle & p : processes_) {
    if (!p.exited) {
      ::kill(p.pid, SIGKILL);
      reap(p, true);
    }
  }
}

}  // namespace ngbus::graph
