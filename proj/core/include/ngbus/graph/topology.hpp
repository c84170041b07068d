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

#ifndef NGBUS__GRAPH__TOPOLOGY_HPP_
#define NGBUS__GRAPH__TOPOLOGY_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ngbus/domain_id.hpp"
#include "ngbus/messages.hpp"
#include "ngbus/qos.hpp"
#include "ngbus/topic_name.hpp"

namespace ngbus::graph {

enum class RunMode
{
  kStandalone,
  kComposedNoIpc,
  kComposedIpc,
};

const char * to_string(RunMode mode) noexcept;
RunMode parse_run_mode(const std::string & text);

enum class ExecutorKind
{
  kSingleThreaded,
  kMultiThreaded,
};

struct ExecutorSpec
{
  ExecutorKind kind{ExecutorKind::kSingleThreaded};
  unsigned threads{1};
};

struct TopicSpec
{
  TopicName name;
  PayloadType type{PayloadType::kImage};
  QoSProfile qos;
  std::size_t slot{0};
};

struct NodeSpec
{
  std::string name;
  std::string kind;
  std::map<std::string, double> params;

  double param(const std::string & key, double fallback) const
  {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  }
};

/// Declarative description of one benchmark scenario: nodes, topics,
/// execution mode, rates, and per-topic IPC enablement. Serialized as the
/// versioned "topology_v1" JSON file that every spawned node process reads
/// (see docs/topology-format.md).
struct Topology
{
  std::string scenario;
  DomainId domain;
  RunMode mode{RunMode::kComposedIpc};
  ExecutorSpec executor;
  std::vector<NodeSpec> nodes;
  std::vector<TopicSpec> topics;
  std::vector<std::string> ipc_topics;
  std::uint64_t sample_target{0};
  std::uint64_t warmup_discard{0};
  std::uint32_t seed{0};
  std::uint16_t gc_port{3838};
  std::string out_dir;

  /// \throws Error{kConfigInvalid} on duplicate node names, duplicate or
  /// invalid topic names, non-dense slots, unknown ipc topics, or a zero
  /// thread count.
  void validate() const;

  const TopicSpec & topic(const std::string & name) const;
  const TopicSpec * find_topic(const std::string & name) const noexcept;
  const NodeSpec & node(const std::string & name) const;
  bool ipc_enabled(const TopicName & name) const noexcept;

  std::string to_json_string() const;
  static Topology from_json_string(const std::string & text);

  void save(const std::string & path) const;
  static Topology load(const std::string & path);
};

/// Environment variable consulted by node processes to override the domain.
inline constexpr const char * kDomainEnvVar = "NGB_DOMAIN";

/// Applies an NGB_DOMAIN override, if the variable is set.
void apply_domain_override(Topology & topo);

}  // namespace ngbus::graph

#endif  // NGBUS__GRAPH__TOPOLOGY_HPP_
