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

#ifndef NGBUS__NODES__GRAPH_BUILDER_HPP_
#define NGBUS__NODES__GRAPH_BUILDER_HPP_

#include <cstdint>

#include "ngbus/graph/container.hpp"
#include "ngbus/graph/node.hpp"
#include "ngbus/graph/topology.hpp"
#include "ngbus/time.hpp"

namespace ngbus::nodes {

/// One processed frame at the measuring sink.
struct LatencyObservation
{
  std::uint64_t seq{0};
  Time capture;
  Time done;
  std::uint64_t payload_copies{0};
  DomainId domain;
};

/// Receives every observation the Sobel sink makes, in processing order.
/// Implementations decide when enough samples have been collected.
class SinkObserver
{
public:
  virtual ~SinkObserver() = default;
  virtual void on_frame_processed(const LatencyObservation & obs) = 0;
};

/// Topic names of the robot graph.
inline constexpr const char * kTopicImageRaw = "/image_raw";
inline constexpr const char * kTopicImageGradient = "/image_gradient";
inline constexpr const char * kTopicJointStates = "/joint_states";
inline constexpr const char * kTopicImuRaw = "/imu/raw";
inline constexpr const char * kTopicImuData = "/imu/data";
inline constexpr const char * kTopicCmdHead = "/cmd_head";
inline constexpr const char * kTopicGameState = "/game_state";

/// Instantiates the node implementation named by spec.kind onto `node`.
///
/// Kinds: camera (synthetic frames at params.fps), sobel_sink (gradient +
/// latency measurement; publishes /image_gradient when params.publish_gradient
/// is set), cm730 (joint/IMU simulator at params.rate_hz), imu_fusion
/// (complementary filter), head_controller (/imu/data -> /cmd_head), monitor
/// (consumes /image_gradient, /cmd_head, /game_state), gc_bridge
/// (GameController UDP listener).
///
/// `observer` is required for sobel_sink and unused otherwise.
/// \throws Error{kConfigInvalid} for an unknown kind.
void build_node(
  graph::Node & node, const graph::NodeSpec & spec, const graph::Topology & topo,
  SinkObserver * observer);

/// Adds every topology node to the container (composed execution).
void build_all_nodes(
  graph::Container & container, const graph::Topology & topo, SinkObserver * observer);

}  // namespace ngbus::nodes

#endif  // NGBUS__NODES__GRAPH_BUILDER_HPP_
