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

#include "ngbus/nodes/graph_builder.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <utility>

#include "ngbus/errors.hpp"
#include "ngbus/gc/bridge.hpp"
#include "ngbus/nodes/ops.hpp"
#include "ngbus/nodes/quat.hpp"

namespace ngbus::nodes {

namespace {

std::chrono::nanoseconds period_of(double rate_hz)
{
  if (rate_hz <= 0.0) {
    throw Error(ErrorCode::kConfigInvalid, "rate must be positive");
  }
  return std::chrono::nanoseconds(static_cast<std::int64_t>(1e9 / rate_hz));
}

void build_camera(graph::Node & node, const graph::NodeSpec & spec, const graph::Topology & topo)
{
  const auto width = static_cast<std::uint32_t>(spec.param("width", 640));
  const auto height = static_cast<std::uint32_t>(spec.param("height", 480));
  const double fps = spec.param("fps", 30.0);
  const auto seed = static_cast<std::uint32_t>(spec.param("seed", topo.seed));

  auto pub = node.advertise(TopicName::validate(kTopicImageRaw));
  auto frame_index = std::make_shared<std::uint64_t>(0);
  node.add_timer(
    period_of(fps),
    [pub, frame_index, width, height, seed] {
      pub->publish(
        std::make_unique<Payload>(generate_frame(width, height, (*frame_index)++, seed)));
    });
}

void build_sobel_sink(
  graph::Node & node, const graph::NodeSpec & spec, SinkObserver * observer)
{
  if (observer == nullptr) {
    throw Error(ErrorCode::kConfigInvalid, "sobel_sink requires a sink observer");
  }
  const bool publish_gradient = spec.param("publish_gradient", 0) != 0;
  std::shared_ptr<graph::Publisher> pub;
  if (publish_gradient) {
    pub = node.advertise(TopicName::validate(kTopicImageGradient));
  }
  node.subscribe(
    TopicName::validate(kTopicImageRaw),
    [observer, pub](const MessageEnvelope & env) {
      const Image & img = std::get<Image>(*env.payload);
      Image gradient = sobel(img);
      const Time done = now();
      observer->on_frame_processed(
        LatencyObservation{
          env.seq, img.header.stamp, done,
          img.diag.deep_copy_count(), env.domain});
      if (pub) {
        pub->publish(std::make_unique<Payload>(std::move(gradient)));
      }
    });
}

void build_cm730(graph::Node & node, const graph::NodeSpec & spec)
{
  const double rate = spec.param("rate_hz", 125.0);
  auto joints_pub = node.advertise(TopicName::validate(kTopicJointStates));
  auto imu_pub = node.advertise(TopicName::validate(kTopicImuRaw));
  node.add_timer(
    period_of(rate),
    [joints_pub, imu_pub] {
      Cm730Sample sample = cm730_tick(now());
      joints_pub->publish(std::make_unique<Payload>(std::move(sample.joints)));
      imu_pub->publish(std::make_unique<Payload>(std::move(sample.imu_raw)));
    });
}

void build_imu_fusion(graph::Node & node, const graph::NodeSpec & spec)
{
  auto state = std::make_shared<FusionState>();
  state->alpha = spec.param("alpha", 0.98);
  auto pub = node.advertise(TopicName::validate(kTopicImuData));
  node.subscribe(
    TopicName::validate(kTopicImuRaw),
    [state, pub](const MessageEnvelope & env) {
      const Imu & raw = std::get<Imu>(*env.payload);
      if (state->last_stamp.nanos != 0) {
        const double dt = 1e-9 * static_cast<double>(
          raw.header.stamp.nanos - state->last_stamp.nanos);
        if (dt > 0.0) {
          *state = fusion_step(
            *state, raw.angular_velocity, raw.linear_acceleration, dt);
        }
      }
      state->last_stamp = raw.header.stamp;
      pub->publish(
        std::make_unique<Payload>(
          Imu(raw.header, state->q.wxyz(), raw.angular_velocity, raw.linear_acceleration)));
    });
}

void build_head_controller(graph::Node & node, const graph::NodeSpec & spec)
{
  const double gain = spec.param("gain", -1.0);
  auto pub = node.advertise(TopicName::validate(kTopicCmdHead));
  node.subscribe(
    TopicName::validate(kTopicImuData),
    [pub, gain](const MessageEnvelope & env) {
      const Imu & imu = std::get<Imu>(*env.payload);
      const auto & q = imu.orientation;
      const double roll =
        std::atan2(2.0 * (q[0] * q[1] + q[2] * q[3]), 1.0 - 2.0 * (q[1] * q[1] + q[2] * q[2]));
      const double pitch = std::asin(std::clamp(2.0 * (q[0] * q[2] - q[3] * q[1]), -1.0, 1.0));
      pub->publish(
        std::make_unique<Payload>(
          JointState(
            Header{imu.header.stamp, "head"}, {"head_pan", "head_tilt"},
            {gain * roll, gain * pitch}, {}, {})));
    });
}

void build_monitor(graph::Node & node)
{
  auto seen = std::make_shared<std::array<std::uint64_t, 3>>();
  node.subscribe(
    TopicName::validate(kTopicImageGradient),
    [seen](const MessageEnvelope &) {(*seen)[0]++;});
  node.subscribe(
    TopicName::validate(kTopicCmdHead),
    [seen](const MessageEnvelope &) {(*seen)[1]++;});
  node.subscribe(
    TopicName::validate(kTopicGameState),
    [seen](const MessageEnvelope &) {(*seen)[2]++;});
}

void build_gc_bridge(graph::Node & node, const graph::NodeSpec & spec, const graph::Topology & topo)
{
  const auto port = static_cast<std::uint16_t>(spec.param("port", topo.gc_port));
  auto pub = node.advertise(TopicName::validate(kTopicGameState));
  auto stats = std::make_shared<gc::BridgeStats>();
  node.add_background(
    [port, pub, stats](const std::atomic<bool> & stop) {
      gc::bridge_run(
        port,
        [&pub](GameState state) {
          pub->publish(std::make_unique<Payload>(std::move(state)));
        },
        stop, *stats);
    });
}

}  // namespace

void build_node(
  graph::Node & node, const graph::NodeSpec & spec, const graph::Topology & topo,
  SinkObserver * observer)
{
  if (spec.kind == "camera") {
    build_camera(node, spec, topo);
  } else if (spec.kind == "sobel_sink") {
    build_sobel_sink(node, spec, observer);
  } else if (spec.kind == "cm730") {
    build_cm730(node, spec);
  } else if (spec.kind == "imu_fusion") {
    build_imu_fusion(node, spec);
  } else if (spec.kind == "head_controller") {
    build_head_controller(node, spec);
  } else if (spec.kind == "monitor") {
    build_monitor(node);
  } else if (spec.kind == "gc_bridge") {
    build_gc_bridge(node, spec, topo);
  } else {
    throw Error(ErrorCode::kConfigInvalid, "unknown node kind '" + spec.kind + "'");
  }
}

void build_all_nodes(
  graph::Container & container, const graph::Topology & topo, SinkObserver * observer)
{
  for (const graph::NodeSpec & spec : topo.nodes) {
    build_node(container.add_node(spec.name), spec, topo, observer);
  }
}

}  // namespace ngbus::nodes
