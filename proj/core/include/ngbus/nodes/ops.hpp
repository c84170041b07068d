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

#ifndef NGBUS__NODES__OPS_HPP_
#define NGBUS__NODES__OPS_HPP_

#include <cstdint>
#include <utility>

#include "ngbus/messages.hpp"
#include "ngbus/nodes/quat.hpp"
#include "ngbus/time.hpp"

namespace ngbus::nodes {

/// Deterministic synthetic camera frame (MONO8): a diagonal gradient that
/// shifts with frame_index, XOR'd with a seed-keyed noise plane so frames are
/// not trivially compressible. Identical (width, height, frame_index, seed)
/// yield identical pixel bytes; the header stamp is taken when the frame is
/// complete. width and height must be >= 3.
Image generate_frame(
  std::uint32_t width, std::uint32_t height, std::uint64_t frame_index, std::uint32_t seed);

/// 3x3 Sobel gradient magnitude (|gx| + |gy|, saturated at 255) with
/// replicate-border handling. The output keeps the input's header so
/// end-to-end latency stays measured against capture time.
/// \throws Error{kUnsupportedEncoding} for RGB8 input.
Image sobel(const Image & img);

constexpr double kStandardGravity = 9.80665;

/// Complementary-filter state: body-to-world orientation plus the gyro
/// blend factor (weight of pure gyro integration per step).
struct FusionState
{
  Quat q{};
  double alpha{0.98};
  Time last_stamp{};
};

/// One filter step: integrate body rates over dt, then, when the
/// accelerometer magnitude is within [0.5 g, 1.5 g], rotate by (1 - alpha)
/// of the error between the predicted and measured gravity directions.
/// Out-of-range accelerometer readings skip the correction. dt in seconds,
/// must be > 0. The returned quaternion is renormalized.
FusionState fusion_step(const FusionState & state, Vec3 gyro, Vec3 accel, double dt);

/// Simulated CM-730 sub-controller readout at wall time t: 20 sinusoidal
/// joints plus raw IMU (identity orientation, slow z-gyro oscillation,
/// gravity tilted 5 degrees about x). Deterministic in t.
struct Cm730Sample
{
  JointState joints;
  Imu imu_raw;
};

Cm730Sample cm730_tick(Time t);

}  // namespace ngbus::nodes

#endif  // NGBUS__NODES__OPS_HPP_
