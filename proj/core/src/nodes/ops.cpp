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

#include "ngbus/nodes/ops.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "ngbus/errors.hpp"

namespace ngbus::nodes {

Image generate_frame(
  std::uint32_t width, std::uint32_t height, std::uint64_t frame_index, std::uint32_t seed)
{
  if (width < 3 || height < 3) {
    throw Error(
      ErrorCode::kInvariantViolation,
      "frame size " + std::to_string(width) + "x" + std::to_string(height) + " below 3x3");
  }
  std::vector<std::uint8_t> data(static_cast<std::size_t>(width) * height);
  std::mt19937 rng(seed);
  const std::uint32_t shift = static_cast<std::uint32_t>(3 * frame_index);
  std::size_t i = 0;
  for (std::uint32_t y = 0; y < height; ++y) {
    for (std::uint32_t x = 0; x < width; ++x, ++i) {
      const std::uint8_t pattern = static_cast<std::uint8_t>((x + y + shift) & 0xFF);
      data[i] = pattern ^ static_cast<std::uint8_t>(rng() & 0xFF);
    }
  }
  // Stamp when the frame is complete, like a capture timestamp at readout end.
  return Image(
    Header{now(), "camera"}, width, height, ImageEncoding::kMono8, width, std::move(data));
}

Image sobel(const Image & img)
{
  if (img.encoding != ImageEncoding::kMono8) {
    throw Error(ErrorCode::kUnsupportedEncoding, "sobel requires MONO8 input");
  }
  const std::uint32_t w = img.width;
  const std::uint32_t h = img.height;
  std::vector<std::uint8_t> out(static_cast<std::size_t>(w) * h);
  const std::uint8_t * src = img.data.data();

  for (std::uint32_t y = 0; y < h; ++y) {
    const std::uint32_t ym = y == 0 ? 0 : y - 1;
    const std::uint32_t yp = y + 1 >= h ? h - 1 : y + 1;
    const std::uint8_t * row_m = src + static_cast<std::size_t>(ym) * img.step;
    const std::uint8_t * row_0 = src + static_cast<std::size_t>(y) * img.step;
    const std::uint8_t * row_p = src + static_cast<std::size_t>(yp) * img.step;
    std::uint8_t * dst = out.data() + static_cast<std::size_t>(y) * w;
    for (std::uint32_t x = 0; x < w; ++x) {
      const std::uint32_t xm = x == 0 ? 0 : x - 1;
      const std::uint32_t xp = x + 1 >= w ? w - 1 : x + 1;
      const int tl = row_m[xm], tc = row_m[x], tr = row_m[xp];
      const int ml = row_0[xm], mr = row_0[xp];
      const int bl = row_p[xm], bc = row_p[x], br = row_p[xp];
      const int gx = (tr + 2 * mr + br) - (tl + 2 * ml + bl);
      const int gy = (bl + 2 * bc + br) - (tl + 2 * tc + tr);
      dst[x] = static_cast<std::uint8_t>(std::min(255, std::abs(gx) + std::abs(gy)));
    }
  }
  return Image(img.header, w, h, ImageEncoding::kMono8, w, std::move(out));
}

FusionState fusion_step(const FusionState & state, Vec3 gyro, Vec3 accel, double dt)
{
  Quat q = multiply(
    state.q, from_rotation_vector(Vec3{gyro[0] * dt, gyro[1] * dt, gyro[2] * dt}));

  const double accel_mag = length(accel);
  if (accel_mag >= 0.5 * kStandardGravity && accel_mag <= 1.5 * kStandardGravity) {
    // Predicted body-frame "up" vs the direction the accelerometer measured;
    // nudge the attitude by the (1 - alpha) fraction of the separation angle.
    const Vec3 up_pred = rotate_inverse(q, Vec3{0.0, 0.0, 1.0});
    const Vec3 up_meas{accel[0] / accel_mag, accel[1] / accel_mag, accel[2] / accel_mag};
    const double err_angle = angle_between(up_pred, up_meas);
    // Body-frame correction applied on the right: the rotation that carries
    // the prediction toward the measurement is about meas x pred.
    Vec3 axis = cross(up_meas, up_pred);
    const double axis_len = length(axis);
    if (axis_len > 1e-12 && err_angle > 1e-12) {
      const double gain = (1.0 - state.alpha) * err_angle / axis_len;
      q = multiply(q, from_rotation_vector(Vec3{axis[0] * gain, axis[1] * gain, axis[2] * gain}));
    }
  }

  FusionState next = state;
  next.q = normalized(q);
  return next;
}

Cm730Sample cm730_tick(Time t)
{
  const double ts = to_seconds(t);
  const double two_pi = 2.0 * std::numbers::pi;

  std::vector<std::string> names;
  std::vector<double> positions;
  names.reserve(20);
  positions.reserve(20);
  for (int i = 0; i < 20; ++i) {
    names.push_back("j" + std::to_string(i));
    positions.push_back(0.5 * std::sin(two_pi * 0.25 * ts + 0.1 * i));
  }
  JointState joints(Header{t, "cm730"}, std::move(names), std::move(positions), {}, {});

  const double tilt = 5.0 * std::numbers::pi / 180.0;
  const Vec3 gyro{0.0, 0.0, 0.2 * std::sin(two_pi * 0.1 * ts)};
  const Vec3 accel{
    0.0, -kStandardGravity * std::sin(tilt), kStandardGravity * std::cos(tilt)};
  Imu imu_raw(Header{t, "cm730"}, {1.0, 0.0, 0.0, 0.0}, gyro, accel);

  return Cm730Sample{std::move(joints), std::move(imu_raw)};
}

}  // namespace ngbus::nodes
