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

// Seeded pseudorandom message generators shared by the property tests.

#ifndef TESTS__COMMON__GENERATORS_HPP_
#define TESTS__COMMON__GENERATORS_HPP_

#include <random>
#include <string>
#include <vector>

#include "ngbus/messages.hpp"

namespace ngbus::testing {

inline std::string random_frame_id(std::mt19937 & rng)
{
  static constexpr char kChars[] = "abcdefghijklmnopqrstuvwxyz0123456789_";
  std::uniform_int_distribution<std::size_t> len(0, 12);
  std::uniform_int_distribution<std::size_t> pick(0, sizeof(kChars) - 2);
  std::string out;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(kChars[pick(rng)]);
  }
  return out;
}

inline Header random_header(std::mt19937 & rng)
{
  std::uniform_int_distribution<std::int64_t> stamp(0, 4102444800000000000LL);
  return Header{Time{stamp(rng)}, random_frame_id(rng)};
}

inline Image random_image(std::mt19937 & rng, std::uint32_t max_side = 24)
{
  std::uniform_int_distribution<std::uint32_t> side(1, max_side);
  std::uniform_int_distribution<int> enc(0, 1);
  const std::uint32_t w = side(rng);
  const std::uint32_t h = side(rng);
  const ImageEncoding encoding = enc(rng) == 0 ? ImageEncoding::kMono8 : ImageEncoding::kRgb8;
  const std::uint32_t step = w * bytes_per_pixel(encoding);
  std::vector<std::uint8_t> data(static_cast<std::size_t>(step) * h);
  std::uniform_int_distribution<int> byte(0, 255);
  for (auto & b : data) {
    b = static_cast<std::uint8_t>(byte(rng));
  }
  return Image(random_header(rng), w, h, encoding, step, std::move(data));
}

inline Imu random_imu(std::mt19937 & rng)
{
  std::uniform_real_distribution<double> real(-10.0, 10.0);
  std::array<double, 4> q{real(rng), real(rng), real(rng), real(rng)};
  double n = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
  if (n < 1e-6) {
    q = {1.0, 0.0, 0.0, 0.0};
    n = 1.0;
  }
  for (double & x : q) {
    x /= n;
  }
  return Imu(
    random_header(rng), q,
    {real(rng), real(rng), real(rng)}, {real(rng), real(rng), real(rng)});
}

inline JointState random_joint_state(std::mt19937 & rng)
{
  std::uniform_int_distribution<std::size_t> count(0, 24);
  std::uniform_real_distribution<double> real(-3.2, 3.2);
  std::uniform_int_distribution<int> opt(0, 1);
  const std::size_t n = count(rng);
  std::vector<std::string> names;
  std::vector<double> positions;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("j" + std::to_string(i) + "_" + random_frame_id(rng));
    positions.push_back(real(rng));
  }
  std::vector<double> velocities;
  std::vector<double> efforts;
  if (opt(rng) == 1) {
    for (std::size_t i = 0; i < n; ++i) {velocities.push_back(real(rng));}
  }
  if (opt(rng) == 1) {
    for (std::size_t i = 0; i < n; ++i) {efforts.push_back(real(rng));}
  }
  return JointState(
    random_header(rng), std::move(names), std::move(positions),
    std::move(velocities), std::move(efforts));
}

inline GameState random_game_state(std::mt19937 & rng)
{
  std::uniform_int_distribution<int> byte(0, 255);
  std::uniform_int_distribution<int> phase(0, 4);
  std::uniform_int_distribution<int> boolean(0, 1);
  std::uniform_int_distribution<int> i16(-32768, 32767);
  std::array<TeamInfo, 2> teams{};
  for (TeamInfo & t : teams) {
    t = TeamInfo{
      static_cast<std::uint8_t>(byte(rng)), static_cast<std::uint8_t>(byte(rng)),
      static_cast<std::uint8_t>(byte(rng)), static_cast<std::uint8_t>(byte(rng))};
  }
  return GameState(
    static_cast<std::uint8_t>(byte(rng)), static_cast<std::uint8_t>(byte(rng)),
    static_cast<GamePhase>(phase(rng)), boolean(rng) == 1,
    static_cast<std::uint8_t>(byte(rng)), static_cast<std::uint8_t>(byte(rng)),
    static_cast<std::int16_t>(i16(rng)), static_cast<std::int16_t>(i16(rng)), teams);
}

}  // namespace ngbus::testing

#endif  // TESTS__COMMON__GENERATORS_HPP_
