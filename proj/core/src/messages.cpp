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

#include "ngbus/messages.hpp"

#include <cmath>
#include <utility>

#include "ngbus/errors.hpp"

namespace ngbus {

Image::Image(
  Header header_in, std::uint32_t width_in, std::uint32_t height_in,
  ImageEncoding encoding_in, std::uint32_t step_in, std::vector<std::uint8_t> data_in)
: header(std::move(header_in)), width(width_in), height(height_in),
  encoding(encoding_in), step(step_in), data(std::move(data_in))
{
  if (step != width * bytes_per_pixel(encoding)) {
    throw Error(
      ErrorCode::kInvariantViolation,
      "Image step " + std::to_string(step) + " != width * bytes_per_pixel = " +
      std::to_string(width * bytes_per_pixel(encoding)));
  }
  const std::size_t expected = static_cast<std::size_t>(step) * height;
  if (data.size() != expected) {
    throw Error(
      ErrorCode::kInvariantViolation,
      "Image data length " + std::to_string(data.size()) + " != step * height = " +
      std::to_string(expected));
  }
}

bool operator==(const Image & a, const Image & b)
{
  return a.header == b.header && a.width == b.width && a.height == b.height &&
         a.encoding == b.encoding && a.step == b.step && a.data == b.data;
}

Imu::Imu(
  Header header_in, std::array<double, 4> orientation_in,
  std::array<double, 3> angular_velocity_in, std::array<double, 3> linear_acceleration_in)
: header(std::move(header_in)), orientation(orientation_in),
  angular_velocity(angular_velocity_in), linear_acceleration(linear_acceleration_in)
{
  const double norm = std::sqrt(
    orientation[0] * orientation[0] + orientation[1] * orientation[1] +
    orientation[2] * orientation[2] + orientation[3] * orientation[3]);
  if (std::abs(norm - 1.0) > 1e-9) {
    throw Error(
      ErrorCode::kInvariantViolation,
      "Imu orientation norm " + std::to_string(norm) + " deviates from 1 by more than 1e-9");
  }
}

bool operator==(const Imu & a, const Imu & b)
{
  return a.header == b.header && a.orientation == b.orientation &&
         a.angular_velocity == b.angular_velocity &&
         a.linear_acceleration == b.linear_acceleration;
}

JointState::JointState(
  Header header_in, std::vector<std::string> names_in, std::vector<double> positions_in,
  std::vector<double> velocities_in, std::vector<double> efforts_in)
: header(std::move(header_in)), names(std::move(names_in)), positions(std::move(positions_in)),
  velocities(std::move(velocities_in)), efforts(std::move(efforts_in))
{
  const std::size_t n = names.size();
  if (positions.size() != n) {
    throw Error(
      ErrorCode::kInvariantViolation,
      "JointState positions length " + std::to_string(positions.size()) +
      " != names length " + std::to_string(n));
  }
  if (!velocities.empty() && velocities.size() != n) {
    throw Error(
      ErrorCode::kInvariantViolation,
      "JointState velocities length " + std::to_string(velocities.size()) +
      " is neither 0 nor " + std::to_string(n));
  }
  if (!efforts.empty() && efforts.size() != n) {
    throw Error(
      ErrorCode::kInvariantViolation,
      "JointState efforts length " + std::to_string(efforts.size()) +
      " is neither 0 nor " + std::to_string(n));
  }
}

bool operator==(const JointState & a, const JointState & b)
{
  return a.header == b.header && a.names == b.names && a.positions == b.positions &&
         a.velocities == b.velocities && a.efforts == b.efforts;
}

GameState::GameState(
  std::uint8_t packet_number_in, std::uint8_t players_per_team_in, GamePhase state_in,
  bool first_half_in, std::uint8_t kickoff_team_in, std::uint8_t secondary_state_in,
  std::int16_t secs_remaining_in, std::int16_t secondary_time_in, std::array<TeamInfo, 2> teams_in)
: packet_number(packet_number_in), players_per_team(players_per_team_in), state(state_in),
  first_half(first_half_in), kickoff_team(kickoff_team_in),
  secondary_state(secondary_state_in), secs_remaining(secs_remaining_in),
  secondary_time(secondary_time_in), teams(teams_in)
{
}

bool operator==(const GameState & a, const GameState & b)
{
  return a.packet_number == b.packet_number && a.players_per_team == b.players_per_team &&
         a.state == b.state && a.first_half == b.first_half &&
         a.kickoff_team == b.kickoff_team && a.secondary_state == b.secondary_state &&
         a.secs_remaining == b.secs_remaining && a.secondary_time == b.secondary_time &&
         a.teams == b.teams;
}

PayloadType payload_type_of(const Payload & payload) noexcept
{
  struct Visitor
  {
    PayloadType operator()(const Image &) const noexcept {return PayloadType::kImage;}
    PayloadType operator()(const Imu &) const noexcept {return PayloadType::kImu;}
    PayloadType operator()(const JointState &) const noexcept {return PayloadType::kJointState;}
    PayloadType operator()(const GameState &) const noexcept {return PayloadType::kGameState;}
  };
  return std::visit(Visitor{}, payload);
}

const char * to_string(PayloadType type) noexcept
{
  switch (type) {
    case PayloadType::kImage: return "image";
    case PayloadType::kImu: return "imu";
    case PayloadType::kJointState: return "joint_state";
    case PayloadType::kGameState: return "game_state";
  }
  return "unknown";
}

PayloadType parse_payload_type(const std::string & name)
{
  if (name == "image") {return PayloadType::kImage;}
  if (name == "imu") {return PayloadType::kImu;}
  if (name == "joint_state") {return PayloadType::kJointState;}
  if (name == "game_state") {return PayloadType::kGameState;}
  throw Error(ErrorCode::kConfigInvalid, "unknown payload type '" + name + "'");
}

const PayloadDiag & payload_diag(const Payload & payload) noexcept
{
  return std::visit([](const auto & msg) -> const PayloadDiag & {return msg.diag;}, payload);
}

}  // namespace ngbus
