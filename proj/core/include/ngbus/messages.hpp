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

#ifndef NGBUS__MESSAGES_HPP_
#define NGBUS__MESSAGES_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ngbus/domain_id.hpp"
#include "ngbus/payload_diag.hpp"
#include "ngbus/time.hpp"
#include "ngbus/topic_name.hpp"

namespace ngbus {

struct Header
{
  Time stamp;
  std::string frame_id;

  friend bool operator==(const Header &, const Header &) = default;
};

enum class ImageEncoding : std::uint8_t
{
  kMono8 = 0,
  kRgb8 = 1,
};

constexpr std::uint32_t bytes_per_pixel(ImageEncoding enc) noexcept
{
  return enc == ImageEncoding::kMono8 ? 1u : 3u;
}

/// Raster image. Invariants (checked at construction):
/// step = width * bytes_per_pixel(encoding), data.size() = step * height.
struct Image
{
  Header header;
  std::uint32_t width{0};
  std::uint32_t height{0};
  ImageEncoding encoding{ImageEncoding::kMono8};
  std::uint32_t step{0};
  std::vector<std::uint8_t> data;
  PayloadDiag diag;

  /// \throws Error{kInvariantViolation} on step/size mismatch.
  Image(
    Header header, std::uint32_t width, std::uint32_t height,
    ImageEncoding encoding, std::uint32_t step, std::vector<std::uint8_t> data);

  std::uint8_t at(std::uint32_t x, std::uint32_t y) const noexcept
  {
    return data[static_cast<std::size_t>(y) * step + x];
  }
};

bool operator==(const Image & a, const Image & b);

/// Inertial reading. Raw (pre-fusion) messages carry the identity
/// orientation; fused messages carry a unit quaternion (|q| = 1 within 1e-9,
/// checked at construction).
struct Imu
{
  Header header;
  std::array<double, 4> orientation{1.0, 0.0, 0.0, 0.0};  // w, x, y, z
  std::array<double, 3> angular_velocity{0.0, 0.0, 0.0};  // rad/s
  std::array<double, 3> linear_acceleration{0.0, 0.0, 0.0};  // m/s^2
  PayloadDiag diag;

  /// \throws Error{kInvariantViolation} if the quaternion is not unit norm.
  Imu(
    Header header, std::array<double, 4> orientation,
    std::array<double, 3> angular_velocity, std::array<double, 3> linear_acceleration);
};

bool operator==(const Imu & a, const Imu & b);

/// Joint positions by name. velocities/efforts may be empty ("not reported");
/// when present they match names/positions in length (checked at construction).
struct JointState
{
  Header header;
  std::vector<std::string> names;
  std::vector<double> positions;
  std::vector<double> velocities;
  std::vector<double> efforts;
  PayloadDiag diag;

  /// \throws Error{kInvariantViolation} on list-length mismatch.
  JointState(
    Header header, std::vector<std::string> names, std::vector<double> positions,
    std::vector<double> velocities, std::vector<double> efforts);
};

bool operator==(const JointState & a, const JointState & b);

enum class GamePhase : std::uint8_t
{
  kInitial = 0,
  kReady = 1,
  kSet = 2,
  kPlaying = 3,
  kFinished = 4,
};

struct TeamInfo
{
  std::uint8_t team_number{0};
  std::uint8_t team_colour{0};
  std::uint8_t score{0};
  std::uint8_t penalty_shot{0};

  friend bool operator==(const TeamInfo &, const TeamInfo &) = default;
};

/// Referee state as published by the GameController bridge.
struct GameState
{
  std::uint8_t packet_number{0};
  std::uint8_t players_per_team{0};
  GamePhase state{GamePhase::kInitial};
  bool first_half{true};
  std::uint8_t kickoff_team{0};
  std::uint8_t secondary_state{0};
  std::int16_t secs_remaining{0};
  std::int16_t secondary_time{0};
  std::array<TeamInfo, 2> teams{};
  PayloadDiag diag;

  GameState() = default;
  GameState(
    std::uint8_t packet_number, std::uint8_t players_per_team, GamePhase state,
    bool first_half, std::uint8_t kickoff_team, std::uint8_t secondary_state,
    std::int16_t secs_remaining, std::int16_t secondary_time, std::array<TeamInfo, 2> teams);
};

bool operator==(const GameState & a, const GameState & b);

/// The closed set of message types that flow through the middleware.
using Payload = std::variant<Image, Imu, JointState, GameState>;

/// Wire tag of each payload type.
enum class PayloadType : std::uint8_t
{
  kImage = 1,
  kImu = 2,
  kJointState = 3,
  kGameState = 4,
};

PayloadType payload_type_of(const Payload & payload) noexcept;
const char * to_string(PayloadType type) noexcept;

/// Parses "image" | "imu" | "joint_state" | "game_state".
/// \throws Error{kConfigInvalid} on anything else.
PayloadType parse_payload_type(const std::string & name);

/// Copy counter of whichever message the variant holds.
const PayloadDiag & payload_diag(const Payload & payload) noexcept;

/// One message in flight: topic, publisher-assigned sequence number, the
/// publisher's domain, and a shared immutable payload handle.
struct MessageEnvelope
{
  TopicName topic;
  std::uint64_t seq{0};
  DomainId domain;
  std::shared_ptr<const Payload> payload;
};

}  // namespace ngbus

#endif  // NGBUS__MESSAGES_HPP_
