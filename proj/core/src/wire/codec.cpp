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

#include "ngbus/wire/codec.hpp"

#include <cstring>
#include <string>
#include <utility>

#include "ngbus/errors.hpp"
#include "ngbus/wire/bytes.hpp"

namespace ngbus::wire {

namespace {

void put_header(ByteWriter & w, const Header & h)
{
  w.i64(h.stamp.nanos);
  w.string(h.frame_id);
}

Header read_header(ByteReader & r)
{
  Header h;
  h.stamp.nanos = r.i64();
  h.frame_id = r.string();
  return h;
}

void put_f64_list(ByteWriter & w, const std::vector<double> & v)
{
  w.u32(static_cast<std::uint32_t>(v.size()));
  for (double x : v) {
    w.f64(x);
  }
}

std::vector<double> read_f64_list(ByteReader & r)
{
  std::uint32_t n = r.u32();
  std::vector<double> v;
  v.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    v.push_back(r.f64());
  }
  return v;
}

Image decode_image(ByteReader & r)
{
  Header h = read_header(r);
  std::uint32_t width = r.u32();
  std::uint32_t height = r.u32();
  std::uint8_t enc_byte = r.u8();
  if (enc_byte > 1) {
    throw Error(
      ErrorCode::kInvariantViolation, "Image encoding byte " + std::to_string(enc_byte));
  }
  std::uint32_t step = r.u32();
  std::uint32_t len = r.u32();
  auto raw = r.bytes(len);
  return Image(
    std::move(h), width, height, static_cast<ImageEncoding>(enc_byte), step,
    std::vector<std::uint8_t>(raw.begin(), raw.end()));
}

Imu decode_imu(ByteReader & r)
{
  Header h = read_header(r);
  std::array<double, 4> q{};
  for (double & x : q) {x = r.f64();}
  std::array<double, 3> gyro{};
  for (double & x : gyro) {x = r.f64();}
  std::array<double, 3> accel{};
  for (double & x : accel) {x = r.f64();}
  return Imu(std::move(h), q, gyro, accel);
}

JointState decode_joint_state(ByteReader & r)
{
  Header h = read_header(r);
  std::uint32_t n = r.u32();
  std::vector<std::string> names;
  names.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    names.push_back(r.string());
  }
  auto positions = read_f64_list(r);
  auto velocities = read_f64_list(r);
  auto efforts = read_f64_list(r);
  return JointState(
    std::move(h), std::move(names), std::move(positions), std::move(velocities),
    std::move(efforts));
}

GameState decode_game_state(ByteReader & r)
{
  std::uint8_t packet_number = r.u8();
  std::uint8_t players_per_team = r.u8();
  std::uint8_t state_byte = r.u8();
  if (state_byte > 4) {
    throw Error(
      ErrorCode::kInvariantViolation, "GameState state byte " + std::to_string(state_byte));
  }
  std::uint8_t half_byte = r.u8();
  if (half_byte > 1) {
    throw Error(
      ErrorCode::kInvariantViolation, "GameState first_half byte " + std::to_string(half_byte));
  }
  std::uint8_t kickoff_team = r.u8();
  std::uint8_t secondary_state = r.u8();
  std::int16_t secs_remaining = r.i16();
  std::int16_t secondary_time = r.i16();
  std::array<TeamInfo, 2> teams{};
  for (TeamInfo & t : teams) {
    t.team_number = r.u8();
    t.team_colour = r.u8();
    t.score = r.u8();
    t.penalty_shot = r.u8();
  }
  return GameState(
    packet_number, players_per_team, static_cast<GamePhase>(state_byte), half_byte == 1,
    kickoff_team, secondary_state, secs_remaining, secondary_time, teams);
}

}  // namespace

std::vector<std::uint8_t> encode_payload(const Image & msg)
{
  ByteWriter w;
  put_header(w, msg.header);
  w.u32(msg.width);
  w.u32(msg.height);
  w.u8(static_cast<std::uint8_t>(msg.encoding));
  w.u32(msg.step);
  w.u32(static_cast<std::uint32_t>(msg.data.size()));
  w.bytes(msg.data);
  return w.take();
}

std::vector<std::uint8_t> encode_payload(const Imu & msg)
{
  ByteWriter w;
  put_header(w, msg.header);
  for (double x : msg.orientation) {w.f64(x);}
  for (double x : msg.angular_velocity) {w.f64(x);}
  for (double x : msg.linear_acceleration) {w.f64(x);}
  return w.take();
}

std::vector<std::uint8_t> encode_payload(const JointState & msg)
{
  ByteWriter w;
  put_header(w, msg.header);
  w.u32(static_cast<std::uint32_t>(msg.names.size()));
  for (const std::string & n : msg.names) {
    w.string(n);
  }
  put_f64_list(w, msg.positions);
  put_f64_list(w, msg.velocities);
  put_f64_list(w, msg.efforts);
  return w.take();
}

std::vector<std::uint8_t> encode_payload(const GameState & msg)
{
  ByteWriter w;
  w.u8(msg.packet_number);
  w.u8(msg.players_per_team);
  w.u8(static_cast<std::uint8_t>(msg.state));
  w.u8(msg.first_half ? 1 : 0);
  w.u8(msg.kickoff_team);
  w.u8(msg.secondary_state);
  w.i16(msg.secs_remaining);
  w.i16(msg.secondary_time);
  for (const TeamInfo & t : msg.teams) {
    w.u8(t.team_number);
    w.u8(t.team_colour);
    w.u8(t.score);
    w.u8(t.penalty_shot);
  }
  return w.take();
}

std::vector<std::uint8_t> encode_payload(const Payload & msg)
{
  return std::visit([](const auto & m) {return encode_payload(m);}, msg);
}

Payload decode_payload(std::uint8_t tag, std::span<const std::uint8_t> bytes)
{
  ByteReader r(bytes);
  Payload out = [&]() -> Payload {
      switch (tag) {
        case static_cast<std::uint8_t>(PayloadType::kImage): return decode_image(r);
        case static_cast<std::uint8_t>(PayloadType::kImu): return decode_imu(r);
        case static_cast<std::uint8_t>(PayloadType::kJointState): return decode_joint_state(r);
        case static_cast<std::uint8_t>(PayloadType::kGameState): return decode_game_state(r);
        default:
          throw Error(ErrorCode::kBadTag, "payload type tag " + std::to_string(tag));
      }
    }();
  r.expect_end();
  payload_diag(out).bump();
  return out;
}

std::vector<std::uint8_t> frame(
  DomainId domain, const TopicName & topic, std::uint64_t seq, std::uint8_t tag,
  std::span<const std::uint8_t> payload)
{
  ByteWriter w;
  w.bytes(kFrameMagic);
  w.u32(domain.id);
  w.u16(static_cast<std::uint16_t>(topic.str().size()));
  w.bytes(
    std::span<const std::uint8_t>(
      reinterpret_cast<const std::uint8_t *>(topic.str().data()), topic.str().size()));
  w.u8(tag);
  w.u64(seq);
  w.u32(static_cast<std::uint32_t>(payload.size()));
  w.bytes(payload);
  return w.take();
}

WireFrame parse_frame(std::span<const std::uint8_t> bytes)
{
  ByteReader r(bytes);
  auto magic = r.bytes(4);
  if (std::memcmp(magic.data(), kFrameMagic, 4) != 0) {
    throw Error(
      ErrorCode::kBadMagic,
      "frame magic '" + std::string(magic.begin(), magic.end()) + "'");
  }
  DomainId domain{r.u32()};
  std::uint16_t topic_len = r.u16();
  auto topic_bytes = r.bytes(topic_len);
  TopicName topic =
    TopicName::validate(std::string_view(reinterpret_cast<const char *>(topic_bytes.data()),
    topic_bytes.size()));
  std::uint8_t tag = r.u8();
  std::uint64_t seq = r.u64();
  std::uint32_t payload_len = r.u32();
  auto payload = r.bytes(payload_len);
  r.expect_end();
  return WireFrame{
    domain, std::move(topic), tag, seq,
    std::vector<std::uint8_t>(payload.begin(), payload.end())};
}

}  // namespace ngbus::wire
