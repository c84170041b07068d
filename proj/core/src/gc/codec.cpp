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

#include "ngbus/gc/codec.hpp"

#include <cstring>
#include <string>

#include "ngbus/errors.hpp"

namespace ngbus::gc {

GameState parse_gc_packet(std::span<const std::uint8_t> bytes)
{
  if (bytes.size() != kGcPacketSize) {
    throw Error(
      ErrorCode::kBadLength,
      "GameController packet of " + std::to_string(bytes.size()) + " bytes, expected 24");
  }
  if (std::memcmp(bytes.data(), kGcMagic, 4) != 0) {
    throw Error(ErrorCode::kBadMagic, "GameController packet magic mismatch");
  }
  const std::uint16_t version =
    static_cast<std::uint16_t>(bytes[4] | (static_cast<std::uint16_t>(bytes[5]) << 8));
  if (version != kGcVersion) {
    throw Error(
      ErrorCode::kBadVersion, "GameController protocol version " + std::to_string(version));
  }
  if (bytes[8] > 4) {
    throw Error(ErrorCode::kBadEnum, "game_state byte " + std::to_string(bytes[8]));
  }
  if (bytes[9] > 1) {
    throw Error(ErrorCode::kBadEnum, "first_half byte " + std::to_string(bytes[9]));
  }
  const auto i16_at = [&bytes](std::size_t off) {
      return static_cast<std::int16_t>(
        static_cast<std::uint16_t>(bytes[off]) |
        (static_cast<std::uint16_t>(bytes[off + 1]) << 8));
    };
  std::array<TeamInfo, 2> teams{};
  for (std::size_t i = 0; i < 2; ++i) {
    const std::size_t off = 16 + 4 * i;
    teams[i] = TeamInfo{bytes[off], bytes[off + 1], bytes[off + 2], bytes[off + 3]};
  }
  return GameState(
    bytes[6], bytes[7], static_cast<GamePhase>(bytes[8]), bytes[9] == 1, bytes[10], bytes[11],
    i16_at(12), i16_at(14), teams);
}

std::array<std::uint8_t, kGcPacketSize> encode_gc_packet(const GameState & state)
{
  std::array<std::uint8_t, kGcPacketSize> out{};
  std::memcpy(out.data(), kGcMagic, 4);
  out[4] = static_cast<std::uint8_t>(kGcVersion & 0xFF);
  out[5] = static_cast<std::uint8_t>(kGcVersion >> 8);
  out[6] = state.packet_number;
  out[7] = state.players_per_team;
  out[8] = static_cast<std::uint8_t>(state.state);
  out[9] = state.first_half ? 1 : 0;
  out[10] = state.kickoff_team;
  out[11] = state.secondary_state;
  const auto put_i16 = [&out](std::size_t off, std::int16_t v) {
      const auto u = static_cast<std::uint16_t>(v);
      out[off] = static_cast<std::uint8_t>(u & 0xFF);
      out[off + 1] = static_cast<std::uint8_t>(u >> 8);
    };
  put_i16(12, state.secs_remaining);
  put_i16(14, state.secondary_time);
  for (std::size_t i = 0; i < 2; ++i) {
    const std::size_t off = 16 + 4 * i;
    out[off] = state.teams[i].team_number;
    out[off + 1] = state.teams[i].team_colour;
    out[off + 2] = state.teams[i].score;
    out[off + 3] = state.teams[i].penalty_shot;
  }
  return out;
}

}  // namespace ngbus::gc
