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

#ifndef NGBUS__GC__CODEC_HPP_
#define NGBUS__GC__CODEC_HPP_

#include <array>
#include <cstdint>
#include <span>

#include "ngbus/messages.hpp"

namespace ngbus::gc {

/// GameController packet layout (24 bytes, all little-endian):
///
///   [0..4)   magic "RGme"
///   [4..6)   version u16 = 12
///   [6]      packet_number u8
///   [7]      players_per_team u8
///   [8]      game_state u8 (0=INITIAL 1=READY 2=SET 3=PLAYING 4=FINISHED)
///   [9]      first_half u8 (0/1)
///   [10]     kickoff_team u8
///   [11]     secondary_state u8
///   [12..14) secs_remaining i16
///   [14..16) secondary_time i16
///   [16..20) team A {team_number, team_colour, score, penalty_shot}
///   [20..24) team B {team_number, team_colour, score, penalty_shot}
///
/// This is a frozen subset sufficient for game-state/score/kickoff semantics;
/// it is not interoperable with the official referee tool.
inline constexpr std::size_t kGcPacketSize = 24;
inline constexpr std::uint8_t kGcMagic[4] = {'R', 'G', 'm', 'e'};
inline constexpr std::uint16_t kGcVersion = 12;

/// \throws Error{kBadLength} (length != 24), Error{kBadMagic},
/// Error{kBadVersion}, Error{kBadEnum} (game_state > 4 or first_half > 1).
GameState parse_gc_packet(std::span<const std::uint8_t> bytes);

std::array<std::uint8_t, kGcPacketSize> encode_gc_packet(const GameState & state);

}  // namespace ngbus::gc

#endif  // NGBUS__GC__CODEC_HPP_
