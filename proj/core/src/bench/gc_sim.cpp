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

#include "ngbus/bench/gc_sim.hpp"

#include <chrono>

#include "ngbus/gc/codec.hpp"
#include "../inter/socket_util.hpp"

namespace ngbus::bench {

GameState synthetic_game_state(std::uint64_t tick, std::uint32_t seed)
{
  static constexpr GamePhase kCycle[4] = {
    GamePhase::kInitial, GamePhase::kReady, GamePhase::kSet, GamePhase::kPlaying};
  const std::uint64_t mixed = tick + seed;
  std::array<TeamInfo, 2> teams{};
  teams[0] = TeamInfo{
    static_cast<std::uint8_t>(1 + seed % 90), 0,
    static_cast<std::uint8_t>(tick / 64 % 10), 0};
  teams[1] = TeamInfo{
    static_cast<std::uint8_t>(2 + seed % 90), 1,
    static_cast<std::uint8_t>(tick / 96 % 10), 0};
  return GameState(
    static_cast<std::uint8_t>(tick & 0xFF),
    4,
    kCycle[(tick / 8) % 4],
    (tick / 512) % 2 == 0,
    static_cast<std::uint8_t>(mixed % 2),
    0,
    static_cast<std::int16_t>(600 - static_cast<std::int16_t>(tick % 600)),
    0,
    teams);
}

GcTrafficSource::GcTrafficSource(std::uint16_t port, double rate_hz, std::uint32_t seed)
: thread_(
    [this, port, rate_hz, seed] {
      inter::Fd sock = inter::udp_socket();
      const auto period = std::chrono::nanoseconds(
        static_cast<std::int64_t>(1e9 / (rate_hz > 0.0 ? rate_hz : 2.0)));
      auto next = std::chrono::steady_clock::now() + period;
      std::uint64_t tick = 0;
      while (!stop_.load(std::memory_order_relaxed)) {
        const auto packet = gc::encode_gc_packet(synthetic_game_state(tick++, seed));
        inter::udp_send_to(sock, port, packet.data(), packet.size());
        sent_.fetch_add(1, std::memory_order_relaxed);
        while (!stop_.load(std::memory_order_relaxed) &&
          std::chrono::steady_clock::now() < next)
        {
          std::this_thread::sleep_for(std::chrono::milliseconds(10));
        }
        next += period;
      }
    })
{
}

GcTrafficSource::~GcTrafficSource()
{
  stop_.store(true);
  if (thread_.joinable()) {
    thread_.join();
  }
}

}  // namespace ngbus::bench
