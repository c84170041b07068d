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

#ifndef NGBUS__BENCH__GC_SIM_HPP_
#define NGBUS__BENCH__GC_SIM_HPP_

#include <atomic>
#include <cstdint>
#include <thread>

#include "ngbus/messages.hpp"

namespace ngbus::bench {

/// Deterministic synthetic game state: phases cycle INITIAL/READY/SET/PLAYING
/// as tick grows, scores creep up, packet_number wraps at 255.
GameState synthetic_game_state(std::uint64_t tick, std::uint32_t seed);

/// Stand-in for the league referee tool: broadcasts encoded packets to
/// 127.0.0.1:port at rate_hz on a background thread until destroyed.
class GcTrafficSource
{
public:
  GcTrafficSource(std::uint16_t port, double rate_hz, std::uint32_t seed);
  ~GcTrafficSource();

  GcTrafficSource(const GcTrafficSource &) = delete;
  GcTrafficSource & operator=(const GcTrafficSource &) = delete;

  std::uint64_t sent() const noexcept {return sent_.load(std::memory_order_relaxed);}

private:
  std::atomic<bool> stop_{false};
  std::atomic<std::uint64_t> sent_{0};
  std::thread thread_;
};

}  // namespace ngbus::bench

#endif  // NGBUS__BENCH__GC_SIM_HPP_
